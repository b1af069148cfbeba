"""Forbidden induced subgraphs and the local deletion families built from them.

Canonical patterns use positions 0..4 (0..3 for P4 and C4):

* C5: cycle 0-1-2-3-4
* P5: path 0-1-2-3-4
* FORK: leaves 0 and 1 on centre 2, then path 2-3-4
* KITE: K4 on {0,1,2,3} minus {0,2}, pendant 4 on 0
* PAN4: cycle 0-1-2-3 plus pendant 4 on 0
* CO_P5, CO_PAN4: complements of P5 and PAN4 on the same positions

Branching rules are not transcribed from anywhere; they are computed by
exhaustive enumeration over each pattern and cached.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Literal

from .graph import Graph, complement
from .oracle import enumerate_minimal_local_solutions
from .scan import (
    DeletionTarget,
    crowded_fivesets,
    iter_c4s,
    iter_p4s,
    p4_masks,
    satisfies,
    sorted_tuple,
)

Mode = Literal["edge", "vertex"]


class ObstructionKind(enum.Enum):
    P4 = "P4"
    C4 = "C4"
    C5 = "C5"
    P5 = "P5"
    CO_P5 = "co-P5"
    FORK = "fork"
    KITE = "kite"
    PAN4 = "4-pan"
    CO_PAN4 = "co-4-pan"


FIVE_VERTEX_KINDS = (
    ObstructionKind.C5,
    ObstructionKind.P5,
    ObstructionKind.CO_P5,
    ObstructionKind.PAN4,
    ObstructionKind.CO_PAN4,
    ObstructionKind.FORK,
    ObstructionKind.KITE,
)
EXTENDED_KINDS = FIVE_VERTEX_KINDS[1:]

_PATTERN_EDGES = {
    ObstructionKind.P4: (4, [(0, 1), (1, 2), (2, 3)]),
    ObstructionKind.C4: (4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
    ObstructionKind.C5: (5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
    ObstructionKind.P5: (5, [(0, 1), (1, 2), (2, 3), (3, 4)]),
    ObstructionKind.FORK: (5, [(0, 2), (1, 2), (2, 3), (3, 4)]),
    ObstructionKind.KITE: (5, [(0, 1), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)]),
    ObstructionKind.PAN4: (5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)]),
}


@lru_cache(maxsize=None)
def pattern(kind: ObstructionKind) -> Graph:
    if kind is ObstructionKind.CO_P5:
        return complement(pattern(ObstructionKind.P5))
    if kind is ObstructionKind.CO_PAN4:
        return complement(pattern(ObstructionKind.PAN4))
    n, es = _PATTERN_EDGES[kind]
    return Graph.from_edges(n, es)


@dataclass(frozen=True)
class ObstructionInstance:
    kind: ObstructionKind
    embedding: tuple[int, ...]  # canonical position -> graph vertex

    def vertex(self, pos: int) -> int:
        return self.embedding[pos]


@dataclass(frozen=True)
class BranchRuleSet:
    kind: ObstructionKind
    mode: Mode
    target: DeletionTarget
    rules: tuple[tuple, ...]

    def apply(self, inst: ObstructionInstance) -> list[tuple]:
        """Map each rule's canonical positions through ``inst``'s embedding."""
        emb = inst.embedding
        if self.mode == "vertex":
            return [tuple(emb[p] for p in rule) for rule in self.rules]
        out = []
        for rule in self.rules:
            out.append(tuple(tuple(sorted((emb[a], emb[b]))) for a, b in rule))
        return out


# ---------------------------------------------------------------------------
# classification of 5-vertex graphs

_PAIRS5 = list(combinations(range(5), 2))


def _code(g: Graph, verts: tuple[int, ...]) -> int:
    code = 0
    for i, (a, b) in enumerate(_PAIRS5):
        if g.adjacent(verts[a], verts[b]):
            code |= 1 << i
    return code


@lru_cache(maxsize=1)
def _classification_table() -> dict[int, tuple[ObstructionKind, tuple[int, ...]]]:
    # code of a 5-vertex graph -> (kind, perm) with perm[position] = local index
    table: dict[int, tuple[ObstructionKind, tuple[int, ...]]] = {}
    for kind in FIVE_VERTEX_KINDS:
        pat = pattern(kind)
        for perm in permutations(range(5)):
            code = 0
            for i, (a, b) in enumerate(_PAIRS5):
                # local vertices a, b sit at canonical positions inv[a], inv[b]
                if pat.adjacent(perm.index(a), perm.index(b)):
                    code |= 1 << i
            table.setdefault(code, (kind, perm))
    return table


def classify_5graph(g5: Graph) -> tuple[ObstructionKind, tuple[int, ...]] | None:
    """Kind of a 5-vertex graph plus the position map, or None if P4-sparse.

    The map sends canonical position ``p`` to vertex ``perm[p]`` of ``g5``.
    """
    if g5.n != 5:
        raise ValueError(f"expected 5 vertices, got {g5.n}")
    return _classification_table().get(_code(g5, tuple(range(5))))


def _instance_on(g: Graph, verts: tuple[int, ...]) -> ObstructionInstance:
    kind, perm = _classification_table()[_code(g, verts)]
    return ObstructionInstance(kind, tuple(verts[perm[p]] for p in range(5)))


# ---------------------------------------------------------------------------
# finders; all return the lexicographically first instance by sorted vertex set


def find_p4(g: Graph) -> ObstructionInstance | None:
    best = None
    for path in iter_p4s(g):
        key = tuple(sorted(path))
        if best is None or key < best[0]:
            best = (key, path)
    if best is None:
        return None
    path = best[1]
    if path[0] > path[3]:
        path = path[::-1]
    return ObstructionInstance(ObstructionKind.P4, path)


def find_c4(g: Graph) -> ObstructionInstance | None:
    best = None
    for cyc in iter_c4s(g):
        key = tuple(sorted(cyc))
        if best is None or key < best[0]:
            best = (key, cyc)
    return None if best is None else ObstructionInstance(ObstructionKind.C4, best[1])


def find_p4_sparse_obstruction(
    g: Graph, p4s: set[int] | None = None
) -> ObstructionInstance | None:
    five = crowded_fivesets(g, p4s)
    if not five:
        return None
    return _instance_on(g, min(sorted_tuple(m) for m in five))


def find_extended_obstruction(
    g: Graph, p4s: set[int] | None = None
) -> ObstructionInstance | None:
    """Like :func:`find_p4_sparse_obstruction` but C5s are allowed to stay."""
    table = _classification_table()
    cands = []
    for m in crowded_fivesets(g, p4s):
        verts = sorted_tuple(m)
        if table[_code(g, verts)][0] is not ObstructionKind.C5:
            cands.append(verts)
    return _instance_on(g, min(cands)) if cands else None


def find_c5s(g: Graph, p4s: set[int] | None = None) -> list[tuple[int, ...]]:
    """Vertex sets of all induced C5s, sorted."""
    if p4s is None:
        p4s = p4_masks(g)
    table = _classification_table()
    out = []
    for m in crowded_fivesets(g, p4s):
        verts = sorted_tuple(m)
        if table[_code(g, verts)][0] is ObstructionKind.C5:
            out.append(verts)
    return sorted(out)


# ---------------------------------------------------------------------------
# rule synthesis


@lru_cache(maxsize=None)
def synthesize_rules(kind: ObstructionKind, mode: Mode, target: DeletionTarget) -> BranchRuleSet:
    pat = pattern(kind)
    if satisfies(pat, target):
        raise ValueError(f"{kind.value} already satisfies {target.value}; nothing to branch on")
    rules = enumerate_minimal_local_solutions(pat, mode, target)
    return BranchRuleSet(kind, mode, target, tuple(rules))


def breaking_vertices(kind: ObstructionKind) -> tuple[tuple[int, int, int], tuple[int, int]]:
    """The three single-vertex rules and the one pair rule of a 5-vertex obstruction."""
    rules = synthesize_rules(kind, "vertex", DeletionTarget.P4_FREE).rules
    singles = [r[0] for r in rules if len(r) == 1]
    pairs = [r for r in rules if len(r) == 2]
    if len(singles) != 3 or len(pairs) != 1 or len(rules) != 4:
        raise ValueError(f"{kind.value} has no breaking-vertex structure")
    return (singles[0], singles[1], singles[2]), (pairs[0][0], pairs[0][1])


def all_rule_sets() -> list[BranchRuleSet]:
    """Every supported (kind, mode, target) family, in a stable order."""
    out = []
    for kind in ObstructionKind:
        for mode in ("edge", "vertex"):
            for target in DeletionTarget:
                try:
                    out.append(synthesize_rules(kind, mode, target))
                except ValueError:
                    pass
    return out
