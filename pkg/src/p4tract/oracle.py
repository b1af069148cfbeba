"""Brute-force exact deletion solvers.

These enumerate candidate deletion sets by ascending size and stop at the
first one that works. They are slow on purpose and share nothing with the
search code beyond the P4/C4 scans, so they can serve as ground truth.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Literal

from .graph import Edge, Graph, delete_edges, edge, to_mask
from .scan import DeletionTarget, satisfies

DEFAULT_MAX_N = 14
DEFAULT_MAX_M = 30


class OracleSizeError(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    minimum: int
    witness: tuple
    explored: int


def max_oracle_n() -> int:
    return int(os.environ.get("P4TRACT_MAX_ORACLE_N", DEFAULT_MAX_N))


def oracle_min_edge_deletion(
    g: Graph,
    target: DeletionTarget,
    forbidden: Iterable[Edge] = (),
    max_m: int = DEFAULT_MAX_M,
) -> OracleResult:
    """Smallest edge set (avoiding ``forbidden``) whose removal meets ``target``.

    Edges are given and returned in ``g``'s own ids.
    """
    if g.n > max_oracle_n() or g.m > max_m:
        raise OracleSizeError(f"instance too large for the oracle (n={g.n}, m={g.m})")
    banned = {edge(*e) for e in forbidden}
    cands = [e for e in g.edges() if e not in banned]
    explored = 0
    for size in range(len(cands) + 1):
        for es in combinations(cands, size):
            explored += 1
            if satisfies(delete_edges(g, es), target):
                return OracleResult(size, es, explored)
    raise ValueError("no feasible deletion set avoids the forbidden edges")


def oracle_min_vertex_deletion(
    g: Graph, target: DeletionTarget, forbidden: Iterable[int] = ()
) -> OracleResult:
    if g.n > max_oracle_n():
        raise OracleSizeError(f"instance too large for the oracle (n={g.n})")
    banned = set(forbidden)
    cands = [v for v in range(g.n) if v not in banned]
    explored = 0
    for size in range(len(cands) + 1):
        for vs in combinations(cands, size):
            explored += 1
            if satisfies(g, target, g.full & ~to_mask(vs)):
                return OracleResult(size, vs, explored)
    raise ValueError("no feasible deletion set avoids the forbidden vertices")


def enumerate_minimal_local_solutions(
    pattern: Graph, mode: Literal["edge", "vertex"], target: DeletionTarget
) -> list[tuple]:
    """Every inclusion-minimal deletion set that puts ``pattern`` in ``target``.

    Sets are ordered by size, then lexicographically. Edge sets are tuples of
    ``(u, v)`` pairs, vertex sets tuples of vertex ids.
    """
    if pattern.n > 5:
        raise OracleSizeError("local patterns have at most 5 vertices")
    if mode == "edge":
        ground: list = pattern.edges()

        def works(sel):
            return satisfies(delete_edges(pattern, sel), target)
    else:
        ground = list(range(pattern.n))

        def works(sel):
            return satisfies(pattern, target, pattern.full & ~to_mask(sel))

    found: list[tuple] = []
    for size in range(len(ground) + 1):
        for sel in combinations(ground, size):
            if any(set(f) <= set(sel) for f in found):
                continue
            if works(sel):
                found.append(sel)
    return found
