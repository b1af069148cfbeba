"""Cograph vertex deletion as an implicit 4-hitting-set instance.

Each induced P4 is a 4-set; a vertex deletion set is a hitting set. Marked
vertices are promised to stay out of the solution, so a P4 with marked
members only has its unmarked members left as candidates (its *effective*
size). The search driver repeats:

1. branch on the smallest effective set once it has at most 3 members;
2. otherwise mark a P4-dominated vertex and start over;
3. otherwise branch on an obstruction of the extended P4-sparse class,
   trying its breaking vertices one by one (marking the ones passed over)
   and finally the pair rule;
4. when none is left, the only P4-sparse obstructions are isolated C5s:
   drop two vertices from each, then finish with the mark-aware spider solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, bits, delete_vertices, to_mask
from .obstructions import (
    ObstructionInstance,
    breaking_vertices,
    find_c5s,
    find_extended_obstruction,
)
from .scan import p4_masks, sorted_tuple
from .search import Branching, Problem, SearchStats, Solution, Terminal, solve
from .spiders import constrained_spider_vertex_deletion


@dataclass(frozen=True)
class HittingState:
    graph: Graph
    marks: int  # vertex mask in current ids
    p4_sets: frozenset[int]
    k: int
    chosen: tuple[int, ...] = ()  # original labels

    @classmethod
    def initial(cls, g: Graph, k: int) -> "HittingState":
        return cls(g, 0, frozenset(p4_masks(g)), k)

    def effective(self, s: int) -> int:
        return s & ~self.marks

    def is_marked(self, v: int) -> bool:
        return bool(self.marks >> v & 1)

    def mark(self, vs: Iterable[int]) -> "HittingState":
        return HittingState(self.graph, self.marks | to_mask(vs), self.p4_sets, self.k, self.chosen)

    def include(self, vs: Iterable[int]) -> "HittingState":
        vs = sorted(set(vs))
        assert not self.marks & to_mask(vs), "marked vertices cannot be deleted"
        g = delete_vertices(self.graph, vs)
        gone = to_mask(vs)
        marks, new = 0, 0
        for old in range(self.graph.n):
            if gone >> old & 1:
                continue
            if self.marks >> old & 1:
                marks |= 1 << new
            new += 1
        # full re-enumeration keeps the 4-set family exact
        return HittingState(
            g,
            marks,
            frozenset(p4_masks(g)),
            self.k - len(vs),
            self.chosen + tuple(self.graph.labels[v] for v in vs),
        )

    def consistent(self) -> bool:
        return self.p4_sets == frozenset(p4_masks(self.graph)) and not (
            set(self.chosen) & {self.graph.labels[v] for v in bits(self.marks)}
        )


def find_dominated(state: HittingState) -> tuple[int, int] | None:
    """First ``(u, v)`` with u unmarked and v unmarked and in every P4 holding u.

    A marked dominator cannot take u's place in a solution, so it does not count.
    """
    n = state.graph.n
    inside = [-1] * n
    seen = 0
    for s in state.p4_sets:
        seen |= s
        for v in bits(s):
            inside[v] &= s
    for u in bits(seen & ~state.marks):
        cand = inside[u] & ~(1 << u) & ~state.marks
        if cand:
            return u, (cand & -cand).bit_length() - 1
    return None


def smallest_set(state: HittingState) -> int | None:
    best = None
    for s in state.p4_sets:
        eff = state.effective(s)
        key = (eff.bit_count(), sorted_tuple(eff))
        if best is None or key < best[0]:
            best = (key, eff)
    return None if best is None else best[1]


def branch_3set(state: HittingState, eff: int | None = None) -> list[HittingState]:
    """Children for a set with at most three unmarked members.

    Child i deletes the i-th candidate after marking the ones before it, so a
    3-set gives three children, a 2-set two and a 1-set one forced child.
    """
    if eff is None:
        eff = smallest_set(state)
    cands = sorted_tuple(eff)
    if not 1 <= len(cands) <= 3:
        raise ValueError("branch_3set needs a set with 1 to 3 unmarked vertices")
    if state.k < 1:
        return []
    return [state.mark(cands[:i]).include([v]) for i, v in enumerate(cands)]


def branch_obstruction(state: HittingState, inst: ObstructionInstance) -> list[HittingState]:
    singles, pair = breaking_vertices(inst.kind)
    children = []
    passed: list[int] = []
    for pos in singles:
        v = inst.vertex(pos)
        if state.is_marked(v):
            continue
        if state.k >= 1:
            children.append(state.mark(passed).include([v]))
        passed.append(v)
    ends = [inst.vertex(p) for p in pair]
    if state.k >= 2 and not any(state.is_marked(v) for v in ends):
        children.append(state.mark(passed).include(ends))
    return children


def c5_cleanup(state: HittingState) -> HittingState | None:
    """Delete two unmarked vertices from every induced C5, or None to backtrack.

    Only valid on extended P4-sparse graphs, where each C5 carries its own
    P4s and shares none with the rest of the graph.
    """
    drop: list[int] = []
    for c5 in find_c5s(state.graph, set(state.p4_sets)):
        cm = to_mask(c5)
        assert all(not s & cm or not s & ~cm for s in state.p4_sets), (
            f"C5 {c5} overlaps another P4; graph is not extended P4-sparse"
        )
        free = [v for v in c5 if not state.is_marked(v)]
        if len(free) < 2:
            return None
        drop.extend(free[:2])
    return state.include(drop) if drop else state


def expand_hitting_set(state: HittingState, stats: SearchStats) -> Terminal | Branching:
    while True:
        if not state.p4_sets:
            return Terminal(state.chosen)
        eff = smallest_set(state)
        if eff == 0 or state.k <= 0:
            return Terminal(None)
        if eff.bit_count() <= 3:
            return Branching(f"{eff.bit_count()}-set", branch_3set(state, eff))
        dom = find_dominated(state)
        if dom is None:
            break
        state = state.mark([dom[0]])
    inst = find_extended_obstruction(state.graph, set(state.p4_sets))
    if inst is not None:
        return Branching(inst.kind.value, branch_obstruction(state, inst))
    cleaned = c5_cleanup(state)
    if cleaned is None or cleaned.k < 0:
        return Terminal(None)
    stats.subroutine_calls += 1
    sol = constrained_spider_vertex_deletion(cleaned.graph, bits(cleaned.marks))
    if not sol.feasible or sol.cost > cleaned.k:
        return Terminal(None)
    return Terminal(cleaned.chosen + tuple(cleaned.graph.labels[v] for v in sol.deletions))


def solve_cograph_vertex_hs(g: Graph, k: int) -> tuple[Solution, SearchStats]:
    return solve(g, k, Problem.COGRAPH_VERTEX_HS)
