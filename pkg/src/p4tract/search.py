"""Bounded search trees for cograph / trivially perfect edge and vertex deletion.

Every solver is a decision procedure: given ``(g, k)`` it either returns a
deletion set of size at most ``k`` or reports that none exists. The solvers
share one depth-first driver; they differ only in how a single node is
expanded:

* the target check short-circuits first;
* a node with no budget left and a remaining obstruction is a dead leaf;
* otherwise an obstruction is located and each of its minimal local deletion
  sets becomes a child, in rule order;
* once no P4-sparse obstruction remains, an exact subroutine finishes.

Rules larger than the remaining budget are never expanded, so the sizes of
the rules along any root-to-leaf path sum to at most ``k``.
"""

from __future__ import annotations

import enum
import math
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from .graph import Edge, Graph, delete_edges, delete_vertices, edge, to_mask
from .obstructions import (
    ObstructionKind,
    find_c4,
    find_p4,
    find_p4_sparse_obstruction,
    synthesize_rules,
)
from .scan import DeletionTarget, p4_masks, satisfies
from .spiders import spider_edge_deletion, spider_vertex_deletion, tp_edge_final, tp_vertex_final

P4_FREE = DeletionTarget.P4_FREE
TP = DeletionTarget.P4_AND_C4_FREE


class Problem(enum.Enum):
    COGRAPH_EDGE = "cograph-edge"
    TP_EDGE = "tp-edge"
    COGRAPH_VERTEX = "cograph-vertex"
    COGRAPH_VERTEX_HS = "cograph-vertex-hs"
    TP_VERTEX = "tp-vertex"
    COGRAPH_EDGE_NAIVE = "cograph-edge-naive"
    TP_EDGE_NAIVE = "tp-edge-naive"

    @property
    def mode(self) -> str:
        return "vertex" if "vertex" in self.value else "edge"

    @property
    def target(self) -> DeletionTarget:
        return TP if self.value.startswith("tp") else P4_FREE


# leaf-count growth constants of each solver's worst branching rule
BOUND_CONSTANTS = {
    Problem.COGRAPH_EDGE: 2.562,
    Problem.TP_EDGE: 2.450,
    Problem.COGRAPH_VERTEX: 3.303,
    Problem.COGRAPH_VERTEX_HS: 3.115,
    Problem.TP_VERTEX: 3.303,
    Problem.COGRAPH_EDGE_NAIVE: 3.0,
    Problem.TP_EDGE_NAIVE: 3.0,
}


@dataclass
class SearchStats:
    nodes: int = 0
    leaves: int = 0
    max_depth: int = 0
    branch_histogram: Counter = field(default_factory=Counter)
    subroutine_calls: int = 0

    def merge(self, other: "SearchStats") -> "SearchStats":
        return SearchStats(
            self.nodes + other.nodes,
            self.leaves + other.leaves,
            max(self.max_depth, other.max_depth),
            self.branch_histogram + other.branch_histogram,
            self.subroutine_calls + other.subroutine_calls,
        )

    def as_dict(self) -> dict:
        return {
            "nodes": self.nodes,
            "leaves": self.leaves,
            "max_depth": self.max_depth,
            "branch_histogram": dict(sorted(self.branch_histogram.items())),
            "subroutine_calls": self.subroutine_calls,
        }


@dataclass(frozen=True)
class Solution:
    feasible: bool
    deletions: tuple = ()

    @property
    def budget_used(self) -> int:
        return len(self.deletions)


@dataclass(frozen=True)
class Node:
    graph: Graph
    k: int
    deleted: tuple = ()  # in original labels


@dataclass(frozen=True)
class Terminal:
    deletions: tuple | None


@dataclass(frozen=True)
class Branching:
    kind: str
    children: list


Expand = Callable[[Any, SearchStats], "Terminal | Branching"]


def _dfs(expand: Expand, node: Any, depth: int, stats: SearchStats) -> tuple | None:
    stats.nodes += 1
    stats.max_depth = max(stats.max_depth, depth)
    step = expand(node, stats)
    if isinstance(step, Terminal):
        stats.leaves += 1
        return step.deletions
    stats.branch_histogram[step.kind] += 1
    if not step.children:
        stats.leaves += 1
        return None
    for child in step.children:
        found = _dfs(expand, child, depth + 1, stats)
        if found is not None:
            return found
    return None


def _subtree(expand: Expand, node: Any) -> tuple[tuple | None, SearchStats]:
    stats = SearchStats()
    return _dfs(expand, node, 1, stats), stats


def run_search(expand: Expand, root: Any, threads: int = 1) -> tuple[tuple | None, SearchStats]:
    """Depth-first search from ``root``; returns the first deletion set found.

    With ``threads > 1`` the root's children are explored by worker processes
    and the first feasible child in rule order wins. Every child is explored
    to completion in that mode, so node counts can exceed a serial run.
    """
    if threads <= 1:
        stats = SearchStats()
        return _dfs(expand, root, 0, stats), stats
    stats = SearchStats(nodes=1)
    step = expand(root, stats)
    if isinstance(step, Terminal) or not step.children:
        stats.leaves += 1
        return (step.deletions if isinstance(step, Terminal) else None), stats
    stats.branch_histogram[step.kind] += 1
    with ProcessPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(_subtree, [expand] * len(step.children), step.children))
    found = None
    for dels, sub in results:
        stats = stats.merge(sub)
        if found is None and dels is not None:
            found = dels
    return found, stats


# ---------------------------------------------------------------------------
# children


def edge_child(node: Node, es: Sequence[Edge]) -> Node:
    g = node.graph
    return Node(delete_edges(g, es), node.k - len(es), node.deleted + tuple(g.label_edge(e) for e in es))


def vertex_child(node: Node, vs: Sequence[int]) -> Node:
    g = node.graph
    return Node(delete_vertices(g, vs), node.k - len(vs), node.deleted + tuple(g.labels[v] for v in vs))


def _branch(node: Node, kind: ObstructionKind, rules: list[tuple], mode: str) -> Branching:
    make = edge_child if mode == "edge" else vertex_child
    return Branching(kind.value, [make(node, r) for r in rules if len(r) <= node.k])


def _finish(node: Node, stats: SearchStats, solver, mode: str) -> Terminal:
    stats.subroutine_calls += 1
    sol = solver(node.graph)
    if sol.cost > node.k:
        return Terminal(None)
    g = node.graph
    if mode == "edge":
        extra = tuple(g.label_edge(e) for e in sol.deletions)
    else:
        extra = tuple(g.labels[v] for v in sol.deletions)
    return Terminal(node.deleted + extra)


# ---------------------------------------------------------------------------
# node expansion, one function per solver


def expand_cograph_edge(node: Node, stats: SearchStats) -> Terminal | Branching:
    p4s = p4_masks(node.graph)
    if not p4s:
        return Terminal(node.deleted)
    if node.k <= 0:
        return Terminal(None)
    obs = find_p4_sparse_obstruction(node.graph, p4s)
    if obs is None:
        return _finish(node, stats, spider_edge_deletion, "edge")
    rules = synthesize_rules(obs.kind, "edge", P4_FREE).apply(obs)
    return _branch(node, obs.kind, rules, "edge")


def expand_tp_edge(node: Node, stats: SearchStats) -> Terminal | Branching:
    g = node.graph
    p4s = p4_masks(g)
    c4 = find_c4(g)
    if not p4s and c4 is None:
        return Terminal(node.deleted)
    if node.k <= 0:
        return Terminal(None)
    if c4 is not None:
        return _branch(node, c4.kind, synthesize_rules(c4.kind, "edge", TP).apply(c4), "edge")
    obs = find_p4_sparse_obstruction(g, p4s)
    if obs is None:
        return _finish(node, stats, tp_edge_final, "edge")
    # any TP solution makes the obstruction P4-free, so P4-free rules are complete;
    # C4s created by a rule are caught when the child re-enters the C4 step
    rules = synthesize_rules(obs.kind, "edge", P4_FREE).apply(obs)
    return _branch(node, obs.kind, rules, "edge")


def expand_cograph_vertex(node: Node, stats: SearchStats) -> Terminal | Branching:
    p4s = p4_masks(node.graph)
    if not p4s:
        return Terminal(node.deleted)
    if node.k <= 0:
        return Terminal(None)
    obs = find_p4_sparse_obstruction(node.graph, p4s)
    if obs is None:
        return _finish(node, stats, spider_vertex_deletion, "vertex")
    rules = synthesize_rules(obs.kind, "vertex", P4_FREE).apply(obs)
    return _branch(node, obs.kind, rules, "vertex")


def expand_tp_vertex(node: Node, stats: SearchStats) -> Terminal | Branching:
    g = node.graph
    if satisfies(g, TP):
        return Terminal(node.deleted)
    if node.k <= 0:
        return Terminal(None)
    obs = find_p4_sparse_obstruction(g)
    if obs is None:
        return _finish(node, stats, tp_vertex_final, "vertex")
    rules = synthesize_rules(obs.kind, "vertex", TP).apply(obs)
    return _branch(node, obs.kind, rules, "vertex")


def expand_naive_cograph_edge(node: Node, stats: SearchStats) -> Terminal | Branching:
    p4 = find_p4(node.graph)
    if p4 is None:
        return Terminal(node.deleted)
    if node.k <= 0:
        return Terminal(None)
    return _branch(node, p4.kind, synthesize_rules(p4.kind, "edge", P4_FREE).apply(p4), "edge")


def expand_naive_tp_edge(node: Node, stats: SearchStats) -> Terminal | Branching:
    c4 = find_c4(node.graph)
    p4 = find_p4(node.graph) if c4 is None else None
    if c4 is None and p4 is None:
        return Terminal(node.deleted)
    if node.k <= 0:
        return Terminal(None)
    if c4 is not None:
        return _branch(node, c4.kind, synthesize_rules(c4.kind, "edge", TP).apply(c4), "edge")
    return _branch(node, p4.kind, synthesize_rules(p4.kind, "edge", P4_FREE).apply(p4), "edge")


_EXPANDERS = {
    Problem.COGRAPH_EDGE: expand_cograph_edge,
    Problem.TP_EDGE: expand_tp_edge,
    Problem.COGRAPH_VERTEX: expand_cograph_vertex,
    Problem.TP_VERTEX: expand_tp_vertex,
    Problem.COGRAPH_EDGE_NAIVE: expand_naive_cograph_edge,
    Problem.TP_EDGE_NAIVE: expand_naive_tp_edge,
}


# ---------------------------------------------------------------------------
# entry points


def apply_solution(g: Graph, problem: Problem, deletions: Sequence) -> Graph:
    """Apply a deletion set given in ``g``'s labels."""
    index = {label: i for i, label in enumerate(g.labels)}
    if problem.mode == "edge":
        return delete_edges(g, [edge(index[u], index[v]) for u, v in deletions])
    return delete_vertices(g, [index[v] for v in deletions])


def check_solution(g: Graph, problem: Problem, deletions: Sequence) -> bool:
    if len(set(deletions)) != len(deletions):
        return False
    return satisfies(apply_solution(g, problem, deletions), problem.target)


def solve(g: Graph, k: int, problem: Problem, threads: int = 1) -> tuple[Solution, SearchStats]:
    if k < 0:
        raise ValueError("k must be non-negative")
    problem = Problem(problem)
    if problem is Problem.COGRAPH_VERTEX_HS:
        from .hitting_set import HittingState, expand_hitting_set

        root: Any = HittingState.initial(g, k)
        expand = expand_hitting_set
    else:
        root = Node(g, k)
        expand = _EXPANDERS[problem]
    found, stats = run_search(expand, root, threads)
    if found is None:
        return Solution(False), stats
    dels = tuple(sorted(found))
    assert len(dels) <= k and check_solution(g, problem, dels), (problem, dels)
    return Solution(True, dels), stats


def solve_cograph_edge(g: Graph, k: int) -> tuple[Solution, SearchStats]:
    return solve(g, k, Problem.COGRAPH_EDGE)


def solve_tp_edge(g: Graph, k: int) -> tuple[Solution, SearchStats]:
    return solve(g, k, Problem.TP_EDGE)


def solve_cograph_vertex(g: Graph, k: int) -> tuple[Solution, SearchStats]:
    return solve(g, k, Problem.COGRAPH_VERTEX)


def solve_tp_vertex(g: Graph, k: int) -> tuple[Solution, SearchStats]:
    return solve(g, k, Problem.TP_VERTEX)


def solve_naive(g: Graph, k: int, problem: Problem) -> tuple[Solution, SearchStats]:
    if problem not in (Problem.COGRAPH_EDGE_NAIVE, Problem.TP_EDGE_NAIVE):
        raise ValueError(f"{problem} is not a naive baseline")
    return solve(g, k, problem)


@dataclass(frozen=True)
class MinimizeResult:
    k: int
    solution: Solution
    stats: SearchStats
    elapsed: float


def minimize(g: Graph, problem: Problem, threads: int = 1) -> MinimizeResult:
    """Smallest feasible budget, by trying k = 0, 1, 2, ... in turn.

    The returned stats are those of the run at the optimal k.
    """
    problem = Problem(problem)
    start = time.perf_counter()
    limit = g.m if problem.mode == "edge" else g.n
    for k in range(limit + 1):
        sol, stats = solve(g, k, problem, threads)
        if sol.feasible:
            return MinimizeResult(k, sol, stats, time.perf_counter() - start)
    raise AssertionError("deleting everything is always feasible")


def leaf_bound(problem: Problem, k: int) -> int:
    """Ceiling of the problem's growth constant to the power k."""
    return math.ceil(BOUND_CONSTANTS[Problem(problem)] ** k)
