"""Exact deletion solvers for P4-sparse graphs.

All of them walk the union/join/spider tree. Components and co-components
are independent subproblems, and inside a spider the body+feet part and the
head never share a P4 (or a C4), so costs simply add up. The only real
choice happens at join nodes of the trivially perfect vertex solver, where
all but one co-component has to be cut down to a clique.

Deletions are reported in the ids of the graph passed in.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .decomposition import (
    CoComponentSummary,
    DecompTree,
    NodeKind,
    SpiderKind,
    lex_max_clique,
    max_clique_p4_sparse,
    p4_sparse_decompose,
)
from .graph import Edge, Graph, edge, is_clique_mask, to_mask
from .scan import has_c4


class NotP4SparseError(ValueError):
    pass


@dataclass(frozen=True)
class StructuredSolution:
    deletions: tuple
    feasible: bool = True

    @property
    def cost(self) -> int:
        return len(self.deletions)


def _tree(g: Graph) -> DecompTree:
    rec = p4_sparse_decompose(g)
    if not rec:
        raise NotP4SparseError(f"graph is not P4-sparse; witness {rec.witness}")
    return rec.tree


def _spider_legs(tree: DecompTree) -> list[Edge]:
    sp = tree.spider
    if sp.kind is SpiderKind.THIN:
        return [edge(s, k) for s, k in zip(sp.feet[:-1], sp.body[:-1])]
    size = len(sp.body)
    return [edge(sp.body[i], sp.feet[j]) for i in range(size) for j in range(i + 1, size)]


def spider_edge_deletion(g: Graph) -> StructuredSolution:
    """Minimum edge set turning a P4-sparse graph into a cograph."""
    out: list[Edge] = []
    for node in _tree(g).walk():
        if node.kind is NodeKind.SPIDER:
            out.extend(_spider_legs(node))
    return StructuredSolution(tuple(sorted(out)))


def spider_vertex_deletion(g: Graph) -> StructuredSolution:
    """Minimum vertex set turning a P4-sparse graph into a cograph.

    Thin spiders lose all feet but one, thick spiders all body vertices but one.
    """
    out: list[int] = []
    for node in _tree(g).walk():
        if node.kind is NodeKind.SPIDER:
            sp = node.spider
            out.extend(sp.feet[:-1] if sp.kind is SpiderKind.THIN else sp.body[:-1])
    return StructuredSolution(tuple(sorted(out)))


def _pair_cover(node: DecompTree, forbidden: set[int]) -> tuple[list[int], bool]:
    """Hit every P4 of body+feet, i.e. every union of two leg pairs.

    One pair may survive untouched; every other pair loses its foot, or its
    body vertex if the foot is forbidden.
    """
    sp = node.spider
    pairs = list(zip(sp.feet, sp.body))
    locked = [i for i, (s, k) in enumerate(pairs) if s in forbidden and k in forbidden]
    if len(locked) > 1:
        return [], False
    keep = locked[0] if locked else len(pairs) - 1
    out = []
    for i, (s, k) in enumerate(pairs):
        if i != keep:
            out.append(k if s in forbidden else s)
    return out, True


def constrained_spider_vertex_deletion(
    g: Graph, forbidden: Iterable[int] = ()
) -> StructuredSolution:
    """Minimum cograph vertex-deletion set avoiding ``forbidden``.

    Returns an infeasible solution when two leg pairs of some spider are
    entirely forbidden.
    """
    banned = set(forbidden)
    out: list[int] = []
    for node in _tree(g).walk():
        if node.kind is NodeKind.SPIDER:
            dels, ok = _pair_cover(node, banned)
            if not ok:
                return StructuredSolution((), feasible=False)
            out.extend(dels)
    return StructuredSolution(tuple(sorted(out)))


def tp_edge_final(g: Graph) -> StructuredSolution:
    """Minimum edge set making a C4-free P4-sparse graph trivially perfect."""
    if has_c4(g):
        raise ValueError("tp_edge_final needs a C4-free graph")
    out: list[Edge] = []
    _tp_edge(g, _tree(g), out)
    return StructuredSolution(tuple(sorted(out)))


def _tp_edge(g: Graph, node: DecompTree, out: list[Edge]) -> None:
    if node.kind is NodeKind.UNION:
        for c in node.children:
            _tp_edge(g, c, out)
    elif node.kind is NodeKind.JOIN:
        loose = [c for c in node.children if not is_clique_mask(g, to_mask(c.vertices))]
        # two non-clique co-components would already form a C4
        assert len(loose) <= 1
        if loose:
            _tp_edge(g, loose[0], out)
    elif node.kind is NodeKind.SPIDER:
        out.extend(_spider_legs(node))
        for c in node.children:
            _tp_edge(g, c, out)


def tp_vertex_final(g: Graph) -> StructuredSolution:
    """Minimum vertex set making a P4-sparse graph trivially perfect."""
    return StructuredSolution(tuple(sorted(_tp_vertex(_tree(g)))))


def co_component_summaries(node: DecompTree) -> list[tuple[CoComponentSummary, list[int]]]:
    """Per co-component of a join node: its summary and its own TP deletion set."""
    out = []
    for child in node.children:
        dels = _tp_vertex(child)
        summary = CoComponentSummary(
            child.vertices, len(child.vertices), max_clique_p4_sparse(child), len(dels)
        )
        out.append((summary, dels))
    return out


def _tp_vertex(node: DecompTree) -> list[int]:
    if node.kind is NodeKind.LEAF:
        return []
    if node.kind is NodeKind.UNION:
        return [v for c in node.children for v in _tp_vertex(c)]
    if node.kind is NodeKind.SPIDER:
        dels, _ = _pair_cover(node, set())
        return dels + [v for c in node.children for v in _tp_vertex(c)]
    summaries = co_component_summaries(node)
    # keep the co-component with the largest saving |A| - omega - eta intact
    savings = [s.size - s.omega - s.eta for s, _ in summaries]
    keep = savings.index(max(savings))
    out = list(summaries[keep][1])
    for i, child in enumerate(node.children):
        if i != keep:
            clique = set(lex_max_clique(child))
            out.extend(v for v in child.vertices if v not in clique)
    return out
