"""Undirected simple graphs over dense vertex ids, stored as bitset rows.

Every vertex carries a label: the id it had in the graph the user loaded.
Deleting vertices compacts ids but keeps labels, so solutions found deep in
a search tree can always be reported in original ids.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for references to vertices or edges that do not exist."""


def edge(u: int, v: int) -> Edge:
    if u == v:
        raise GraphError(f"self-loop {u}-{v}")
    return (u, v) if u < v else (v, u)


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vs: Iterable[int]) -> int:
    mask = 0
    for v in vs:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n or len(self.labels) != self.n:
            raise GraphError("rows/labels length does not match n")

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[Sequence[int]] = (), labels: Sequence[int] | None = None
    ) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), tuple(range(n)) if labels is None else tuple(labels))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls.from_edges(n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def label_edge(self, e: Edge) -> Edge:
        return edge(self.labels[e[0]], self.labels[e[1]])

    def label_vertices(self, vs: Iterable[int]) -> list[int]:
        return sorted(self.labels[v] for v in vs)

    def relabeled(self) -> "Graph":
        """Same graph with labels reset to the current ids."""
        return Graph(self.n, self.rows, tuple(range(self.n)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def complement(g: Graph) -> Graph:
    full = g.full
    rows = tuple(~r & full & ~(1 << v) for v, r in enumerate(g.rows))
    return Graph(g.n, rows, g.labels)


def _check_vertices(g: Graph, vs: Iterable[int]) -> list[int]:
    out = sorted(set(vs))
    for v in out:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph with n={g.n}")
    return out


def induced(g: Graph, vs: Iterable[int]) -> Graph:
    """Induced subgraph on ``vs``.

    New vertex ``i`` is parent vertex ``sorted(vs)[i]``; labels carry over
    from the parent, so they keep pointing at original input ids.
    """
    keep = _check_vertices(g, vs)
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        r = 0
        for w in bits(g.rows[v]):
            i = pos.get(w)
            if i is not None:
                r |= 1 << i
        rows.append(r)
    return Graph(len(keep), tuple(rows), tuple(g.labels[v] for v in keep))


def delete_vertices(g: Graph, vs: Iterable[int]) -> Graph:
    gone = set(_check_vertices(g, vs))
    return induced(g, [v for v in range(g.n) if v not in gone])


def delete_edges(g: Graph, es: Iterable[Sequence[int]]) -> Graph:
    rows = list(g.rows)
    for u, v in es:
        if not (0 <= u < g.n and 0 <= v < g.n) or not rows[u] >> v & 1:
            raise GraphError(f"edge {u}-{v} not in graph")
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows), g.labels)


def add_edges(g: Graph, es: Iterable[Sequence[int]]) -> Graph:
    rows = list(g.rows)
    for u, v in es:
        u, v = edge(u, v)
        if v >= g.n or u < 0:
            raise GraphError(f"edge {u}-{v} out of range")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(g.n, tuple(rows), g.labels)


def components_mask(g: Graph, mask: int, co: bool = False) -> list[int]:
    """Components (or co-components) of the subgraph induced by ``mask``.

    Returned as vertex masks ordered by smallest member.
    """
    out = []
    rest = mask
    while rest:
        low = rest & -rest
        comp = frontier = low
        while frontier:
            reach = 0
            for v in bits(frontier):
                row = g.rows[v]
                reach |= (~row & ~(1 << v)) if co else row
            frontier = reach & rest & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def components(g: Graph) -> list[list[int]]:
    return [list(bits(c)) for c in components_mask(g, g.full)]


def co_components(g: Graph) -> list[list[int]]:
    return [list(bits(c)) for c in components_mask(g, g.full, co=True)]


def is_clique_mask(g: Graph, mask: int) -> bool:
    return all((g.rows[v] | 1 << v) & mask == mask for v in bits(mask))


def is_stable_mask(g: Graph, mask: int) -> bool:
    return all(g.rows[v] & mask == 0 for v in bits(mask))


def is_clique(g: Graph, vs: Iterable[int]) -> bool:
    return is_clique_mask(g, to_mask(_check_vertices(g, vs)))


def is_stable(g: Graph, vs: Iterable[int]) -> bool:
    return is_stable_mask(g, to_mask(_check_vertices(g, vs)))


def disjoint_union(*gs: Graph) -> Graph:
    return _combine(gs, join=False)


def join(*gs: Graph) -> Graph:
    """Disjoint union plus every edge between different parts."""
    return _combine(gs, join=True)


def _combine(gs: Sequence[Graph], join: bool) -> Graph:
    n = sum(g.n for g in gs)
    rows: list[int] = []
    offset = 0
    for g in gs:
        part = ((1 << g.n) - 1) << offset
        for r in g.rows:
            row = r << offset
            if join:
                row |= ((1 << n) - 1) & ~part
            rows.append(row)
        offset += g.n
    return Graph(n, tuple(rows), tuple(range(n)))
