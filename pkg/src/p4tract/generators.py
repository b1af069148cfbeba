"""Seeded instance generators.

Every generator takes a ``random.Random`` and shuffles vertex ids at the end,
so structure is never visible from the numbering alone.
"""

from __future__ import annotations

import random

from .graph import Edge, Graph, disjoint_union, join


def permuted(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def _split(n: int, rng: random.Random) -> list[int]:
    parts = rng.randint(2, min(n, 3))
    cuts = sorted(rng.sample(range(1, n), parts - 1))
    return [b - a for a, b in zip([0] + cuts, cuts + [n])]


def _cotree(n: int, rng: random.Random) -> Graph:
    if n == 1:
        return Graph.empty(1)
    parts = [_cotree(size, rng) for size in _split(n, rng)]
    return join(*parts) if rng.random() < 0.5 else disjoint_union(*parts)


def random_cograph(n: int, rng: random.Random) -> Graph:
    """A cograph grown from a random cotree."""
    return permuted(_cotree(n, rng), rng)


def make_spider(size: int, thin: bool, head: Graph | None = None) -> Graph:
    """Spider with body 0..size-1, feet size..2size-1 (foot i pairs body i), head after."""
    if size < 2:
        raise ValueError("spiders need |K| >= 2")
    h = head.n if head is not None else 0
    n = 2 * size + h
    es: list[Edge] = []
    for i in range(size):
        for j in range(i + 1, size):
            es.append((i, j))
        for j in range(size):
            if (i == j) == thin:
                es.append((i, size + j))
        for r in range(h):
            es.append((i, 2 * size + r))
    if head is not None:
        es.extend((2 * size + u, 2 * size + v) for u, v in head.edges())
    return Graph.from_edges(n, es)


def random_spider(n: int, rng: random.Random, thin: bool | None = None) -> Graph:
    """A spider on n vertices with a small cograph head."""
    if n < 4:
        raise ValueError("spiders need at least 4 vertices")
    h = rng.randint(0, min(3, n - 4))
    if (n - h) % 2:
        h += 1
    thin = rng.random() < 0.5 if thin is None else thin
    head = random_cograph(h, rng) if h else None
    return permuted(make_spider((n - h) // 2, thin, head), rng)


def _p4_sparse(n: int, rng: random.Random) -> Graph:
    if n == 1:
        return Graph.empty(1)
    choice = rng.random()
    if n >= 4 and choice < 0.45:
        size = rng.randint(2, n // 2)
        rest = n - 2 * size
        head = _p4_sparse(rest, rng) if rest else None
        return make_spider(size, rng.random() < 0.5, head)
    parts = [_p4_sparse(size, rng) for size in _split(n, rng)]
    return join(*parts) if choice < 0.75 else disjoint_union(*parts)


def random_p4_sparse(n: int, rng: random.Random) -> Graph:
    """A P4-sparse graph from a random union/join/spider tree."""
    return permuted(_p4_sparse(n, rng), rng)


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    )


def planted_edge(n: int, k: int, rng: random.Random) -> tuple[Graph, list[Edge]]:
    """A random cograph plus ``k`` added edges; deleting them restores a cograph."""
    base = random_cograph(n, rng)
    non_edges = [(u, v) for u in range(n) for v in range(u + 1, n) if not base.adjacent(u, v)]
    if len(non_edges) < k:
        raise ValueError(f"cograph has only {len(non_edges)} non-edges, cannot add {k}")
    added = sorted(rng.sample(non_edges, k))
    return Graph.from_edges(n, base.edges() + added), added


def planted_vertex(n: int, k: int, rng: random.Random) -> tuple[Graph, list[int]]:
    """A random cograph on n-k vertices plus ``k`` vertices with random neighbourhoods."""
    if not 0 <= k < n:
        raise ValueError("need 0 <= k < n")
    base = random_cograph(n - k, rng)
    es = base.edges()
    for v in range(n - k, n):
        es.extend((u, v) for u in range(v) if rng.random() < 0.5)
    perm = list(range(n))
    rng.shuffle(perm)
    g = Graph.from_edges(n, [(perm[u], perm[v]) for u, v in es])
    return g, sorted(perm[v] for v in range(n - k, n))
