"""Induced P4 / C4 / C5 scans and the two deletion targets."""

from __future__ import annotations

import enum
from collections import defaultdict
from typing import Iterator

from .graph import Graph, bits


class DeletionTarget(enum.Enum):
    P4_FREE = "cograph"
    P4_AND_C4_FREE = "trivially-perfect"


def iter_p4s(g: Graph, mask: int | None = None) -> Iterator[tuple[int, int, int, int]]:
    """Yield every induced P4 once, as a path ``(a, b, c, d)``.

    Each P4 has a unique middle edge ``bc``; we walk middle edges with b < c.
    """
    rows = g.rows
    mask = g.full if mask is None else mask
    for b in bits(mask):
        nb = rows[b] & mask
        for c in bits(nb >> (b + 1) << (b + 1)):
            nc = rows[c] & mask
            ends_b = nb & ~nc & ~(1 << c)
            ends_c = nc & ~nb & ~(1 << b)
            if not ends_b or not ends_c:
                continue
            for a in bits(ends_b):
                for d in bits(ends_c & ~rows[a]):
                    yield (a, b, c, d)


def has_p4(g: Graph, mask: int | None = None) -> bool:
    return next(iter_p4s(g, mask), None) is not None


def p4_masks(g: Graph, mask: int | None = None) -> set[int]:
    return {1 << a | 1 << b | 1 << c | 1 << d for a, b, c, d in iter_p4s(g, mask)}


def iter_c4s(g: Graph, mask: int | None = None) -> Iterator[tuple[int, int, int, int]]:
    """Yield every induced C4 once, as a cycle starting at its smallest vertex."""
    rows = g.rows
    mask = g.full if mask is None else mask
    for a in bits(mask):
        # a is the smallest vertex; c is the vertex opposite a
        higher = mask >> (a + 1) << (a + 1)
        for c in bits(higher & ~rows[a]):
            common = rows[a] & rows[c] & higher
            for b in bits(common):
                for d in bits(common & ~rows[b] >> (b + 1) << (b + 1)):
                    yield (a, b, c, d)


def has_c4(g: Graph, mask: int | None = None) -> bool:
    return next(iter_c4s(g, mask), None) is not None


def satisfies(g: Graph, target: DeletionTarget, mask: int | None = None) -> bool:
    if has_p4(g, mask):
        return False
    return target is DeletionTarget.P4_FREE or not has_c4(g, mask)


def is_c5_mask(g: Graph, mask5: int) -> bool:
    return all((g.rows[v] & mask5).bit_count() == 2 for v in bits(mask5)) and _connected(g, mask5)


def _connected(g: Graph, mask: int) -> bool:
    low = mask & -mask
    seen = frontier = low
    while frontier:
        reach = 0
        for v in bits(frontier):
            reach |= g.rows[v]
        frontier = reach & mask & ~seen
        seen |= frontier
    return seen == mask


def crowded_fivesets(g: Graph, p4s: set[int] | None = None) -> set[int]:
    """All 5-vertex sets that induce two or more P4s.

    Two distinct P4s inside one 5-set share exactly three vertices, so it is
    enough to bucket P4s by their 3-subsets.
    """
    if p4s is None:
        p4s = p4_masks(g)
    buckets: dict[int, list[int]] = defaultdict(list)
    for q in p4s:
        for v in bits(q):
            buckets[q & ~(1 << v)].append(q)
    out = set()
    for group in buckets.values():
        if len(group) > 1:
            for i, q in enumerate(group):
                for r in group[i + 1:]:
                    out.add(q | r)
    return out


def sorted_tuple(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))
