"""Cograph and P4-sparse structure: union / join / spider decomposition trees."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Graph, bits, components_mask, is_clique_mask, is_stable_mask, to_mask
from .scan import crowded_fivesets, iter_p4s, p4_masks, sorted_tuple


class NodeKind(enum.Enum):
    LEAF = "leaf"
    UNION = "union"
    JOIN = "join"
    SPIDER = "spider"


class SpiderKind(enum.Enum):
    THIN = "thin"
    THICK = "thick"


@dataclass(frozen=True)
class SpiderPartition:
    """Body, feet and head of a spider; ``feet[i]`` is the leg partner of ``body[i]``.

    Thin: ``feet[i]`` is adjacent to ``body[i]`` only. Thick: ``feet[i]`` is
    adjacent to every body vertex except ``body[i]``.
    """

    kind: SpiderKind
    body: tuple[int, ...]
    feet: tuple[int, ...]
    head: tuple[int, ...]

    @property
    def legs(self) -> dict[int, int]:
        return dict(zip(self.feet, self.body))


@dataclass(frozen=True)
class DecompTree:
    kind: NodeKind
    vertices: tuple[int, ...]
    children: tuple["DecompTree", ...] = ()
    spider: SpiderPartition | None = None

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()

    def has_spiders(self) -> bool:
        return any(t.kind is NodeKind.SPIDER for t in self.walk())


@dataclass(frozen=True)
class Recognition:
    """Either a decomposition tree or a witness vertex tuple; truthy on success."""

    tree: DecompTree | None = None
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.tree is not None


@dataclass(frozen=True)
class CoComponentSummary:
    vertices: tuple[int, ...]
    size: int
    omega: int
    eta: int


class _Stall(Exception):
    def __init__(self, mask: int):
        self.mask = mask


def _split(g: Graph, mask: int, spiders: bool) -> DecompTree:
    verts = sorted_tuple(mask)
    if len(verts) == 1:
        return DecompTree(NodeKind.LEAF, verts)
    comps = components_mask(g, mask)
    if len(comps) > 1:
        return DecompTree(NodeKind.UNION, verts, tuple(_split(g, c, spiders) for c in comps))
    cocomps = components_mask(g, mask, co=True)
    if len(cocomps) > 1:
        return DecompTree(NodeKind.JOIN, verts, tuple(_split(g, c, spiders) for c in cocomps))
    sp = _extract_spider(g, mask) if spiders else None
    if sp is None:
        raise _Stall(mask)
    kids = (_split(g, to_mask(sp.head), spiders),) if sp.head else ()
    return DecompTree(NodeKind.SPIDER, verts, kids, sp)


def is_cograph(g: Graph) -> Recognition:
    """Cotree of ``g``, or an induced P4 (in path order) if there is none."""
    if g.n == 0:
        return Recognition(DecompTree(NodeKind.UNION, ()))
    try:
        return Recognition(_split(g, g.full, spiders=False))
    except _Stall as stall:
        # a connected, co-connected piece with 2+ vertices always holds a P4
        path = next(iter_p4s(g, stall.mask))
        return Recognition(witness=path if path[0] < path[3] else path[::-1])


def p4_sparse_decompose(g: Graph) -> Recognition:
    """Union/join/spider tree, or 5 vertices inducing at least two P4s."""
    if g.n == 0:
        return Recognition(DecompTree(NodeKind.UNION, ()))
    try:
        return Recognition(_split(g, g.full, spiders=True))
    except _Stall as stall:
        five = crowded_fivesets(g, p4_masks(g, stall.mask))
        assert five, "stalled piece that is not a spider must contain an obstruction"
        return Recognition(witness=min(sorted_tuple(m) for m in five))


# ---------------------------------------------------------------------------
# spiders


def _thin_on(adj: dict[int, int], mask: int):
    feet = [v for v in bits(mask) if adj[v].bit_count() == 1]
    if len(feet) < 2:
        return None
    body = [adj[s].bit_length() - 1 for s in feet]
    kmask, smask = to_mask(body), to_mask(feet)
    if kmask.bit_count() != len(feet) or kmask & smask:
        return None
    for k in body:
        if adj[k] & kmask != kmask & ~(1 << k) or (adj[k] & smask).bit_count() != 1:
            return None
    rmask = mask & ~kmask & ~smask
    for r in bits(rmask):
        if adj[r] & kmask != kmask:
            return None
    return tuple(body), tuple(feet), sorted_tuple(rmask)


def _extract_spider(g: Graph, mask: int) -> SpiderPartition | None:
    adj = {v: g.rows[v] & mask for v in bits(mask)}
    found = _thin_on(adj, mask)
    if found is not None:
        body, feet, head = found
        sp = SpiderPartition(SpiderKind.THIN, body, feet, head)
    else:
        co = {v: ~g.rows[v] & mask & ~(1 << v) for v in bits(mask)}
        found = _thin_on(co, mask)
        if found is None:
            return None
        # complementing swaps the roles of body and feet
        cbody, cfeet, head = found
        pairs = sorted(zip(cbody, cfeet))
        sp = SpiderPartition(
            SpiderKind.THICK, tuple(p[1] for p in pairs), tuple(p[0] for p in pairs), head
        )
    assert verify_spider(g, sp), sp
    return sp


def extract_spider(g: Graph) -> SpiderPartition | None:
    """Spider partition of a connected, co-connected graph, or None."""
    return _extract_spider(g, g.full)


def verify_spider(g: Graph, sp: SpiderPartition) -> bool:
    k, s, r = to_mask(sp.body), to_mask(sp.feet), to_mask(sp.head)
    if len(sp.body) != len(sp.feet) or len(sp.body) < 2:
        return False
    if k & s or k & r or s & r:
        return False
    if not is_clique_mask(g, k) or not is_stable_mask(g, s):
        return False
    for v in sp.head:
        if g.rows[v] & k != k or g.rows[v] & s:
            return False
    for body, foot in zip(sp.body, sp.feet):
        want = 1 << body if sp.kind is SpiderKind.THIN else k & ~(1 << body)
        if g.rows[foot] & k != want:
            return False
    return True


# ---------------------------------------------------------------------------
# cliques


def max_clique_p4_sparse(tree: DecompTree) -> int:
    if tree.kind is NodeKind.LEAF:
        return 1
    if tree.kind is NodeKind.UNION:
        return max((max_clique_p4_sparse(c) for c in tree.children), default=0)
    if tree.kind is NodeKind.JOIN:
        return sum(max_clique_p4_sparse(c) for c in tree.children)
    return len(tree.spider.body) + sum(max_clique_p4_sparse(c) for c in tree.children)


def lex_max_clique(tree: DecompTree) -> tuple[int, ...]:
    """The lexicographically smallest maximum clique (as a sorted tuple).

    For equal-size sets, sorted-tuple order is decided by the smallest element
    of the symmetric difference, so choosing independently inside each join
    part yields the overall smallest.
    """
    if tree.kind is NodeKind.LEAF:
        return tree.vertices
    if tree.kind is NodeKind.UNION:
        cands = [lex_max_clique(c) for c in tree.children]
        best = max(len(c) for c in cands)
        return min(c for c in cands if len(c) == best)
    if tree.kind is NodeKind.JOIN:
        return tuple(sorted(v for c in tree.children for v in lex_max_clique(c)))
    sp = tree.spider
    head = lex_max_clique(tree.children[0]) if tree.children else ()
    cands = [tuple(sorted(sp.body + head))]
    if not sp.head:
        # with an empty head a foot can replace one body vertex
        for body, foot in zip(sp.body, sp.feet):
            if sp.kind is SpiderKind.THICK:
                cands.append(tuple(sorted((set(sp.body) - {body}) | {foot})))
            elif len(sp.body) == 2:
                cands.append(tuple(sorted((body, foot))))
    return min(cands)
