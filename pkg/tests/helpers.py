"""Small named graphs shared by the test modules."""

from p4tract.generators import make_spider
from p4tract.graph import Graph, complement, join
from p4tract.obstructions import ObstructionKind, pattern


def c4():
    return Graph.cycle(4)


def c5():
    return Graph.cycle(5)


def p4():
    return Graph.path(4)


def p5():
    return Graph.path(5)


def k(n):
    return Graph.complete(n)


def two_k2():
    return Graph.from_edges(4, [(0, 1), (2, 3)])


def two_k2_join():
    return join(two_k2(), two_k2())


def house():
    return complement(p5())


def named(kind: ObstructionKind):
    return pattern(kind)


def thin(size, head=None):
    return make_spider(size, True, head)


def thick(size, head=None):
    return make_spider(size, False, head)
