"""FPT branching solvers for cograph and trivially perfect deletion problems."""

__version__ = "0.1.0"

from .graph import Graph, GraphError, complement, delete_edges, delete_vertices, induced
from .scan import DeletionTarget, has_c4, has_p4, satisfies
from .obstructions import (
    BranchRuleSet,
    ObstructionInstance,
    ObstructionKind,
    classify_5graph,
    find_c4,
    find_extended_obstruction,
    find_p4,
    find_p4_sparse_obstruction,
    synthesize_rules,
)
from .decomposition import DecompTree, NodeKind, SpiderPartition, is_cograph, p4_sparse_decompose
from .spiders import (
    constrained_spider_vertex_deletion,
    spider_edge_deletion,
    spider_vertex_deletion,
    tp_edge_final,
    tp_vertex_final,
)
from .search import (
    Problem,
    SearchStats,
    Solution,
    check_solution,
    minimize,
    solve,
    solve_cograph_edge,
    solve_cograph_vertex,
    solve_tp_edge,
    solve_tp_vertex,
)
from .hitting_set import HittingState, solve_cograph_vertex_hs
from .oracle import oracle_min_edge_deletion, oracle_min_vertex_deletion
from .formats import parse_instance, format_instance, read_instance

__all__ = [name for name in dir() if not name.startswith("_")]
