"""Warm-start all-pairs shortest paths for dense weighted graphs."""
from .baseline import dijkstra_apsp, dijkstra_row, floyd_warshall, shortest_path_dijkstra
from .graph_core import (
    EPSILON,
    INF,
    ApspMatrix,
    DenseGraph,
    GraphError,
    PathResult,
    append_node,
    drop_node,
    new_graph,
    set_weight,
)
from .path_query import CandidateSet, candidate_nodes, warm_shortest_path
from .warm_update import (
    FULL_RECOMPUTE,
    SELECTIVE_DIJKSTRA,
    NeedUpdateList,
    RemovalCost,
    Strategy,
    UpdateConfig,
    apsp_add_node,
    apsp_modify_edge,
    apsp_remove_node,
    build_need_update_list,
    removal_cost,
)

__version__ = "0.1.0"
