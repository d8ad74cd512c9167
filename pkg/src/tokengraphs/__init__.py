"""k-token graphs, their edge-connectivity, and explicit edge-disjoint path families."""

from .connectivity import (
    ConnectivityReport,
    brute_force_edge_connectivity,
    connectivity_report,
    edge_connectivity,
    edge_connectivity_adjacent,
    max_flow_paths,
    min_degree,
    vertex_connectivity,
)
from .graph import (
    DirectedPath,
    Graph,
    GraphError,
    bridged_cliques,
    build_graph,
    complete_graph,
    cycle_graph,
    emit_dot,
    emit_edge_list,
    matched_cliques,
    parse_edge_list,
    path_graph,
)
from .lemma import (
    DisjointFamilyCertificate,
    construct_family,
    is_admissible,
    lift_path,
    repair_menger_system,
    verify_edge_disjoint,
)
from .tokens import TokenGraph, build_token_graph, config_degree, rank, unrank

__version__ = "0.1.0"
