from argonaut.graph.model import (
    ATTACK,
    KIND_ASSUMPTION,
    KIND_FACT,
    SUPPORT,
    ArgumentGraph,
    GraphEdge,
    GraphNode,
)
from argonaut.graph.io import (
    FORMAT_VERSION,
    canonical_bytes,
    graph_from_dict,
    graph_hash,
    graph_to_dict,
    load_graph,
    save_graph,
)
from argonaut.graph.stats import GraphStats, graph_stats, reduced_ratio

__all__ = [
    "ATTACK",
    "KIND_ASSUMPTION",
    "KIND_FACT",
    "SUPPORT",
    "ArgumentGraph",
    "GraphEdge",
    "GraphNode",
    "FORMAT_VERSION",
    "canonical_bytes",
    "graph_from_dict",
    "graph_hash",
    "graph_to_dict",
    "load_graph",
    "save_graph",
    "GraphStats",
    "graph_stats",
    "reduced_ratio",
]
