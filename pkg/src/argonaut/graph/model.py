"""Mined argument graphs: literal nodes plus directed support/attack edges."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from argonaut.errors import MalformedGraphError

SUPPORT = "support"
ATTACK = "attack"
RELATIONS = (SUPPORT, ATTACK)

KIND_ASSUMPTION = "assumption"
KIND_FACT = "fact"


@dataclass(frozen=True)
class GraphNode:
    id: str
    text: str
    section: int
    kind: str = KIND_ASSUMPTION


@dataclass(frozen=True)
class GraphEdge:
    src: str
    dst: str
    relation: str
    confidence: float

    def key(self) -> Tuple[str, str, str]:
        return (self.src, self.dst, self.relation)


@dataclass
class ArgumentGraph:
    """Validated node/edge container. Treat as immutable once built; pipeline
    steps that extend a graph construct a new one."""

    nodes: List[GraphNode] = field(default_factory=list)
    edges: List[GraphEdge] = field(default_factory=list)

    def __post_init__(self):
        self._by_id: Dict[str, GraphNode] = {}
        for node in self.nodes:
            if node.id in self._by_id:
                raise MalformedGraphError(f"duplicate node id {node.id!r}")
            if node.kind not in (KIND_ASSUMPTION, KIND_FACT):
                raise MalformedGraphError(f"node {node.id!r} has unknown kind {node.kind!r}")
            self._by_id[node.id] = node
        deduped: Dict[Tuple[str, str, str], GraphEdge] = {}
        for edge in self.edges:
            if edge.relation not in RELATIONS:
                raise MalformedGraphError(
                    f"edge {edge.src!r}->{edge.dst!r} has unknown relation {edge.relation!r}"
                )
            if edge.src == edge.dst:
                raise MalformedGraphError(f"self-loop edge on {edge.src!r}")
            if edge.src not in self._by_id or edge.dst not in self._by_id:
                raise MalformedGraphError(
                    f"edge {edge.src!r}->{edge.dst!r} references a missing node"
                )
            # Exact-duplicate triples collapse silently; keep the higher confidence.
            prior = deduped.get(edge.key())
            if prior is None or edge.confidence > prior.confidence:
                deduped[edge.key()] = edge
        self.edges = sorted(deduped.values(), key=GraphEdge.key)

    def node(self, node_id: str) -> GraphNode:
        try:
            return self._by_id[node_id]
        except KeyError:
            raise MalformedGraphError(f"unknown node id {node_id!r}") from None

    def has_node(self, node_id: str) -> bool:
        return node_id in self._by_id

    def assumption_nodes(self) -> List[GraphNode]:
        return [n for n in self.nodes if n.kind == KIND_ASSUMPTION]

    def fact_nodes(self) -> List[GraphNode]:
        return [n for n in self.nodes if n.kind == KIND_FACT]

    def edges_from(self, node_id: str) -> List[GraphEdge]:
        return [e for e in self.edges if e.src == node_id]

    def edges_into(self, node_id: str) -> List[GraphEdge]:
        return [e for e in self.edges if e.dst == node_id]

    def extended(
        self,
        new_nodes: Iterable[GraphNode] = (),
        new_edges: Iterable[GraphEdge] = (),
    ) -> "ArgumentGraph":
        """New graph with extra nodes/edges; the original is untouched."""
        return ArgumentGraph(
            nodes=list(self.nodes) + list(new_nodes),
            edges=list(self.edges) + list(new_edges),
        )


def support_adjacency(graph: ArgumentGraph) -> Dict[str, List[str]]:
    """dst -> [src] over support edges (who directly supports each node)."""
    incoming: Dict[str, List[str]] = {}
    for edge in graph.edges:
        if edge.relation == SUPPORT:
            incoming.setdefault(edge.dst, []).append(edge.src)
    return incoming


def attackers_in_graph(graph: ArgumentGraph, node_id: str) -> List[GraphEdge]:
    return [e for e in graph.edges_into(node_id) if e.relation == ATTACK]


def find_node_by_text(graph: ArgumentGraph, text: str) -> Optional[GraphNode]:
    for node in graph.nodes:
        if node.text == text:
            return node
    return None
