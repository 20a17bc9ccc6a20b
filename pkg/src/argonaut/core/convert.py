"""Argument-graph to framework translation.

Support edge a->b becomes the rule b <- a; attack edge a->b becomes
contrary(b) <- a. Contraries are minted per node (mined text carries no
explicit negations). Edges pointing into fact nodes are unrepresentable
under the unidirectional fact regime and are dropped with a report.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List

from argonaut.core.framework import (
    CONTRARY_SUFFIX,
    BipolarFramework,
    Kind,
    Rule,
    Sentence,
    mint_contraries,
)
from argonaut.errors import MalformedGraphError
from argonaut.graph.model import ATTACK, KIND_FACT, ArgumentGraph, GraphEdge

log = logging.getLogger(__name__)


@dataclass
class ConversionResult:
    framework: BipolarFramework
    dropped_edges: List[GraphEdge] = field(default_factory=list)

    @property
    def warning_count(self) -> int:
        return len(self.dropped_edges)


def convert_graph(graph: ArgumentGraph) -> ConversionResult:
    for node in graph.nodes:
        if CONTRARY_SUFFIX in node.id:
            raise MalformedGraphError(
                f"node id {node.id!r} contains the reserved contrary suffix {CONTRARY_SUFFIX!r}"
            )
    assumptions = {n.id for n in graph.nodes if n.kind != KIND_FACT}
    facts = {n.id for n in graph.nodes if n.kind == KIND_FACT}
    contraries = mint_contraries(assumptions | facts)

    rules = set()
    dropped: List[GraphEdge] = []
    for edge in graph.edges:
        if edge.dst in facts:
            dropped.append(edge)
            log.warning(
                "dropping edge %s->%s (%s): edges into fact nodes are not representable",
                edge.src,
                edge.dst,
                edge.relation,
            )
            continue
        if edge.relation == ATTACK:
            rules.add(Rule(head=contraries[edge.dst], body=edge.src))
        else:
            rules.add(Rule(head=edge.dst, body=edge.src))

    sentences = {
        n.id: Sentence(
            id=n.id,
            text=n.text,
            kind=Kind.FACT if n.kind == KIND_FACT else Kind.ASSUMPTION,
        )
        for n in graph.nodes
    }
    framework = BipolarFramework(
        assumptions=frozenset(assumptions),
        facts=frozenset(facts),
        contraries=contraries,
        rules=frozenset(rules),
        sentences=sentences,
    )
    return ConversionResult(framework=framework, dropped_edges=dropped)


def from_graph(graph: ArgumentGraph) -> BipolarFramework:
    return convert_graph(graph).framework
