"""Fact-check reports: one linear pass over fact-outgoing edges.

Attack edges from facts become report entries (the contradicted literal and
the fact contradicting it); support edges from facts are reported separately
as corroborations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List

from argonaut.graph.model import ATTACK, KIND_FACT, SUPPORT, ArgumentGraph


@dataclass(frozen=True)
class FactCheckEntry:
    attacked: str
    fact: str
    confidence: float


@dataclass(frozen=True)
class Corroboration:
    supported: str
    fact: str
    confidence: float


@dataclass
class FactCheckReport:
    entries: List[FactCheckEntry] = field(default_factory=list)
    corroborations: List[Corroboration] = field(default_factory=list)

    def attacked_literals(self) -> List[str]:
        return sorted({e.attacked for e in self.entries})

    def by_literal(self) -> Dict[str, List[FactCheckEntry]]:
        grouped: Dict[str, List[FactCheckEntry]] = {}
        for entry in self.entries:
            grouped.setdefault(entry.attacked, []).append(entry)
        return grouped

    @property
    def is_empty(self) -> bool:
        return not self.entries and not self.corroborations


def fact_check(graph: ArgumentGraph) -> FactCheckReport:
    fact_ids = {n.id for n in graph.nodes if n.kind == KIND_FACT}
    entries = []
    corroborations = []
    # single pass, no re-sorting: graph edges are already in canonical
    # (src, dst, relation) order, so the report is deterministic and the
    # scan stays linear in the edge count
    for edge in graph.edges:
        if edge.src not in fact_ids:
            continue
        if edge.relation == ATTACK:
            entries.append(FactCheckEntry(edge.dst, edge.src, edge.confidence))
        elif edge.relation == SUPPORT:
            corroborations.append(Corroboration(edge.dst, edge.src, edge.confidence))
    return FactCheckReport(entries=entries, corroborations=corroborations)
