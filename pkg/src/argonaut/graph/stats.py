"""Summary statistics for argument graphs (counts, ratios, histograms)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from argonaut.graph.model import ATTACK, KIND_FACT, SUPPORT, ArgumentGraph


@dataclass(frozen=True)
class GraphStats:
    node_count: int
    fact_count: int
    support_count: int
    attack_count: int
    # attack:support as a reduced fraction, None when there are no edges
    ratio: Optional[Tuple[int, int]]
    attack_share: Optional[float]
    support_share: Optional[float]
    edges_per_section: Dict[int, int] = field(default_factory=dict)

    def ratio_text(self) -> str:
        if self.ratio is None:
            return "undefined (no edges)"
        return f"{self.ratio[0]}:{self.ratio[1]}"


def reduced_ratio(attack: int, support: int) -> Optional[Tuple[int, int]]:
    if attack == 0 and support == 0:
        return None
    divisor = math.gcd(attack, support)
    return (attack // divisor, support // divisor)


def graph_stats(graph: ArgumentGraph) -> GraphStats:
    support = sum(1 for e in graph.edges if e.relation == SUPPORT)
    attack = sum(1 for e in graph.edges if e.relation == ATTACK)
    total = support + attack
    per_section: Dict[int, int] = {}
    for edge in graph.edges:
        section = graph.node(edge.src).section
        per_section[section] = per_section.get(section, 0) + 1
    return GraphStats(
        node_count=len(graph.nodes),
        fact_count=sum(1 for n in graph.nodes if n.kind == KIND_FACT),
        support_count=support,
        attack_count=attack,
        ratio=reduced_ratio(attack, support),
        attack_share=(attack / total) if total else None,
        support_share=(support / total) if total else None,
        edges_per_section=dict(sorted(per_section.items())),
    )
