"""Synthetic labeled pair corpus with a planted 40/40/20 class distribution.

Each pair carries its own marker token so pairs cannot interfere; the mock
classifier must recover every planted label exactly (support/none/attack at
approximately 40/40/20, the distribution the neutral-pair extension aims at).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List

from argonaut.pipeline.clients import PairRequest


@dataclass(frozen=True)
class PlantedPair:
    text_a: str
    text_b: str
    label: str


def synthetic_pair_corpus(n_pairs: int = 100, seed: int = 0) -> List[PlantedPair]:
    n_support = round(n_pairs * 0.4)
    n_none = round(n_pairs * 0.4)
    n_attack = n_pairs - n_support - n_none
    pairs: List[PlantedPair] = []
    marker = 0

    def fresh() -> str:
        nonlocal marker
        marker += 1
        return f"K{marker}"

    for _ in range(n_support):
        m = fresh()
        pairs.append(
            PlantedPair(
                text_a=f"This holds because control {m} has proven effective in drills.",
                text_b=f"Control {m} should remain part of the mitigation plan.",
                label="support",
            )
        )
    for _ in range(n_attack):
        m = fresh()
        pairs.append(
            PlantedPair(
                text_a=f"However, the audit of {m} contradicts the stated coverage.",
                text_b=f"Coverage item {m} should be considered settled.",
                label="attack",
            )
        )
    for _ in range(n_none):
        m1, m2 = fresh(), fresh()
        pairs.append(
            PlantedPair(
                text_a=f"Metric {m1} should be tracked per shift.",
                text_b=f"Metric {m2} should be reviewed quarterly.",
                label="none",
            )
        )
    random.Random(seed).shuffle(pairs)
    return pairs


def as_requests(corpus: List[PlantedPair]) -> List[PairRequest]:
    return [
        PairRequest(pair_id=str(i), text_a=p.text_a, text_b=p.text_b)
        for i, p in enumerate(corpus)
    ]
