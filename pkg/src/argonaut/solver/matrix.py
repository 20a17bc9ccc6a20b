"""Pairwise attack tables precomputed once per framework.

Built strictly through the public semantics operations so the solver's view
of the attack relation is pinned to the same definitions the brute-force
oracle checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List

from argonaut.core.framework import BipolarFramework
from argonaut.core.semantics import attacks, closure


@dataclass(frozen=True)
class AttackMatrix:
    """Row t, column x: does the singleton {t} attack x?

    Beyond the raw matrix the tables carry what the encoding needs:
    - counterers_of[x]: assumptions hitting some member of closure({x}),
      i.e. the sets able to defeat the closed attacker rooted at x;
    - fact_attacked[x]: the fact base derives the contrary of x;
    - fact_counters[x]: the fact base hits some member of closure({x}).
    """

    ids: List[str]
    rows: Dict[str, FrozenSet[str]]
    attackers_of: Dict[str, FrozenSet[str]]
    counterers_of: Dict[str, FrozenSet[str]]
    fact_attacked: Dict[str, bool]
    fact_counters: Dict[str, bool]

    def entry(self, attacker: str, target: str) -> bool:
        return target in self.rows[attacker]

    @property
    def size(self) -> int:
        return len(self.ids)


def build_attack_matrix(f: BipolarFramework) -> AttackMatrix:
    ids = f.sorted_assumptions()
    rows: Dict[str, FrozenSet[str]] = {}
    singleton_closures: Dict[str, FrozenSet[str]] = {}
    for t in ids:
        singleton = frozenset((t,))
        singleton_closures[t] = closure(f, singleton)
        rows[t] = frozenset(x for x in ids if attacks(f, singleton, x))

    attackers: Dict[str, set] = {x: set() for x in ids}
    for t in ids:
        for x in rows[t]:
            attackers[x].add(t)

    fact_attacked = {x: attacks(f, f.facts, x) if f.facts else False for x in ids}

    counterers: Dict[str, FrozenSet[str]] = {}
    fact_counters: Dict[str, bool] = {}
    for t in ids:
        cl = singleton_closures[t]
        counterers[t] = frozenset(u for u in ids if rows[u] & cl)
        fact_counters[t] = any(fact_attacked[y] for y in cl)
    return AttackMatrix(
        ids=ids,
        rows=rows,
        attackers_of={x: frozenset(v) for x, v in attackers.items()},
        counterers_of=counterers,
        fact_attacked=fact_attacked,
        fact_counters=fact_counters,
    )
