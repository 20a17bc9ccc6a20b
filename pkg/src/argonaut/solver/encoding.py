"""CNF encodings of extension semantics.

One boolean variable per assumption, numbered 1..n in assumption-sort order
(the DIMACS dump relies on exactly this numbering). Auxiliary variables sit
above n. Clause groups:

- closedness: for each support rule b <- a over assumptions, a implies b;
- conflict-freeness: for every matrix entry (t, x), not both; assumptions
  attacked by the fact base are excluded outright;
- defense: a member x requires, per attacker t, some counterer of t unless
  the fact base already counters t;
- stability (added for stable): every outside assumption must be countered;
- completeness (added for complete): per-attacker "is countered" auxiliaries
  force every defended assumption into the set.

Models projected to the assumption variables are exactly the sets satisfying
the chosen semantics; preferred is realized in the search layer by growing
admissible models to subset-maximality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from argonaut.core.framework import BipolarFramework
from argonaut.core.semantics import Semantics
from argonaut.solver.matrix import AttackMatrix, build_attack_matrix


@dataclass
class SatEncoding:
    semantics: Semantics
    ids: List[str]
    var_of: Dict[str, int]
    clauses: List[Tuple[int, ...]]
    n_vars: int
    aux_comments: Dict[int, str] = field(default_factory=dict)

    @property
    def n_core(self) -> int:
        return len(self.ids)

    def members_of_model(self, model_value) -> frozenset:
        return frozenset(a for a in self.ids if model_value(self.var_of[a]))


def encode(
    f: BipolarFramework,
    semantics: Semantics,
    matrix: Optional[AttackMatrix] = None,
) -> SatEncoding:
    semantics = Semantics(semantics)
    if semantics not in (Semantics.ADMISSIBLE, Semantics.COMPLETE, Semantics.STABLE):
        raise ValueError(
            f"no direct encoding for {semantics.value!r}; preferred runs through the maximality loop"
        )
    matrix = matrix or build_attack_matrix(f)
    ids = matrix.ids
    var_of = {a: i + 1 for i, a in enumerate(ids)}
    n_vars = len(ids)
    clauses: List[Tuple[int, ...]] = []
    seen = set()

    def emit(clause: Tuple[int, ...]) -> None:
        key = tuple(sorted(clause))
        if key not in seen:
            seen.add(key)
            clauses.append(clause)

    # closedness over assumption-bodied support rules
    for a in ids:
        for head in sorted(f.support_heads(a)):
            if head in var_of:
                emit((-var_of[a], var_of[head]))

    # conflict-freeness
    for x in ids:
        if matrix.fact_attacked[x]:
            emit((-var_of[x],))
        for t in sorted(matrix.attackers_of[x]):
            if t == x:
                emit((-var_of[x],))
            else:
                emit((-var_of[t], -var_of[x]))

    # defense of members
    for x in ids:
        for t in sorted(matrix.attackers_of[x]):
            if matrix.fact_counters[t]:
                continue  # the fact base defeats this attacker for free
            emit((-var_of[x],) + tuple(var_of[u] for u in sorted(matrix.counterers_of[t])))

    if semantics is Semantics.STABLE:
        for x in ids:
            if matrix.fact_counters[x]:
                continue
            emit((var_of[x],) + tuple(var_of[u] for u in sorted(matrix.counterers_of[x])))

    aux_comments: Dict[int, str] = {}
    if semantics is Semantics.COMPLETE:
        # countered_t <-> some counterer of t is in; constant-true when the
        # fact base counters t, constant-false when nobody can.
        countered_var: Dict[str, Optional[int]] = {}

        def countered(t: str) -> Optional[int]:
            if t in countered_var:
                return countered_var[t]
            nonlocal n_vars
            counterers = sorted(matrix.counterers_of[t])
            if matrix.fact_counters[t] or not counterers:
                countered_var[t] = None
                return None
            n_vars += 1
            d = n_vars
            aux_comments[d] = f"countered({t})"
            emit((-d,) + tuple(var_of[u] for u in counterers))
            for u in counterers:
                emit((-var_of[u], d))
            countered_var[t] = d
            return d

        for x in ids:
            if matrix.fact_attacked[x]:
                continue  # never defended, no forcing
            disjuncts: List[int] = []
            skip = False
            for t in sorted(matrix.attackers_of[x]):
                if matrix.fact_counters[t]:
                    continue  # attacker always countered; contributes nothing
                if not matrix.counterers_of[t]:
                    skip = True  # attacker can never be countered: x never defended
                    break
                d = countered(t)
                assert d is not None
                disjuncts.append(-d)
            if skip:
                continue
            emit((var_of[x],) + tuple(disjuncts))

    return SatEncoding(
        semantics=semantics,
        ids=list(ids),
        var_of=var_of,
        clauses=clauses,
        n_vars=n_vars,
        aux_comments=aux_comments,
    )


class CardinalityLadder:
    """Sequential-counter encoding of "at least s of the core variables".

    register(i, j) is true iff at least j of the first i core variables are
    true; both implication directions are emitted so each register is pinned
    to the exact count. at_least(s) returns an assumption literal activating
    the bound, which the search relaxes downward from n.
    """

    def __init__(self, core_vars: List[int], new_var, add_clause):
        self.core = core_vars
        n = len(core_vars)
        self.reg: Dict[Tuple[int, int], int] = {}
        for i in range(1, n + 1):
            for j in range(1, i + 1):
                self.reg[(i, j)] = new_var()
        for i in range(1, n + 1):
            x = core_vars[i - 1]
            for j in range(1, i + 1):
                r = self.reg[(i, j)]
                below_same = self.reg.get((i - 1, j))
                below_less = self.reg.get((i - 1, j - 1))
                # count reaches j -> r
                if j == 1:
                    add_clause((-x, r))
                elif below_less is not None:
                    add_clause((-below_less, -x, r))
                if below_same is not None:
                    add_clause((-below_same, r))
                # r -> count reaches j
                if j == 1:
                    if below_same is not None:
                        add_clause((-r, below_same, x))
                    else:
                        add_clause((-r, x))
                else:
                    if below_same is not None:
                        add_clause((-r, below_same, below_less))
                        add_clause((-r, below_same, x))
                    else:
                        add_clause((-r, below_less))
                        add_clause((-r, x))

    def at_least(self, s: int) -> Optional[int]:
        """Assumption literal for "at least s"; None means trivially true."""
        if s <= 0:
            return None
        n = len(self.core)
        if s > n:
            raise ValueError(f"cannot require {s} of {n} variables")
        return self.reg[(n, s)]
