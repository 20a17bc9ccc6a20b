"""SAT-backed search for the k largest extensions.

The size descent starts from the full assumption count and relaxes an
at-least-s cardinality bound downward, so the first model found always has
maximum cardinality; every found model is blocked and the search continues
until k extensions are collected, the space is exhausted, or the timeout
trips (partial results are flagged, never silently truncated).

Preferred extensions run through a grow-to-maximality loop over the
admissible encoding: each admissible seed of maximum remaining size is
forced upward (members assumed, size bound raised) until UNSAT, then
blocked by requiring some outside assumption in later models.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from typing import FrozenSet, List, Optional

from argonaut.core.framework import BipolarFramework
from argonaut.core.semantics import Semantics
from argonaut.errors import ConfigError
from argonaut.sat import new_solver
from argonaut.solver.encoding import CardinalityLadder, SatEncoding, encode
from argonaut.solver.matrix import AttackMatrix, build_attack_matrix

SIZE_STRATEGY = "descending-cardinality"


@dataclass(frozen=True)
class SolverConfig:
    k: int = 3
    semantics: Semantics = Semantics.ADMISSIBLE
    size_strategy: str = SIZE_STRATEGY
    timeout_s: float = 30.0
    seed: int = 0  # reserved for randomized restarts; the default backend is deterministic

    def validated(self) -> "SolverConfig":
        if self.k < 1:
            raise ConfigError(f"k must be >= 1, got {self.k}")
        if self.size_strategy != SIZE_STRATEGY:
            raise ConfigError(f"unsupported size_strategy {self.size_strategy!r}")
        if self.timeout_s <= 0:
            raise ConfigError(f"timeout_s must be positive, got {self.timeout_s}")
        return replace(self, semantics=Semantics(self.semantics))


@dataclass
class SolveResult:
    semantics: Semantics
    extensions: List[FrozenSet[str]] = field(default_factory=list)
    complete: bool = True  # False when the timeout truncated the search

    @property
    def sizes(self) -> List[int]:
        return [len(e) for e in self.extensions]


class _Session:
    """One incremental SAT context over an encoding plus a size ladder."""

    def __init__(self, f: BipolarFramework, base: Semantics, matrix: Optional[AttackMatrix]):
        self.encoding: SatEncoding = encode(f, base, matrix)
        self.solver = new_solver()
        for _ in range(self.encoding.n_vars):
            self.solver.new_var()
        self.ok = True
        for clause in self.encoding.clauses:
            if not self.solver.add_clause(clause):
                self.ok = False
                break
        self.core = [self.encoding.var_of[a] for a in self.encoding.ids]
        self.ladder = CardinalityLadder(self.core, self.solver.new_var, self.solver.add_clause)

    def solve(self, assumptions, deadline: float) -> Optional[bool]:
        if not self.ok:
            return False
        remaining = deadline - time.monotonic()
        if remaining <= 0:
            return None
        return self.solver.solve(assumptions, timeout_s=remaining)

    def model_members(self) -> FrozenSet[str]:
        return self.encoding.members_of_model(self.solver.model_value)

    def block_exact(self, members: FrozenSet[str]) -> None:
        clause = [
            -self.encoding.var_of[a] if a in members else self.encoding.var_of[a]
            for a in self.encoding.ids
        ]
        if not clause or not self.solver.add_clause(clause):
            self.ok = False

    def block_subsets(self, members: FrozenSet[str]) -> None:
        clause = [self.encoding.var_of[a] for a in self.encoding.ids if a not in members]
        if not clause or not self.solver.add_clause(clause):
            self.ok = False


def solve_k_largest(
    f: BipolarFramework,
    config: SolverConfig,
    matrix: Optional[AttackMatrix] = None,
) -> SolveResult:
    """Up to k extensions in non-increasing size order; the first returned has
    maximum cardinality among all sets satisfying the semantics."""
    config = config.validated()
    if config.semantics is Semantics.PREFERRED:
        return find_preferred(f, config, matrix)
    deadline = time.monotonic() + config.timeout_s
    session = _Session(f, config.semantics, matrix)
    result = SolveResult(semantics=config.semantics)
    size = len(session.core)
    while session.ok and len(result.extensions) < config.k and size >= 0:
        bound = session.ladder.at_least(size)
        assumptions = (bound,) if bound is not None else ()
        while len(result.extensions) < config.k:
            answer = session.solve(assumptions, deadline)
            if answer is None:
                result.complete = False
                return result
            if not answer:
                break
            members = session.model_members()
            result.extensions.append(members)
            session.block_exact(members)
            if not session.ok:
                break
        size -= 1
    return result


def find_preferred(
    f: BipolarFramework,
    config: SolverConfig,
    matrix: Optional[AttackMatrix] = None,
) -> SolveResult:
    """Subset-maximal admissible sets, largest first, up to k."""
    config = config.validated()
    deadline = time.monotonic() + config.timeout_s
    session = _Session(f, Semantics.ADMISSIBLE, matrix)
    result = SolveResult(semantics=Semantics.PREFERRED)
    n = len(session.core)
    ceiling = n
    while session.ok and len(result.extensions) < config.k:
        seed: Optional[FrozenSet[str]] = None
        size = ceiling
        while size >= 0:
            bound = session.ladder.at_least(size)
            answer = session.solve((bound,) if bound is not None else (), deadline)
            if answer is None:
                result.complete = False
                return result
            if answer:
                seed = session.model_members()
                break
            size -= 1
        if seed is None:
            break
        members = seed
        for _ in range(n + 1):  # each growth step adds at least one member
            target = len(members) + 1
            if target > n:
                break
            grow = [session.encoding.var_of[a] for a in sorted(members)]
            grow.append(session.ladder.at_least(target))
            answer = session.solve(grow, deadline)
            if answer is None:
                # a partially grown seed is admissible but unverified as
                # maximal; report only what is proven
                result.complete = False
                return result
            if not answer:
                break
            members = session.model_members()
        result.extensions.append(members)
        ceiling = len(members)
        session.block_subsets(members)
    return result
