from argonaut.solver.matrix import AttackMatrix, build_attack_matrix
from argonaut.solver.encoding import CardinalityLadder, SatEncoding, encode
from argonaut.solver.search import (
    SIZE_STRATEGY,
    SolveResult,
    SolverConfig,
    find_preferred,
    solve_k_largest,
)

__all__ = [
    "AttackMatrix",
    "build_attack_matrix",
    "CardinalityLadder",
    "SatEncoding",
    "encode",
    "SIZE_STRATEGY",
    "SolveResult",
    "SolverConfig",
    "find_preferred",
    "solve_k_largest",
]
