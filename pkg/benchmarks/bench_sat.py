#!/usr/bin/env python3
"""Benchmark: compiled SAT core vs pure-Python fallback.

Two workloads:
- frameworks: full admissible-extension enumeration over random frameworks
  (the package's real hot path: incremental solving, cardinality descent,
  blocking clauses);
- random 3-SAT at the m/n ~ 4.2 phase transition (raw CDCL throughput).

Usage: python3 benchmarks/bench_sat.py [--quick]
"""

import argparse
import random
import statistics
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from argonaut.sat import available_backends  # noqa: E402
from argonaut.core.semantics import Semantics  # noqa: E402
from argonaut.solver import search  # noqa: E402
from argonaut.solver.search import SolverConfig, solve_k_largest  # noqa: E402

from conftest import random_framework  # noqa: E402


def bench_frameworks(solver_factory, n_frameworks, max_assumptions, seed=91):
    import argonaut.sat as sat_pkg

    original = sat_pkg.Solver
    sat_pkg.Solver = solver_factory
    search.new_solver = lambda: solver_factory()
    rng = random.Random(seed)
    start = time.perf_counter()
    total_extensions = 0
    for _ in range(n_frameworks):
        f = random_framework(rng, max_assumptions=max_assumptions)
        n = len(f.assumptions)
        result = solve_k_largest(f, SolverConfig(k=1 << n, semantics=Semantics.ADMISSIBLE))
        total_extensions += len(result.extensions)
    elapsed = time.perf_counter() - start
    sat_pkg.Solver = original
    search.new_solver = lambda: original()
    return elapsed, total_extensions


def bench_random_3sat(solver_factory, n_instances, n_vars, seed=17):
    rng = random.Random(seed)
    start = time.perf_counter()
    sat_count = 0
    for _ in range(n_instances):
        solver = solver_factory()
        for _ in range(n_vars):
            solver.new_var()
        n_clauses = int(n_vars * 4.2)
        ok = True
        for _ in range(n_clauses):
            vs = rng.sample(range(1, n_vars + 1), 3)
            ok = solver.add_clause([v if rng.random() < 0.5 else -v for v in vs]) and ok
        if ok and solver.solve() is True:
            sat_count += 1
    elapsed = time.perf_counter() - start
    return elapsed, sat_count


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    backends = available_backends()
    if "compiled" not in backends:
        print("note: compiled backend not built; benchmarking pure only")

    n_frameworks = 40 if args.quick else 120
    max_asm = 9 if args.quick else 10
    n_sat = 20 if args.quick else 60
    n_vars = 60 if args.quick else 90

    rows = []
    for name, factory in backends.items():
        t_fw, exts = bench_frameworks(factory, n_frameworks, max_asm)
        t_rs, sats = bench_random_3sat(factory, n_sat, n_vars)
        rows.append((name, t_fw, exts, t_rs, sats))

    print(f"\n{'backend':<10} {'frameworks':>12} {'extensions':>11} {'3-SAT':>10} {'sat':>5}")
    for name, t_fw, exts, t_rs, sats in rows:
        print(f"{name:<10} {t_fw:>11.2f}s {exts:>11} {t_rs:>9.2f}s {sats:>5}")
    if len(rows) == 2:
        by_name = {r[0]: r for r in rows}
        fw_speedup = by_name["pure"][1] / by_name["compiled"][1]
        rs_speedup = by_name["pure"][3] / by_name["compiled"][3]
        print(f"\ncompiled speedup: {fw_speedup:.1f}x on frameworks, {rs_speedup:.1f}x on 3-SAT")
        sanity = by_name["pure"][2] == by_name["compiled"][2] and (
            by_name["pure"][4] == by_name["compiled"][4]
        )
        print(f"result agreement: {'ok' if sanity else 'MISMATCH'}")


if __name__ == "__main__":
    main()
