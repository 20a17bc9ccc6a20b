"""SAT backend selection.

The compiled core (Cython, argonaut.sat._satcore) and the pure-Python
solver implement the same deterministic CDCL; the compiled one is picked
automatically when it built successfully. Override with the environment
variable ARGONAUT_SAT_BACKEND=pure|compiled (compiled raises if the
extension is missing). benchmarks/bench_sat.py compares the two.
"""

import os

from argonaut.sat import core_py

try:
    from argonaut.sat import _satcore  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - build environment dependent
    _satcore = None


def _select():
    choice = os.environ.get("ARGONAUT_SAT_BACKEND", "auto").lower()
    if choice == "pure":
        return core_py.Solver, "pure"
    if choice == "compiled":
        if _satcore is None:
            raise ImportError(
                "ARGONAUT_SAT_BACKEND=compiled but argonaut.sat._satcore did not build"
            )
        return _satcore.Solver, "compiled"
    if choice != "auto":
        raise ValueError(f"unknown ARGONAUT_SAT_BACKEND {choice!r}")
    if _satcore is not None:
        return _satcore.Solver, "compiled"
    return core_py.Solver, "pure"


Solver, BACKEND = _select()


def new_solver():
    return Solver()


def available_backends():
    out = {"pure": core_py.Solver}
    if _satcore is not None:
        out["compiled"] = _satcore.Solver
    return out
