"""DIMACS-CNF dump of a semantics encoding, for offline debugging.

Variable numbering is bit-exact with the encoding: variables 1..n are the
assumptions in sorted-id order, auxiliary variables (if any) follow above n.
The mapping is written as leading comment lines.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

from argonaut.solver.encoding import SatEncoding


def to_dimacs(encoding: SatEncoding) -> str:
    lines = [f"c argonaut encoding semantics={encoding.semantics.value}"]
    for assumption, var in sorted(encoding.var_of.items(), key=lambda kv: kv[1]):
        lines.append(f"c var {var} = assumption {assumption}")
    for var, comment in sorted(encoding.aux_comments.items()):
        lines.append(f"c var {var} = aux {comment}")
    lines.append(f"p cnf {encoding.n_vars} {len(encoding.clauses)}")
    for clause in encoding.clauses:
        lines.append(" ".join(str(lit) for lit in clause) + " 0")
    return "\n".join(lines) + "\n"


def dump_dimacs(encoding: SatEncoding, path: Union[str, Path]) -> None:
    Path(path).write_text(to_dimacs(encoding), encoding="utf-8")
