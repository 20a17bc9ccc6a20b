"""Pure-Python CDCL SAT solver.

Incremental interface: grow the variable pool with new_var(), add clauses at
any point between solve() calls (blocking clauses), and solve under
assumption literals. Literals are DIMACS-style signed ints over 1-based
variables.

The search is deterministic: VSIDS activity with index tie-breaking, saved
phases (default negative), Luby restarts, first-UIP learning, no clause
deletion and no randomization. The compiled extension (_satcore) implements
the same algorithm; either backend must produce identical answers and, for
fixed clause/assumption order, identical models.
"""

from __future__ import annotations

import time
from heapq import heappop, heappush
from typing import Iterable, List, Optional, Sequence

_UNDEF = -1
_TRUE = 1
_FALSE = 0


def luby(i: int) -> int:
    """The i-th element (1-based) of the Luby restart sequence
    1, 1, 2, 1, 1, 2, 4, 1, 1, 2, 1, 1, 2, 4, 8, ..."""
    x = i - 1
    size, seq = 1, 0
    while size < x + 1:
        seq += 1
        size = 2 * size + 1
    while size - 1 != x:
        size = (size - 1) >> 1
        seq -= 1
        x %= size
    return 1 << seq


class Solver:
    VAR_DECAY = 0.95
    RESTART_BASE = 100

    def __init__(self):
        self.n_vars = 0
        self.clauses: List[List[int]] = []
        self.watches: List[List[int]] = []
        self.assign: List[int] = []  # per var: _UNDEF/_TRUE/_FALSE
        self.level: List[int] = []
        self.reason: List[int] = []
        self.polarity: List[bool] = []
        self.activity: List[float] = []
        self.var_inc = 1.0
        self.heap: List = []
        self.trail: List[int] = []
        self.trail_lim: List[int] = []
        self.qhead = 0
        self.ok = True
        self._model: List[int] = []
        self.conflicts = 0

    # -- variables and literals --

    def new_var(self) -> int:
        self.n_vars += 1
        self.assign.append(_UNDEF)
        self.level.append(0)
        self.reason.append(-1)
        self.polarity.append(False)
        self.activity.append(0.0)
        self.watches.append([])
        self.watches.append([])
        heappush(self.heap, (0.0, self.n_vars - 1))
        return self.n_vars

    def _int_lit(self, lit: int) -> int:
        var = abs(lit) - 1
        if var >= self.n_vars:
            raise ValueError(f"literal {lit} references an unknown variable")
        return 2 * var + (0 if lit > 0 else 1)

    def _value(self, lit: int) -> int:
        a = self.assign[lit >> 1]
        if a == _UNDEF:
            return _UNDEF
        return _TRUE if a == (1 - (lit & 1)) else _FALSE

    # -- clause management --

    def add_clause(self, lits: Iterable[int]) -> bool:
        """Add a clause; returns False once the formula is trivially UNSAT."""
        if not self.ok:
            return False
        self._backtrack(0)
        seen = set()
        clause: List[int] = []
        for ext in lits:
            lit = self._int_lit(ext)
            if lit ^ 1 in seen:
                return True  # tautology
            if lit in seen:
                continue
            v = self._value(lit)
            if v == _TRUE:
                return True  # satisfied at root
            if v == _FALSE:
                continue  # falsified at root, drop
            seen.add(lit)
            clause.append(lit)
        if not clause:
            self.ok = False
            return False
        if len(clause) == 1:
            self._enqueue(clause[0], -1)
            self.ok = self._propagate() == -1
            return self.ok
        ci = len(self.clauses)
        self.clauses.append(clause)
        self.watches[clause[0]].append(ci)
        self.watches[clause[1]].append(ci)
        return True

    # -- assignment trail --

    def _enqueue(self, lit: int, reason_ci: int) -> None:
        var = lit >> 1
        self.assign[var] = 1 - (lit & 1)
        self.level[var] = len(self.trail_lim)
        self.reason[var] = reason_ci
        self.trail.append(lit)

    def _backtrack(self, target_level: int) -> None:
        if len(self.trail_lim) <= target_level:
            return
        limit = self.trail_lim[target_level]
        for lit in reversed(self.trail[limit:]):
            var = lit >> 1
            self.polarity[var] = not (lit & 1)
            self.assign[var] = _UNDEF
            heappush(self.heap, (-self.activity[var], var))
        del self.trail[limit:]
        del self.trail_lim[target_level:]
        self.qhead = len(self.trail)

    # -- propagation --

    def _propagate(self) -> int:
        """Unit propagation; returns a conflicting clause index or -1."""
        while self.qhead < len(self.trail):
            p = self.trail[self.qhead]
            self.qhead += 1
            not_p = p ^ 1
            ws = self.watches[not_p]
            kept: List[int] = []
            conflict = -1
            i = 0
            n = len(ws)
            while i < n:
                ci = ws[i]
                i += 1
                clause = self.clauses[ci]
                if clause[0] == not_p:
                    clause[0] = clause[1]
                    clause[1] = not_p
                first = clause[0]
                if self._value(first) == _TRUE:
                    kept.append(ci)
                    continue
                moved = False
                for k in range(2, len(clause)):
                    if self._value(clause[k]) != _FALSE:
                        clause[1] = clause[k]
                        clause[k] = not_p
                        self.watches[clause[1]].append(ci)
                        moved = True
                        break
                if moved:
                    continue
                kept.append(ci)
                if self._value(first) == _FALSE:
                    kept.extend(ws[i:])
                    conflict = ci
                    break
                self._enqueue(first, ci)
            self.watches[not_p] = kept
            if conflict >= 0:
                return conflict
        return -1

    # -- conflict analysis --

    def _bump(self, var: int) -> None:
        self.activity[var] += self.var_inc
        if self.activity[var] > 1e100:
            for v in range(self.n_vars):
                self.activity[v] *= 1e-100
            self.var_inc *= 1e-100
            self.heap = [(-self.activity[v], v) for v in range(self.n_vars) if self.assign[v] == _UNDEF]
            self.heap.sort()
        if self.assign[var] == _UNDEF:
            heappush(self.heap, (-self.activity[var], var))

    def _analyze(self, conflict_ci: int):
        learnt = [0]
        seen = [False] * self.n_vars
        counter = 0
        p = -1
        ci = conflict_ci
        index = len(self.trail) - 1
        current = len(self.trail_lim)
        while True:
            clause = self.clauses[ci]
            for lit in clause if p == -1 else clause[1:]:
                var = lit >> 1
                if not seen[var] and self.level[var] > 0:
                    seen[var] = True
                    self._bump(var)
                    if self.level[var] >= current:
                        counter += 1
                    else:
                        learnt.append(lit)
            while not seen[self.trail[index] >> 1]:
                index -= 1
            p = self.trail[index]
            index -= 1
            seen[p >> 1] = False
            counter -= 1
            if counter == 0:
                break
            ci = self.reason[p >> 1]
        learnt[0] = p ^ 1
        if len(learnt) == 1:
            return learnt, 0
        # second-highest decision level becomes the backjump target
        max_i = 1
        for i in range(2, len(learnt)):
            if self.level[learnt[i] >> 1] > self.level[learnt[max_i] >> 1]:
                max_i = i
        learnt[1], learnt[max_i] = learnt[max_i], learnt[1]
        return learnt, self.level[learnt[1] >> 1]

    # -- search --

    def _pick_branch(self) -> int:
        while self.heap:
            _, var = heappop(self.heap)
            if self.assign[var] == _UNDEF:
                return 2 * var + (0 if self.polarity[var] else 1)
        for var in range(self.n_vars):
            if self.assign[var] == _UNDEF:
                return 2 * var + (0 if self.polarity[var] else 1)
        return -1

    def solve(
        self,
        assumptions: Sequence[int] = (),
        timeout_s: Optional[float] = None,
    ) -> Optional[bool]:
        """True=SAT, False=UNSAT (under assumptions), None=timeout."""
        if not self.ok:
            return False
        assume = [self._int_lit(a) for a in assumptions]
        self._backtrack(0)
        if self._propagate() != -1:
            self.ok = False
            return False
        deadline = time.monotonic() + timeout_s if timeout_s is not None else None
        restart_count = 0
        budget = self.RESTART_BASE * luby(1)
        since_restart = 0
        while True:
            conflict = self._propagate()
            if conflict >= 0:
                self.conflicts += 1
                since_restart += 1
                if not self.trail_lim:
                    self.ok = False
                    return False
                learnt, back_level = self._analyze(conflict)
                self._backtrack(back_level)
                if len(learnt) == 1:
                    self._enqueue(learnt[0], -1)
                else:
                    ci = len(self.clauses)
                    self.clauses.append(learnt)
                    self.watches[learnt[0]].append(ci)
                    self.watches[learnt[1]].append(ci)
                    self._enqueue(learnt[0], ci)
                self.var_inc /= self.VAR_DECAY
                if deadline is not None and self.conflicts % 256 == 0 and time.monotonic() > deadline:
                    self._backtrack(0)
                    return None
                if since_restart >= budget:
                    restart_count += 1
                    budget = self.RESTART_BASE * luby(restart_count + 1)
                    since_restart = 0
                    self._backtrack(0)
                continue
            if len(self.trail_lim) < len(assume):
                p = assume[len(self.trail_lim)]
                v = self._value(p)
                if v == _TRUE:
                    self.trail_lim.append(len(self.trail))
                    continue
                if v == _FALSE:
                    self._backtrack(0)
                    return False
                self.trail_lim.append(len(self.trail))
                self._enqueue(p, -1)
                continue
            lit = self._pick_branch()
            if lit == -1:
                self._model = list(self.assign)
                self._backtrack(0)
                return True
            self.trail_lim.append(len(self.trail))
            self._enqueue(lit, -1)

    # -- model access --

    def model_value(self, var: int) -> bool:
        return self._model[var - 1] == 1

    def model(self) -> List[int]:
        return [v + 1 if self._model[v] == 1 else -(v + 1) for v in range(self.n_vars)]
