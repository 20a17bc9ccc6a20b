# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled CDCL SAT core.

A faithful port of argonaut.sat.core_py with typed hot loops; both backends
must return identical answers and, for a fixed clause/assumption order,
identical models. Selected automatically at import by argonaut.sat when this
extension built (override with ARGONAUT_SAT_BACKEND).
"""

import time
from cpython cimport array
import array as _array

from heapq import heappop, heappush

cdef int UNDEF = -1
cdef int TRUE = 1
cdef int FALSE = 0


cpdef long luby(long i):
    # 1-based Luby sequence: 1, 1, 2, 1, 1, 2, 4, 1, 1, 2, 1, 1, 2, 4, 8, ...
    cdef long x = i - 1
    cdef long size = 1
    cdef int seq = 0
    while size < x + 1:
        seq += 1
        size = 2 * size + 1
    while size - 1 != x:
        size = (size - 1) >> 1
        seq -= 1
        x = x % size
    return 1 << seq


cdef class Solver:
    cdef public int n_vars
    cdef list clauses
    cdef list watches
    cdef array.array _assign
    cdef array.array _level
    cdef array.array _reason
    cdef array.array _polarity
    cdef list activity
    cdef double var_inc
    cdef list heap
    cdef list trail
    cdef list trail_lim
    cdef int qhead
    cdef public bint ok
    cdef array.array _model
    cdef public long conflicts

    VAR_DECAY = 0.95
    RESTART_BASE = 100

    def __cinit__(self):
        self.n_vars = 0
        self.clauses = []
        self.watches = []
        self._assign = _array.array("i")
        self._level = _array.array("i")
        self._reason = _array.array("i")
        self._polarity = _array.array("i")
        self.activity = []
        self.var_inc = 1.0
        self.heap = []
        self.trail = []
        self.trail_lim = []
        self.qhead = 0
        self.ok = True
        self._model = _array.array("i")
        self.conflicts = 0

    # -- variables and literals --

    def new_var(self):
        self.n_vars += 1
        self._assign.append(UNDEF)
        self._level.append(0)
        self._reason.append(-1)
        self._polarity.append(0)
        self.activity.append(0.0)
        self.watches.append([])
        self.watches.append([])
        heappush(self.heap, (0.0, self.n_vars - 1))
        return self.n_vars

    cdef int _int_lit(self, int lit) except -2:
        cdef int var = lit if lit > 0 else -lit
        var -= 1
        if var >= self.n_vars:
            raise ValueError(f"literal {lit} references an unknown variable")
        return 2 * var + (0 if lit > 0 else 1)

    cdef inline int _value(self, int lit):
        cdef int a = self._assign.data.as_ints[lit >> 1]
        if a == UNDEF:
            return UNDEF
        return TRUE if a == (1 - (lit & 1)) else FALSE

    # -- clause management --

    def add_clause(self, lits):
        if not self.ok:
            return False
        self._backtrack(0)
        cdef set seen = set()
        cdef list clause = []
        cdef int lit, v
        for ext in lits:
            lit = self._int_lit(ext)
            if (lit ^ 1) in seen:
                return True
            if lit in seen:
                continue
            v = self._value(lit)
            if v == TRUE:
                return True
            if v == FALSE:
                continue
            seen.add(lit)
            clause.append(lit)
        if not clause:
            self.ok = False
            return False
        if len(clause) == 1:
            self._enqueue(clause[0], -1)
            self.ok = self._propagate() == -1
            return self.ok
        cdef int ci = len(self.clauses)
        self.clauses.append(clause)
        (<list>self.watches[<int>clause[0]]).append(ci)
        (<list>self.watches[<int>clause[1]]).append(ci)
        return True

    # -- assignment trail --

    cdef void _enqueue(self, int lit, int reason_ci):
        cdef int var = lit >> 1
        self._assign.data.as_ints[var] = 1 - (lit & 1)
        self._level.data.as_ints[var] = len(self.trail_lim)
        self._reason.data.as_ints[var] = reason_ci
        self.trail.append(lit)

    cdef void _backtrack(self, int target_level):
        cdef int lit, var, limit
        if len(self.trail_lim) <= target_level:
            return
        limit = <int>self.trail_lim[target_level]
        cdef int i
        for i in range(len(self.trail) - 1, limit - 1, -1):
            lit = <int>self.trail[i]
            var = lit >> 1
            self._polarity.data.as_ints[var] = 0 if (lit & 1) else 1
            self._assign.data.as_ints[var] = UNDEF
            heappush(self.heap, (-<double>self.activity[var], var))
        del self.trail[limit:]
        del self.trail_lim[target_level:]
        self.qhead = len(self.trail)

    # -- propagation --

    cdef int _propagate(self):
        cdef int p, not_p, ci, first, k, i, n, conflict
        cdef list ws, kept, clause
        while self.qhead < len(self.trail):
            p = <int>self.trail[self.qhead]
            self.qhead += 1
            not_p = p ^ 1
            ws = <list>self.watches[not_p]
            kept = []
            conflict = -1
            i = 0
            n = len(ws)
            while i < n:
                ci = <int>ws[i]
                i += 1
                clause = <list>self.clauses[ci]
                if <int>clause[0] == not_p:
                    clause[0] = clause[1]
                    clause[1] = not_p
                first = <int>clause[0]
                if self._value(first) == TRUE:
                    kept.append(ci)
                    continue
                moved = False
                for k in range(2, len(clause)):
                    if self._value(<int>clause[k]) != FALSE:
                        clause[1] = clause[k]
                        clause[k] = not_p
                        (<list>self.watches[<int>clause[1]]).append(ci)
                        moved = True
                        break
                if moved:
                    continue
                kept.append(ci)
                if self._value(first) == FALSE:
                    kept.extend(ws[i:])
                    conflict = ci
                    break
                self._enqueue(first, ci)
            self.watches[not_p] = kept
            if conflict >= 0:
                return conflict
        return -1

    # -- conflict analysis --

    cdef void _bump(self, int var):
        cdef int v
        self.activity[var] = <double>self.activity[var] + self.var_inc
        if <double>self.activity[var] > 1e100:
            for v in range(self.n_vars):
                self.activity[v] = <double>self.activity[v] * 1e-100
            self.var_inc *= 1e-100
            self.heap = [
                (-<double>self.activity[v], v)
                for v in range(self.n_vars)
                if self._assign.data.as_ints[v] == UNDEF
            ]
            self.heap.sort()
        if self._assign.data.as_ints[var] == UNDEF:
            heappush(self.heap, (-<double>self.activity[var], var))

    cdef tuple _analyze(self, int conflict_ci):
        cdef list learnt = [0]
        cdef array.array seen = _array.array("i", bytes(4 * self.n_vars))
        cdef int counter = 0
        cdef int p = -1
        cdef int ci = conflict_ci
        cdef int index = len(self.trail) - 1
        cdef int current = len(self.trail_lim)
        cdef int lit, var, start, j
        cdef list clause
        while True:
            clause = <list>self.clauses[ci]
            start = 0 if p == -1 else 1
            for j in range(start, len(clause)):
                lit = <int>clause[j]
                var = lit >> 1
                if not seen.data.as_ints[var] and self._level.data.as_ints[var] > 0:
                    seen.data.as_ints[var] = 1
                    self._bump(var)
                    if self._level.data.as_ints[var] >= current:
                        counter += 1
                    else:
                        learnt.append(lit)
            while not seen.data.as_ints[<int>self.trail[index] >> 1]:
                index -= 1
            p = <int>self.trail[index]
            index -= 1
            seen.data.as_ints[p >> 1] = 0
            counter -= 1
            if counter == 0:
                break
            ci = self._reason.data.as_ints[p >> 1]
        learnt[0] = p ^ 1
        if len(learnt) == 1:
            return learnt, 0
        cdef int max_i = 1
        for j in range(2, len(learnt)):
            if self._level.data.as_ints[<int>learnt[j] >> 1] > self._level.data.as_ints[<int>learnt[max_i] >> 1]:
                max_i = j
        learnt[1], learnt[max_i] = learnt[max_i], learnt[1]
        return learnt, self._level.data.as_ints[<int>learnt[1] >> 1]

    # -- search --

    cdef int _pick_branch(self):
        cdef int var
        while self.heap:
            _, var = heappop(self.heap)
            if self._assign.data.as_ints[var] == UNDEF:
                return 2 * var + (0 if self._polarity.data.as_ints[var] else 1)
        for var in range(self.n_vars):
            if self._assign.data.as_ints[var] == UNDEF:
                return 2 * var + (0 if self._polarity.data.as_ints[var] else 1)
        return -1

    def solve(self, assumptions=(), timeout_s=None):
        if not self.ok:
            return False
        cdef list assume = [self._int_lit(a) for a in assumptions]
        self._backtrack(0)
        if self._propagate() != -1:
            self.ok = False
            return False
        cdef double deadline = 0.0
        cdef bint has_deadline = timeout_s is not None
        if has_deadline:
            deadline = time.monotonic() + <double>timeout_s
        cdef int restart_count = 0
        cdef long budget = self.RESTART_BASE * luby(1)
        cdef long since_restart = 0
        cdef int conflict, back_level, ci, lit, v
        cdef list learnt
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
                    self._enqueue(<int>learnt[0], -1)
                else:
                    ci = len(self.clauses)
                    self.clauses.append(learnt)
                    (<list>self.watches[<int>learnt[0]]).append(ci)
                    (<list>self.watches[<int>learnt[1]]).append(ci)
                    self._enqueue(<int>learnt[0], ci)
                self.var_inc /= self.VAR_DECAY
                if has_deadline and self.conflicts % 256 == 0 and time.monotonic() > deadline:
                    self._backtrack(0)
                    return None
                if since_restart >= budget:
                    restart_count += 1
                    budget = self.RESTART_BASE * luby(restart_count + 1)
                    since_restart = 0
                    self._backtrack(0)
                continue
            if len(self.trail_lim) < len(assume):
                lit = <int>assume[len(self.trail_lim)]
                v = self._value(lit)
                if v == TRUE:
                    self.trail_lim.append(len(self.trail))
                    continue
                if v == FALSE:
                    self._backtrack(0)
                    return False
                self.trail_lim.append(len(self.trail))
                self._enqueue(lit, -1)
                continue
            lit = self._pick_branch()
            if lit == -1:
                self._model = array.copy(self._assign)
                self._backtrack(0)
                return True
            self.trail_lim.append(len(self.trail))
            self._enqueue(lit, -1)

    # -- model access --

    def model_value(self, int var):
        return self._model.data.as_ints[var - 1] == 1

    def model(self):
        cdef int v
        return [
            v + 1 if self._model.data.as_ints[v] == 1 else -(v + 1)
            for v in range(self.n_vars)
        ]
