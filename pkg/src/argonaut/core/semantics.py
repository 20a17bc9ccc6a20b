"""Reference semantics for bipolar ABA frameworks.

All functions are pure. ``enumerate_bruteforce`` is the correctness oracle
for the SAT-backed solver; it scans every subset of the assumptions with a
bit-level engine that mirrors the readable predicates below (the two are
pinned together by exhaustive cross-checks in the test suite).

Facts participate in every derivation: the attack side of any candidate set
is evaluated over the closure of ``S | facts``, so a fact that (directly or
through support chains) derives the contrary of a member rules that set out.
Facts themselves are unattackable, hence an attack rooted at a fact can never
be counter-attacked.

Defense and stability follow the closure-lifted reading: a closed attacker is
the support closure of a single assumption, and it is counter-attacked by
hitting *any* of its members. Singleton attackers suffice because rule bodies
are single assumptions, making closure distribute over unions.
"""

from __future__ import annotations

from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Tuple

from argonaut.core.framework import BipolarFramework
from argonaut.errors import OracleBoundExceededError, UnknownSentenceError

DEFAULT_ORACLE_BOUND = 16


class Semantics(str, Enum):
    ADMISSIBLE = "admissible"
    PREFERRED = "preferred"
    COMPLETE = "complete"
    STABLE = "stable"


AssumptionSet = FrozenSet[str]


def _as_set(f: BipolarFramework, members: Iterable[str]) -> FrozenSet[str]:
    s = frozenset(members)
    unknown = {m for m in s if not f.is_known(m)}
    if unknown:
        raise UnknownSentenceError(f"unknown sentence ids: {sorted(unknown)}")
    return s


def closure(f: BipolarFramework, members: Iterable[str]) -> AssumptionSet:
    """Smallest superset of ``members`` closed under support rules.

    Accepts assumption and fact ids; only assumption heads are ever added,
    so the result stays inside ``members | assumptions``.
    """
    result = set(_as_set(f, members))
    queue = list(result)
    while queue:
        current = queue.pop()
        for head in f.support_heads(current):
            if head not in result:
                result.add(head)
                queue.append(head)
    return frozenset(result)


def derived_contraries(f: BipolarFramework, members: Iterable[str]) -> FrozenSet[str]:
    """Contrary ids derivable from ``members``: heads of attack rules whose
    body lies in the closure."""
    out = set()
    for body in closure(f, members):
        for target in f.attack_targets(body):
            out.add(f.contrary_of(target))
    return frozenset(out)


def attacks(f: BipolarFramework, members: Iterable[str], target: str) -> bool:
    """True iff ``members`` derives the contrary of ``target``."""
    if not f.is_known(target):
        raise UnknownSentenceError(f"unknown sentence id: {target!r}")
    return f.contrary_of(target) in derived_contraries(f, members)


def _augmented(f: BipolarFramework, s: FrozenSet[str]) -> FrozenSet[str]:
    """The derivation base of a candidate set: its members plus every fact."""
    return s | f.facts


def is_conflict_free(f: BipolarFramework, members: Iterable[str]) -> bool:
    """True iff the set (with facts in its derivation base) attacks none of
    its own members, membership taken over the closure."""
    s = _as_set(f, members)
    base = _augmented(f, s)
    return not any(attacks(f, base, x) for x in closure(f, s))


def _singleton_attackers(f: BipolarFramework, target: str) -> List[str]:
    """All single sentences (assumptions and facts) whose closure derives the
    contrary of ``target``."""
    out = []
    for t in sorted(f.assumptions | f.facts):
        if attacks(f, frozenset((t,)), target):
            out.append(t)
    return out


def defends(f: BipolarFramework, members: Iterable[str], target: str) -> bool:
    """True iff every closed attacker of ``target`` is counter-attacked.

    Closed attackers are the closures of singleton attackers; a counter-attack
    hits any member of such a closure. Attacks rooted at facts cannot be
    counter-attacked, so a fact-attacked target is never defended.
    """
    if not f.is_known(target):
        raise UnknownSentenceError(f"unknown sentence id: {target!r}")
    s = _as_set(f, members)
    base = _augmented(f, s)
    for attacker in _singleton_attackers(f, target):
        if attacker in f.facts:
            return False
        if not any(attacks(f, base, y) for y in closure(f, frozenset((attacker,)))):
            return False
    return True


def is_closed(f: BipolarFramework, members: Iterable[str]) -> bool:
    s = _as_set(f, members)
    return closure(f, s) == s


def satisfies(f: BipolarFramework, members: Iterable[str], semantics: Semantics) -> bool:
    """Check a candidate assumption set against one of the four semantics.

    admissible: closed, conflict-free, defends every member.
    complete:   admissible and contains every assumption it defends.
    preferred:  admissible with no admissible strict superset.
    stable:     closed, conflict-free, and attacking the closure of every
                outside assumption.
    """
    s = _as_set(f, members)
    if s - f.assumptions:
        return False
    semantics = Semantics(semantics)
    if semantics is Semantics.PREFERRED:
        # Maximality needs a scan over supersets; keep it behind the oracle bound.
        if len(f.assumptions) > DEFAULT_ORACLE_BOUND:
            raise OracleBoundExceededError(
                "preferred-semantics membership check requires enumeration; "
                f"{len(f.assumptions)} assumptions exceed the bound {DEFAULT_ORACLE_BOUND}"
            )
        if not satisfies(f, s, Semantics.ADMISSIBLE):
            return False
        engine = _BitEngine(f)
        return engine.mask_of(s) in set(engine.preferred())
    closed = is_closed(f, s) and is_conflict_free(f, s)
    if not closed:
        return False
    if semantics is Semantics.STABLE:
        base = _augmented(f, s)
        for outside in f.assumptions - s:
            closed_attackee = closure(f, frozenset((outside,)))
            if not any(attacks(f, base, y) for y in closed_attackee):
                return False
        return True
    if not all(defends(f, s, x) for x in s):
        return False
    if semantics is Semantics.COMPLETE:
        return all(x in s for x in f.assumptions if defends(f, s, x))
    return True


class _BitEngine:
    """Subset predicates over bit masks; one instance per framework.

    Assumption index i is position i of ``sorted(assumptions)``, the same
    ordering the SAT encoding uses for variable numbering. Relies on closure
    distributing over unions (single-assumption rule bodies).
    """

    def __init__(self, f: BipolarFramework):
        self.f = f
        self.ids: List[str] = f.sorted_assumptions()
        self.index: Dict[str, int] = {a: i for i, a in enumerate(self.ids)}
        n = self.n = len(self.ids)

        support = [0] * n  # direct support heads, assumption bodies only
        direct_attack = [0] * n  # direct attack rule targets per assumption body
        for i, a in enumerate(self.ids):
            for head in f.support_heads(a):
                support[i] |= 1 << self.index[head]
            for target in f.attack_targets(a):
                direct_attack[i] |= 1 << self.index[target]

        self.closure1 = [0] * n  # singleton support closures
        for i in range(n):
            mask = 1 << i
            frontier = [i]
            while frontier:
                j = frontier.pop()
                new = support[j] & ~mask
                mask |= support[j]
                while new:
                    low = new & -new
                    frontier.append(low.bit_length() - 1)
                    new &= new - 1
            self.closure1[i] = mask

        # att[t] = assumptions x with {t} |- contrary(x); attackers_of is its transpose
        self.att = [0] * n
        for t in range(n):
            row = 0
            cl = self.closure1[t]
            while cl:
                low = cl & -cl
                row |= direct_attack[low.bit_length() - 1]
                cl &= cl - 1
            self.att[t] = row
        self.attackers_of = [0] * n
        for t in range(n):
            row = self.att[t]
            while row:
                low = row & -row
                self.attackers_of[low.bit_length() - 1] |= 1 << t
                row &= row - 1

        # Fact side: everything derivable from the facts alone.
        fact_base = closure(f, f.facts)
        fact_attacked = 0  # assumptions whose contrary the fact base derives
        for b in fact_base:
            for target in f.attack_targets(b):
                fact_attacked |= 1 << self.index[target]
        self.fact_attacked = fact_attacked

        # counterers_of[t] = assumptions that hit some member of closure({t});
        # fact_counters[t] = the fact base does.
        self.counterers_of = [0] * n
        self.fact_counters = [False] * n
        for t in range(n):
            cl = self.closure1[t]
            mask = 0
            for u in range(n):
                if self.att[u] & cl:
                    mask |= 1 << u
            self.counterers_of[t] = mask
            self.fact_counters[t] = bool(fact_attacked & cl)

    def mask_of(self, members: FrozenSet[str]) -> int:
        mask = 0
        for m in members:
            mask |= 1 << self.index[m]
        return mask

    def set_of(self, mask: int) -> FrozenSet[str]:
        out = []
        while mask:
            low = mask & -mask
            out.append(self.ids[low.bit_length() - 1])
            mask &= mask - 1
        return frozenset(out)

    def closure_mask(self, s: int) -> int:
        mask = s
        while s:
            low = s & -s
            mask |= self.closure1[low.bit_length() - 1]
            s &= s - 1
        return mask

    def is_closed(self, s: int) -> bool:
        return self.closure_mask(s) == s

    def is_conflict_free(self, s: int) -> bool:
        cl = self.closure_mask(s)
        if cl & self.fact_attacked:
            return False
        while cl:
            low = cl & -cl
            if self.attackers_of[low.bit_length() - 1] & s:
                return False
            cl &= cl - 1
        return True

    def _defended(self, s: int, x: int) -> bool:
        if self.fact_attacked & (1 << x):
            return False
        attackers = self.attackers_of[x]
        while attackers:
            low = attackers & -attackers
            t = low.bit_length() - 1
            if not self.fact_counters[t] and not (self.counterers_of[t] & s):
                return False
            attackers &= attackers - 1
        return True

    def is_admissible(self, s: int) -> bool:
        if not self.is_closed(s) or not self.is_conflict_free(s):
            return False
        rest = s
        while rest:
            low = rest & -rest
            if not self._defended(s, low.bit_length() - 1):
                return False
            rest &= rest - 1
        return True

    def is_complete(self, s: int) -> bool:
        if not self.is_admissible(s):
            return False
        outside = ~s & ((1 << self.n) - 1)
        while outside:
            low = outside & -outside
            if self._defended(s, low.bit_length() - 1):
                return False
            outside &= outside - 1
        return True

    def is_stable(self, s: int) -> bool:
        if not self.is_closed(s) or not self.is_conflict_free(s):
            return False
        outside = ~s & ((1 << self.n) - 1)
        while outside:
            low = outside & -outside
            t = low.bit_length() - 1
            if not self.fact_counters[t] and not (self.counterers_of[t] & s):
                return False
            outside &= outside - 1
        return True

    def admissible_masks(self) -> List[int]:
        return [s for s in range(1 << self.n) if self.is_admissible(s)]

    def preferred(self) -> List[int]:
        admissible = self.admissible_masks()
        admissible.sort(key=lambda m: bin(m).count("1"), reverse=True)
        maximal: List[int] = []
        for s in admissible:
            if not any(s & m == s for m in maximal):
                maximal.append(s)
        return maximal

    def enumerate(self, semantics: Semantics) -> List[int]:
        if semantics is Semantics.PREFERRED:
            return self.preferred()
        check = {
            Semantics.ADMISSIBLE: self.is_admissible,
            Semantics.COMPLETE: self.is_complete,
            Semantics.STABLE: self.is_stable,
        }[semantics]
        return [s for s in range(1 << self.n) if check(s)]


def extension_sort_key(members: FrozenSet[str]) -> Tuple[int, Tuple[str, ...]]:
    """Size-descending, then lexicographic over sorted member ids."""
    return (-len(members), tuple(sorted(members)))


def enumerate_bruteforce(
    f: BipolarFramework,
    semantics: Semantics,
    bound: int = DEFAULT_ORACLE_BOUND,
) -> List[AssumptionSet]:
    """Exhaustively enumerate every extension of the chosen semantics.

    Refuses frameworks with more assumptions than ``bound`` so an accidental
    call cannot start a 2^n scan that never returns.
    """
    semantics = Semantics(semantics)
    n = len(f.assumptions)
    if n > bound:
        raise OracleBoundExceededError(
            f"{n} assumptions exceed the oracle bound of {bound}; "
            f"raise the bound explicitly if this is intended"
        )
    engine = _BitEngine(f)
    sets = [engine.set_of(mask) for mask in engine.enumerate(semantics)]
    sets.sort(key=extension_sort_key)
    return sets
