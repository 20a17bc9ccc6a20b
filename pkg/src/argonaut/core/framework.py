"""Bipolar ABA frameworks: sentences, contraries, single-body rules.

A framework is immutable after construction. Every operation on it lives in
:mod:`argonaut.core.semantics` as a pure function, so frameworks can be shared
freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Mapping, Set

from argonaut.errors import FrameworkInvariantError

# Suffix appended to a sentence id to mint its contrary. Node ids containing
# it are rejected when graphs are converted (see core.convert).
CONTRARY_SUFFIX = "!"


class Kind(str, Enum):
    ASSUMPTION = "assumption"
    CONTRARY = "contrary"
    FACT = "fact"


@dataclass(frozen=True)
class Sentence:
    """A natural-language literal. The id is the identity; text is payload."""

    id: str
    text: str = ""
    kind: Kind = Kind.ASSUMPTION

    def __post_init__(self):
        if not self.id:
            raise FrameworkInvariantError("sentence id must be non-empty")


@dataclass(frozen=True)
class Rule:
    """head <- body with a single assumption (or fact) body.

    An assumption head encodes support, a contrary head encodes an attack on
    the assumption owning that contrary.
    """

    head: str
    body: str


@dataclass(frozen=True)
class BipolarFramework:
    """Assumptions, facts, a total contrary map, and single-body rules.

    ``contraries`` must cover every assumption and fact exactly once; rule
    heads must be known assumptions or contraries, rule bodies known
    assumptions or facts. Facts may never appear as rule heads and their
    contraries may never be derived (unidirectionality).
    """

    assumptions: FrozenSet[str]
    contraries: Mapping[str, str]
    rules: FrozenSet[Rule]
    facts: FrozenSet[str] = frozenset()
    sentences: Mapping[str, Sentence] = field(default_factory=dict, compare=False)

    # Derived indexes, filled in __post_init__. Excluded from equality.
    _support_heads: Dict[str, FrozenSet[str]] = field(
        init=False, default_factory=dict, compare=False, repr=False
    )
    _attack_targets: Dict[str, FrozenSet[str]] = field(
        init=False, default_factory=dict, compare=False, repr=False
    )
    _contrary_owner: Dict[str, str] = field(
        init=False, default_factory=dict, compare=False, repr=False
    )

    def __post_init__(self):
        object.__setattr__(self, "assumptions", frozenset(self.assumptions))
        object.__setattr__(self, "facts", frozenset(self.facts))
        object.__setattr__(self, "rules", frozenset(self.rules))
        object.__setattr__(self, "contraries", dict(self.contraries))
        self._validate()
        self._index()

    def _validate(self) -> None:
        overlap = self.assumptions & self.facts
        if overlap:
            raise FrameworkInvariantError(f"ids are both assumption and fact: {sorted(overlap)}")
        nodes = self.assumptions | self.facts
        missing = nodes - self.contraries.keys()
        if missing:
            raise FrameworkInvariantError(f"contrary map not total, missing: {sorted(missing)}")
        contrary_ids: Set[str] = set()
        for owner, contrary in self.contraries.items():
            if owner not in nodes:
                raise FrameworkInvariantError(f"contrary map keyed by unknown id {owner!r}")
            if contrary in nodes:
                raise FrameworkInvariantError(
                    f"contrary {contrary!r} collides with an assumption or fact id"
                )
            if contrary in contrary_ids:
                raise FrameworkInvariantError(f"two sentences share the contrary {contrary!r}")
            contrary_ids.add(contrary)
        for rule in self.rules:
            if rule.body not in nodes:
                raise FrameworkInvariantError(f"rule body {rule.body!r} is not in the framework")
            if rule.head in self.facts:
                raise FrameworkInvariantError(
                    f"rule head {rule.head!r} is a fact; edges into facts are not representable"
                )
            if rule.head not in self.assumptions and rule.head not in contrary_ids:
                raise FrameworkInvariantError(
                    f"rule head {rule.head!r} is neither an assumption nor a known contrary"
                )

    def _index(self) -> None:
        owner = {contrary: owned for owned, contrary in self.contraries.items()}
        support: Dict[str, Set[str]] = {}
        attack: Dict[str, Set[str]] = {}
        for rule in self.rules:
            if rule.head in self.assumptions:
                support.setdefault(rule.body, set()).add(rule.head)
            else:
                target = owner[rule.head]
                if target in self.facts:
                    raise FrameworkInvariantError(
                        f"rule attacks the fact {target!r}; facts are unattackable"
                    )
                attack.setdefault(rule.body, set()).add(target)
        object.__setattr__(
            self, "_support_heads", {b: frozenset(h) for b, h in support.items()}
        )
        object.__setattr__(
            self, "_attack_targets", {b: frozenset(t) for b, t in attack.items()}
        )
        object.__setattr__(self, "_contrary_owner", owner)

    # -- read-only views used by the semantics functions --

    def support_heads(self, body: str) -> FrozenSet[str]:
        """Assumptions directly supported by ``body`` (rule heads)."""
        return self._support_heads.get(body, frozenset())

    def attack_targets(self, body: str) -> FrozenSet[str]:
        """Assumptions whose contrary ``body`` directly derives."""
        return self._attack_targets.get(body, frozenset())

    def contrary_of(self, sentence_id: str) -> str:
        return self.contraries[sentence_id]

    def is_known(self, sentence_id: str) -> bool:
        return sentence_id in self.assumptions or sentence_id in self.facts

    def sorted_assumptions(self) -> list:
        """Assumption ids in the canonical (sorted) order shared with the SAT
        encoding's variable numbering."""
        return sorted(self.assumptions)

    def text_of(self, sentence_id: str) -> str:
        sent = self.sentences.get(sentence_id)
        return sent.text if sent else ""


def mint_contraries(ids: Iterable[str]) -> Dict[str, str]:
    """Auto-mint one contrary id per sentence id using the reserved suffix."""
    return {i: i + CONTRARY_SUFFIX for i in ids}
