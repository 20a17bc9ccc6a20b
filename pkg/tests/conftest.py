import random

import pytest

from argonaut.core.framework import BipolarFramework, Rule, mint_contraries


def build_framework(assumptions, support=(), attack=(), facts=()):
    """Small-framework builder: support/attack as (source, target) pairs.

    support (a, b) reads "a supports b" (rule b <- a); attack (a, b) reads
    "a attacks b" (rule contrary(b) <- a).
    """
    assumptions = frozenset(assumptions)
    facts = frozenset(facts)
    contraries = mint_contraries(assumptions | facts)
    rules = set()
    for src, dst in support:
        rules.add(Rule(head=dst, body=src))
    for src, dst in attack:
        rules.add(Rule(head=contraries[dst], body=src))
    return BipolarFramework(
        assumptions=assumptions,
        facts=facts,
        contraries=contraries,
        rules=frozenset(rules),
    )


@pytest.fixture
def g1():
    """b attacks a."""
    return build_framework({"a", "b"}, attack=[("b", "a")])


@pytest.fixture
def g2():
    """c supports a, b attacks a."""
    return build_framework({"a", "b", "c"}, support=[("c", "a")], attack=[("b", "a")])


@pytest.fixture
def g3():
    """c attacks b, b attacks a."""
    return build_framework({"a", "b", "c"}, attack=[("c", "b"), ("b", "a")])


DENSITIES = (0.0, 0.05, 0.1, 0.2, 0.35)


def random_framework(rng: random.Random, max_assumptions: int = 10, allow_facts: bool = True):
    """Random framework with independent support/attack densities; sometimes
    carries facts with outgoing fact rules (the unidirectional regime)."""
    n = rng.randint(1, max_assumptions)
    assumptions = [f"a{i}" for i in range(n)]
    n_facts = rng.choice((0, 0, 0, 1, 2)) if allow_facts else 0
    facts = [f"f{i}" for i in range(n_facts)]
    contraries = mint_contraries(set(assumptions) | set(facts))
    p_support = rng.choice(DENSITIES)
    p_attack = rng.choice(DENSITIES)
    rules = set()
    for src in assumptions:
        for dst in assumptions:
            if src == dst:
                continue
            if rng.random() < p_support:
                rules.add(Rule(head=dst, body=src))
            if rng.random() < p_attack:
                rules.add(Rule(head=contraries[dst], body=src))
    for fact in facts:
        for dst in assumptions:
            roll = rng.random()
            if roll < 0.15:
                rules.add(Rule(head=contraries[dst], body=fact))
            elif roll < 0.25:
                rules.add(Rule(head=dst, body=fact))
    return BipolarFramework(
        assumptions=frozenset(assumptions),
        facts=frozenset(facts),
        contraries=contraries,
        rules=frozenset(rules),
    )
