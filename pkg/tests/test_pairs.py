import random

import pytest

from argonaut.errors import ConfigError
from argonaut.pipeline.documents import Section
from argonaut.pipeline.extraction import LiteralSpan
from argonaut.pipeline.pairs import WindowMode, generate_pairs


def make_sections(count):
    return [Section(index=i, text=f"s{i}", start=i * 10, end=i * 10 + 2) for i in range(count)]


def make_literals(per_section):
    literals = []
    for section, count in enumerate(per_section):
        for j in range(count):
            lid = f"l{section}_{j}"
            literals.append(LiteralSpan(id=lid, section=section, text=lid, start=0, end=1))
    return literals


def test_within_section_example():
    literals = make_literals([2, 1])
    pairs = generate_pairs(literals, make_sections(2), WindowMode.within_section())
    assert pairs == {("l0_0", "l0_1"), ("l0_1", "l0_0")}


def test_window_one_spans_both_sections():
    literals = make_literals([2, 1])
    pairs = generate_pairs(literals, make_sections(2), WindowMode.window(1))
    assert len(pairs) == 6  # all ordered pairs over 3 literals


def test_single_section_permutation_count():
    for n in range(2, 7):
        literals = make_literals([n])
        pairs = generate_pairs(literals, make_sections(1), WindowMode.within_section())
        assert len(pairs) == n * (n - 1)


def test_window_extremes_match_named_modes():
    rng = random.Random(12)
    for _ in range(20):
        sections = make_sections(rng.randint(1, 6))
        literals = make_literals([rng.randint(0, 4) for _ in sections])
        within = generate_pairs(literals, sections, WindowMode.within_section())
        window0 = generate_pairs(literals, sections, WindowMode.window(0))
        all_mode = generate_pairs(literals, sections, WindowMode.all_sections())
        window_big = generate_pairs(literals, sections, WindowMode.window(len(sections)))
        assert within == window0
        assert all_mode == window_big


def test_pair_counts_monotone_in_window_size():
    rng = random.Random(3)
    sections = make_sections(5)
    literals = make_literals([rng.randint(1, 3) for _ in sections])
    counts = [
        len(generate_pairs(literals, sections, WindowMode.window(n))) for n in range(6)
    ]
    assert counts == sorted(counts)
    assert counts[-1] == len(generate_pairs(literals, sections, WindowMode.all_sections()))


def test_within_section_count_formula():
    per_section = [3, 0, 2, 5]
    literals = make_literals(per_section)
    pairs = generate_pairs(literals, make_sections(4), WindowMode.within_section())
    assert len(pairs) == sum(n * (n - 1) for n in per_section)


def test_dedup_idempotence():
    literals = make_literals([2, 2])
    sections = make_sections(2)
    once = generate_pairs(literals, sections, WindowMode.window(1))
    assert once | generate_pairs(literals, sections, WindowMode.window(1)) == once


def test_no_self_pairs():
    literals = make_literals([4])
    pairs = generate_pairs(literals, make_sections(1), WindowMode.all_sections())
    assert all(a != b for a, b in pairs)


def test_mode_parsing():
    assert WindowMode.parse("within") == WindowMode.within_section()
    assert WindowMode.parse("all") == WindowMode.all_sections()
    assert WindowMode.parse("window:2") == WindowMode.window(2)
    with pytest.raises(ConfigError):
        WindowMode.parse("window:x")
    with pytest.raises(ConfigError):
        WindowMode.window(-1)
