"""Ordered-pair generation with window modes.

For each section k, all ordered pairs among the literals of sections within
k +/- n are produced and merged into one duplicate-free set. n = 0 is
within-section; n at or above the section count is all-sections.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Set, Tuple

from argonaut.errors import ConfigError
from argonaut.pipeline.documents import Section
from argonaut.pipeline.extraction import LiteralSpan

WITHIN_SECTION = "within-section"
WINDOW = "window"
ALL_SECTIONS = "all-sections"

OrderedPair = Tuple[str, str]


@dataclass(frozen=True)
class WindowMode:
    mode: str
    n: int = 0

    def __post_init__(self):
        if self.mode not in (WITHIN_SECTION, WINDOW, ALL_SECTIONS):
            raise ConfigError(f"unknown window mode {self.mode!r}")
        if self.mode == WINDOW and self.n < 0:
            raise ConfigError(f"window size must be non-negative, got {self.n}")

    @classmethod
    def within_section(cls) -> "WindowMode":
        return cls(WITHIN_SECTION)

    @classmethod
    def window(cls, n: int) -> "WindowMode":
        return cls(WINDOW, n)

    @classmethod
    def all_sections(cls) -> "WindowMode":
        return cls(ALL_SECTIONS)

    @classmethod
    def parse(cls, text: str) -> "WindowMode":
        text = text.strip().lower()
        if text in (WITHIN_SECTION, "within"):
            return cls.within_section()
        if text in (ALL_SECTIONS, "all"):
            return cls.all_sections()
        if text.startswith("window:"):
            try:
                return cls.window(int(text.split(":", 1)[1]))
            except ValueError:
                raise ConfigError(f"bad window size in {text!r}") from None
        raise ConfigError(f"cannot parse window mode {text!r}")

    def radius(self, section_count: int) -> int:
        if self.mode == WITHIN_SECTION:
            return 0
        if self.mode == ALL_SECTIONS:
            return section_count
        return self.n

    def describe(self) -> str:
        return f"{WINDOW}:{self.n}" if self.mode == WINDOW else self.mode


def generate_pairs(
    literals: Sequence[LiteralSpan],
    sections: Sequence[Section],
    mode: WindowMode,
) -> Set[OrderedPair]:
    by_section: Dict[int, List[str]] = {}
    for span in literals:
        by_section.setdefault(span.section, []).append(span.id)
    count = len(sections)
    radius = mode.radius(count)
    pairs: Set[OrderedPair] = set()
    for k in range(count):
        bucket: List[str] = []
        for section in range(max(0, k - radius), min(count - 1, k + radius) + 1):
            bucket.extend(by_section.get(section, ()))
        for a in bucket:
            for b in bucket:
                if a != b:
                    pairs.add((a, b))
    return pairs
