"""Literal extraction and span/token-label round trips.

Extractor clients answer with an id -> span-text map; spans are located in
the section by first exact occurrence and anything unlocatable is dropped
with a warning. The BIEO helpers mirror the span <-> token-label conversion
used when evaluating extraction as sequence labeling.
"""

from __future__ import annotations

import itertools
import logging
import re
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from argonaut.pipeline.clients import ExtractorClient
from argonaut.pipeline.documents import Section

log = logging.getLogger(__name__)

_TOKEN = re.compile(r"\S+")


@dataclass(frozen=True)
class LiteralSpan:
    id: str
    section: int
    text: str
    start: int  # offsets within the section text
    end: int


def extract_literals(
    section: Section,
    client: ExtractorClient,
    counter: Optional[Iterator[int]] = None,
    id_prefix: str = "a",
) -> Tuple[List[LiteralSpan], int]:
    """Located literal spans plus the count of dropped (unlocatable) spans.

    Pass a shared counter to keep ids unique across a whole document.
    """
    counter = counter if counter is not None else itertools.count()
    spans: List[LiteralSpan] = []
    dropped = 0
    raw = client.extract(section.text)
    for _, text in sorted(raw.items()):
        position = section.text.find(text)
        if position < 0:
            dropped += 1
            log.warning(
                "section %d: extractor span not found in section text: %r",
                section.index,
                text[:80],
            )
            continue
        spans.append(
            LiteralSpan(
                id=f"{id_prefix}{next(counter)}",
                section=section.index,
                text=text,
                start=position,
                end=position + len(text),
            )
        )
    return spans, dropped


def tokenize(text: str) -> List[Tuple[str, int, int]]:
    return [(m.group(), m.start(), m.end()) for m in _TOKEN.finditer(text)]


def spans_to_bieo(text: str, spans: List[Tuple[int, int]]) -> List[str]:
    """Token labels B/I/E/O for non-overlapping character spans; a span
    covering a single token is labeled B alone."""
    tokens = tokenize(text)
    labels = ["O"] * len(tokens)
    for span_start, span_end in spans:
        inside = [
            i for i, (_, ts, te) in enumerate(tokens) if ts >= span_start and te <= span_end
        ]
        if not inside:
            continue
        labels[inside[0]] = "B"
        for i in inside[1:-1]:
            labels[i] = "I"
        if len(inside) > 1:
            labels[inside[-1]] = "E"
    return labels


def bieo_to_spans(text: str, labels: List[str]) -> List[Tuple[int, int]]:
    tokens = tokenize(text)
    spans: List[Tuple[int, int]] = []
    open_start: Optional[int] = None
    last_end = 0
    for (_, ts, te), label in zip(tokens, labels):
        if label == "B":
            if open_start is not None:
                spans.append((open_start, last_end))
            open_start, last_end = ts, te
        elif label == "I" and open_start is not None:
            last_end = te
        elif label == "E" and open_start is not None:
            spans.append((open_start, te))
            open_start = None
        elif label == "O" and open_start is not None:
            spans.append((open_start, last_end))
            open_start = None
    if open_start is not None:
        spans.append((open_start, last_end))
    return spans
