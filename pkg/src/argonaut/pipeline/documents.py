"""Document loading and sectioning.

Sections follow paragraph breaks; a paragraph beyond the size limit is split
further at the sentence boundary nearest the limit (hard-chunked only when a
single sentence exceeds it). In markdown, heading lines attach to the section
that follows them. Sections carry absolute character spans, so concatenating
them reproduces the document body up to the whitespace at the boundaries.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple, Union

from argonaut.errors import ConfigError, MalformedDocumentError

MARKDOWN = "markdown"
PLAIN_TEXT = "plain-text"

MIN_SECTION_CHARS = 200

_HEADING = re.compile(r"^#{1,6}\s")
_SENTENCE_END = re.compile(r"[.!?][\"')\]]*(?:\s+|$)")


@dataclass(frozen=True)
class Document:
    source: str
    format: str
    text: str

    def __post_init__(self):
        if self.format not in (MARKDOWN, PLAIN_TEXT):
            raise MalformedDocumentError(f"unknown document format {self.format!r}")
        if not self.text.strip():
            raise MalformedDocumentError(f"document {self.source!r} is empty")


@dataclass(frozen=True)
class Section:
    index: int
    text: str
    start: int
    end: int


def load_document(path: Union[str, Path]) -> Document:
    path = Path(path)
    fmt = MARKDOWN if path.suffix.lower() in (".md", ".markdown") else PLAIN_TEXT
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise MalformedDocumentError(f"document not found: {path}") from None
    return Document(source=str(path), format=fmt, text=text)


def _paragraph_blocks(text: str) -> List[Tuple[int, int]]:
    """(start, end) spans of blank-line separated blocks."""
    blocks = []
    offset = 0
    start = None
    for line in text.splitlines(keepends=True):
        if line.strip():
            if start is None:
                start = offset
            end = offset + len(line.rstrip("\n\r"))
        elif start is not None:
            blocks.append((start, end))
            start = None
        offset += len(line)
    if start is not None:
        blocks.append((start, end))
    return blocks


def _is_heading_block(text: str, span: Tuple[int, int]) -> bool:
    lines = [ln for ln in text[span[0] : span[1]].splitlines() if ln.strip()]
    return bool(lines) and all(_HEADING.match(ln) for ln in lines)


def _sentence_split_points(block: str) -> List[int]:
    """Offsets (within the block) just after each sentence end."""
    return [m.end() for m in _SENTENCE_END.finditer(block)]


def _chunk_block(text: str, start: int, end: int, max_chars: int) -> List[Tuple[int, int]]:
    block = text[start:end]
    if len(block) <= max_chars:
        return [(start, end)]
    points = [p for p in _sentence_split_points(block) if p < len(block)]
    points.append(len(block))
    chunks = []
    chunk_start = 0
    prev = 0
    for point in points:
        if point - chunk_start > max_chars:
            if prev == chunk_start:
                # a single sentence longer than the limit: hard-split
                while point - chunk_start > max_chars:
                    chunks.append((chunk_start, chunk_start + max_chars))
                    chunk_start += max_chars
            else:
                chunks.append((chunk_start, prev))
                chunk_start = prev
                if point - chunk_start > max_chars:
                    while point - chunk_start > max_chars:
                        chunks.append((chunk_start, chunk_start + max_chars))
                        chunk_start += max_chars
        prev = point
    if chunk_start < len(block):
        chunks.append((chunk_start, len(block)))
    return [(start + s, start + e) for s, e in chunks]


def split_sections(doc: Document, max_chars: int = 1200) -> List[Section]:
    if max_chars < MIN_SECTION_CHARS:
        raise ConfigError(f"max_chars must be >= {MIN_SECTION_CHARS}, got {max_chars}")
    blocks = _paragraph_blocks(doc.text)
    if not blocks:
        raise MalformedDocumentError(f"document {doc.source!r} has no content blocks")

    # attach markdown heading blocks to the block that follows them
    merged: List[Tuple[int, int]] = []
    pending_heading: Optional[Tuple[int, int]] = None
    for span in blocks:
        if doc.format == MARKDOWN and _is_heading_block(doc.text, span):
            if pending_heading is None:
                pending_heading = span
            continue
        if pending_heading is not None:
            span = (pending_heading[0], span[1])
            pending_heading = None
        merged.append(span)
    if pending_heading is not None:
        merged.append(pending_heading)

    sections = []
    for start, end in merged:
        for s, e in _chunk_block(doc.text, start, end, max_chars):
            sections.append(Section(index=len(sections), text=doc.text[s:e], start=s, end=e))
    return sections
