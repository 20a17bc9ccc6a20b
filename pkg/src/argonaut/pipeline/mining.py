"""End-to-end mining: document -> sections -> literals -> pairs -> edges.

Facts ingestion mines a facts document with the same extractor, classifies
fact/assumption pairs in both orders, and keeps only the fact -> assumption
direction; anything pointing into a fact is discarded (and counted). Fact
nodes therefore never gain incoming edges and fact-fact pairs are never
generated.
"""

from __future__ import annotations

import itertools
import logging
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

from argonaut.graph.model import (
    KIND_ASSUMPTION,
    KIND_FACT,
    ArgumentGraph,
    GraphEdge,
    GraphNode,
)
from argonaut.pipeline.clients import ClassifierClient, ExtractorClient
from argonaut.pipeline.documents import Document, Section, split_sections
from argonaut.pipeline.extraction import LiteralSpan, extract_literals
from argonaut.pipeline.pairs import OrderedPair, WindowMode, generate_pairs
from argonaut.pipeline.relations import classify_pairs, merge_relations

log = logging.getLogger(__name__)

_FACT_ID = re.compile(r"^f(\d+)$")


@dataclass(frozen=True)
class MineConfig:
    max_chars: int = 1200
    window: WindowMode = WindowMode.within_section()
    threshold: float = 0.5
    batch_size: int = 32
    parallelism: int = 1


@dataclass
class MineReport:
    section_count: int = 0
    literal_count: int = 0
    pair_count: int = 0
    dropped_spans: int = 0
    failed_batches: int = 0
    discarded_edges_into_facts: int = 0


@dataclass
class MineResult:
    graph: ArgumentGraph
    report: MineReport = field(default_factory=MineReport)


def _mine_literals(
    doc: Document,
    extractor: ExtractorClient,
    config: MineConfig,
    id_prefix: str,
    start_at: int = 0,
) -> Tuple[List[Section], List[LiteralSpan], int]:
    sections = split_sections(doc, config.max_chars)
    counter = itertools.count(start_at)
    literals: List[LiteralSpan] = []
    dropped = 0
    for section in sections:
        spans, missing = extract_literals(section, extractor, counter, id_prefix)
        literals.extend(spans)
        dropped += missing
    return sections, literals, dropped


def mine_document(
    doc: Document,
    extractor: ExtractorClient,
    classifier: ClassifierClient,
    config: Optional[MineConfig] = None,
) -> MineResult:
    config = config or MineConfig()
    sections, literals, dropped = _mine_literals(doc, extractor, config, "a")
    nodes = [
        GraphNode(id=s.id, text=s.text, section=s.section, kind=KIND_ASSUMPTION)
        for s in literals
    ]
    text_of = {s.id: s.text for s in literals}
    pairs = sorted(generate_pairs(literals, sections, config.window))
    results, failed = classify_pairs(
        pairs, text_of.__getitem__, classifier, config.batch_size, config.parallelism
    )
    edges = merge_relations(results, config.threshold)
    report = MineReport(
        section_count=len(sections),
        literal_count=len(literals),
        pair_count=len(pairs),
        dropped_spans=dropped,
        failed_batches=failed,
    )
    return MineResult(graph=ArgumentGraph(nodes=nodes, edges=edges), report=report)


def _next_fact_index(graph: ArgumentGraph) -> int:
    taken = [
        int(m.group(1))
        for n in graph.nodes
        if (m := _FACT_ID.match(n.id)) and n.kind == KIND_FACT
    ]
    return max(taken) + 1 if taken else 0


def ingest_facts(
    facts_doc: Document,
    graph: ArgumentGraph,
    extractor: ExtractorClient,
    classifier: ClassifierClient,
    config: Optional[MineConfig] = None,
) -> MineResult:
    """New graph with fact nodes and fact -> assumption edges added."""
    config = config or MineConfig()
    _, fact_literals, dropped = _mine_literals(
        facts_doc, extractor, config, "f", _next_fact_index(graph)
    )
    assumptions = graph.assumption_nodes()
    fact_ids: Set[str] = {s.id for s in fact_literals}
    text_of: Dict[str, str] = {s.id: s.text for s in fact_literals}
    text_of.update({n.id: n.text for n in assumptions})

    pairs: List[OrderedPair] = []
    for fact in fact_literals:
        for node in assumptions:
            pairs.append((fact.id, node.id))
            pairs.append((node.id, fact.id))
    pairs.sort()
    results, failed = classify_pairs(
        pairs, text_of.__getitem__, classifier, config.batch_size, config.parallelism
    )
    merged = merge_relations(results, config.threshold)
    kept: List[GraphEdge] = []
    discarded = 0
    for edge in merged:
        if edge.dst in fact_ids:
            discarded += 1
        else:
            kept.append(edge)
    if discarded:
        log.info("discarded %d classified edges pointing into fact nodes", discarded)

    fact_nodes = [
        GraphNode(id=s.id, text=s.text, section=s.section, kind=KIND_FACT)
        for s in fact_literals
    ]
    report = MineReport(
        literal_count=len(fact_literals),
        pair_count=len(pairs),
        dropped_spans=dropped,
        failed_batches=failed,
        discarded_edges_into_facts=discarded,
    )
    return MineResult(graph=graph.extended(fact_nodes, kept), report=report)
