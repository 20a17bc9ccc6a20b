from argonaut.pipeline.documents import (
    MARKDOWN,
    PLAIN_TEXT,
    Document,
    Section,
    load_document,
    split_sections,
)
from argonaut.pipeline.clients import (
    MockClassifierClient,
    MockClientServer,
    MockExtractorClient,
    PairRequest,
    PairResult,
    SocketClassifierClient,
    SocketExtractorClient,
)
from argonaut.pipeline.extraction import LiteralSpan, bieo_to_spans, extract_literals, spans_to_bieo
from argonaut.pipeline.pairs import WindowMode, generate_pairs
from argonaut.pipeline.relations import RelationResult, classify_pairs, merge_relations
from argonaut.pipeline.mining import (
    MineConfig,
    MineReport,
    MineResult,
    ingest_facts,
    mine_document,
)

__all__ = [
    "MARKDOWN",
    "PLAIN_TEXT",
    "Document",
    "Section",
    "load_document",
    "split_sections",
    "MockClassifierClient",
    "MockClientServer",
    "MockExtractorClient",
    "PairRequest",
    "PairResult",
    "SocketClassifierClient",
    "SocketExtractorClient",
    "LiteralSpan",
    "bieo_to_spans",
    "extract_literals",
    "spans_to_bieo",
    "WindowMode",
    "generate_pairs",
    "RelationResult",
    "classify_pairs",
    "merge_relations",
    "MineConfig",
    "MineReport",
    "MineResult",
    "ingest_facts",
    "mine_document",
]
