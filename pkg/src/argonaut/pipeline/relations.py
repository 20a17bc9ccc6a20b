"""Pair classification and edge assembly.

Classification is batched and order-preserving; the projected request count
is logged before dispatch because the pair set grows quadratically and the
caller should see what it signed up for. A failing batch is retried once and
then failed open: its pairs get label "none" at confidence 0 so one bad
batch cannot sink a long mining run (every incident is logged).
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

from argonaut.errors import ProtocolError, TransportError
from argonaut.graph.model import GraphEdge
from argonaut.pipeline.clients import ClassifierClient, PairRequest, PairResult
from argonaut.pipeline.pairs import OrderedPair

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class RelationResult:
    pair: OrderedPair
    label: str
    confidence: float


def _classify_batch(
    client: ClassifierClient, batch: List[PairRequest], batch_no: int
) -> Tuple[List[PairResult], int]:
    """Results plus the number of failed (failed-open) batches (0 or 1)."""
    for attempt in (1, 2):
        try:
            return client.classify(batch), 0
        except (TransportError, ProtocolError) as exc:
            if attempt == 1:
                log.warning("batch %d failed (%s); retrying once", batch_no, exc)
            else:
                log.error(
                    "batch %d failed twice (%s); failing open with label=none "
                    "for pairs %s..%s",
                    batch_no,
                    exc,
                    batch[0].pair_id,
                    batch[-1].pair_id,
                )
    return [PairResult(req.pair_id, "none", 0.0) for req in batch], 1


def classify_pairs(
    pairs: Sequence[OrderedPair],
    text_of: Callable[[str], str],
    client: ClassifierClient,
    batch_size: int = 32,
    parallelism: int = 1,
) -> Tuple[List[RelationResult], int]:
    """One result per pair, in input order; returns (results, failed_batches)."""
    if batch_size < 1:
        raise ValueError(f"batch_size must be >= 1, got {batch_size}")
    requests = [
        PairRequest(pair_id=str(i), text_a=text_of(src), text_b=text_of(dst))
        for i, (src, dst) in enumerate(pairs)
    ]
    batches = [requests[i : i + batch_size] for i in range(0, len(requests), batch_size)]
    log.info(
        "classifying %d ordered pairs in %d requests (batch size %d)",
        len(requests),
        len(batches),
        batch_size,
    )
    if parallelism > 1 and len(batches) > 1:
        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            outcomes = list(pool.map(
                lambda numbered: _classify_batch(client, numbered[1], numbered[0]),
                enumerate(batches),
            ))
    else:
        outcomes = [_classify_batch(client, batch, i) for i, batch in enumerate(batches)]
    results: List[RelationResult] = []
    failed = 0
    for (batch_results, batch_failed), batch in zip(outcomes, batches):
        failed += batch_failed
        for res, req in zip(batch_results, batch):
            index = int(res.pair_id)
            results.append(RelationResult(pairs[index], res.label, res.confidence))
    return results, failed


def merge_relations(results: Sequence[RelationResult], threshold: float = 0.5) -> List[GraphEdge]:
    """Directed edges from labeled results at or above the threshold.

    (a, b) and (b, a) stay independent. A pair normally carries exactly one
    result; should several labels arrive for the same ordered pair, the
    higher-confidence one wins (ties break toward the lexicographically
    smaller label for determinism).
    """
    if not 0.0 <= threshold <= 1.0:
        raise ValueError(f"threshold must be within [0, 1], got {threshold}")
    best = {}
    for res in results:
        prior = best.get(res.pair)
        if (
            prior is None
            or res.confidence > prior.confidence
            or (res.confidence == prior.confidence and res.label < prior.label)
        ):
            best[res.pair] = res
    return [
        GraphEdge(src=res.pair[0], dst=res.pair[1], relation=res.label, confidence=res.confidence)
        for res in sorted(best.values(), key=lambda r: r.pair)
        if res.label != "none" and res.confidence >= threshold
    ]
