"""Local graph-serving API for the explorer UI.

Localhost analyst tool: no auth, single shared graph. Reads are lock-free
over immutable snapshots; fact ingestion swaps the snapshot under an
exclusive lock. Every response carries the current graph hash (X-Graph-Hash
header and, for JSON bodies, a graph_hash field) so the UI can detect when
its view went stale. GET /graph returns the canonical file bytes verbatim.
"""

from __future__ import annotations

import threading
from typing import Optional

from fastapi import FastAPI, HTTPException, Response
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from argonaut.core.convert import from_graph
from argonaut.core.semantics import Semantics
from argonaut.errors import ArgonautError, ClientUnavailableError, ConfigError
from argonaut.graph.io import canonical_bytes, graph_hash
from argonaut.graph.model import ArgumentGraph
from argonaut.graph.stats import graph_stats
from argonaut.pipeline.clients import (
    ClassifierClient,
    ExtractorClient,
    MockClassifierClient,
    MockExtractorClient,
)
from argonaut.pipeline.documents import MARKDOWN, Document
from argonaut.pipeline.mining import MineConfig, ingest_facts
from argonaut.solver.search import SolverConfig, solve_k_largest
from argonaut.verify.factcheck import fact_check
from argonaut.verify.feedback import (
    DepthConfig,
    analyze_graph,
    feedback_file_text,
    render_feedback_message,
)


class FactsRequest(BaseModel):
    text: str = Field(min_length=1, description="facts.md-style content to ingest")


class SolveRequest(BaseModel):
    k: int = 3
    semantics: str = "admissible"


class FeedbackRequest(BaseModel):
    m: int = 3
    top_j: int = 5
    truncation: int = 4


class _State:
    def __init__(self, graph: ArgumentGraph):
        self.lock = threading.Lock()
        self.set_graph(graph)

    def set_graph(self, graph: ArgumentGraph) -> None:
        self.graph = graph
        self.bytes = canonical_bytes(graph)
        self.hash = graph_hash(graph)


def create_app(
    graph: ArgumentGraph,
    extractor: Optional[ExtractorClient] = None,
    classifier: Optional[ClassifierClient] = None,
    solver_timeout: float = 30.0,
    mine_config: Optional[MineConfig] = None,
) -> FastAPI:
    app = FastAPI(title="argonaut graph service")
    # localhost analyst tool: the explorer may be served from any local origin
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
        expose_headers=["X-Graph-Hash"],
    )
    state = _State(graph)
    extractor = extractor or MockExtractorClient()
    classifier = classifier or MockClassifierClient()
    mine_config = mine_config or MineConfig()

    def stamp(response: Response) -> None:
        response.headers["X-Graph-Hash"] = state.hash

    @app.get("/health")
    def health(response: Response):
        stamp(response)
        return {"status": "ok", "graph_hash": state.hash}

    @app.get("/graph")
    def get_graph():
        return Response(
            content=state.bytes,
            media_type="application/json",
            headers={"X-Graph-Hash": state.hash},
        )

    @app.get("/stats")
    def get_stats(response: Response):
        stamp(response)
        stats = graph_stats(state.graph)
        return {
            "graph_hash": state.hash,
            "node_count": stats.node_count,
            "fact_count": stats.fact_count,
            "support_count": stats.support_count,
            "attack_count": stats.attack_count,
            "ratio": stats.ratio_text(),
        }

    @app.post("/facts")
    def post_facts(request: FactsRequest, response: Response):
        doc = Document(source="<api>", format=MARKDOWN, text=request.text)
        with state.lock:  # mutating requests are serialized
            try:
                result = ingest_facts(doc, state.graph, extractor, classifier, mine_config)
            except ClientUnavailableError as exc:
                raise HTTPException(status_code=503, detail=str(exc)) from exc
            except ArgonautError as exc:
                raise HTTPException(status_code=400, detail=str(exc)) from exc
            state.set_graph(result.graph)
        report = fact_check(state.graph)
        stamp(response)
        return {
            "graph_hash": state.hash,
            "ingested_facts": result.report.literal_count,
            "discarded_edges_into_facts": result.report.discarded_edges_into_facts,
            "entries": [
                {"attacked": e.attacked, "fact": e.fact, "confidence": e.confidence}
                for e in report.entries
            ],
            "corroborations": [
                {"supported": c.supported, "fact": c.fact, "confidence": c.confidence}
                for c in report.corroborations
            ],
        }

    @app.post("/solve")
    def post_solve(request: SolveRequest, response: Response):
        try:
            semantics = Semantics(request.semantics)
            config = SolverConfig(
                k=request.k, semantics=semantics, timeout_s=solver_timeout
            )
            framework = from_graph(state.graph)
            result = solve_k_largest(framework, config)
        except (ValueError, ConfigError) as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        stamp(response)
        return {
            "graph_hash": state.hash,
            "semantics": semantics.value,
            "complete": result.complete,
            "extensions": [
                {"size": len(e), "members": sorted(e)} for e in result.extensions
            ],
        }

    @app.post("/feedback")
    def post_feedback(request: FeedbackRequest, response: Response):
        try:
            depth = DepthConfig(m=request.m, truncation=request.truncation)
            report = analyze_graph(state.graph, depth, top_j=request.top_j)
        except ConfigError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        message = render_feedback_message(report, state.graph)
        file_text = feedback_file_text(
            message,
            state.hash,
            f"m={depth.m} truncation={depth.truncation} top_j={request.top_j}",
        )
        stamp(response)
        return {
            "graph_hash": state.hash,
            "message": message,
            "file_text": file_text,
            "attacked_literals": report.fact_report.attacked_literals(),
            "key_literals": report.key_literals,
        }

    return app
