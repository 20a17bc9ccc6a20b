"""Versioned JSON interchange for argument graphs.

The file layout is the single format shared by the CLI, the service, and the
explorer UI:

    {"version": 1,
     "nodes": [{"id", "text", "section", "kind"}, ...],
     "edges": [{"src", "dst", "relation", "confidence"}, ...]}

Field order is canonicalized and edges are sorted by (src, dst, relation), so
identical graphs serialize to identical bytes; the sha256 of those bytes is
the cache-validation hash carried by service responses and feedback headers.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Union

from argonaut.errors import GraphFileError, MalformedGraphError
from argonaut.graph.model import ArgumentGraph, GraphEdge, GraphNode

FORMAT_VERSION = 1


def graph_to_dict(graph: ArgumentGraph) -> dict:
    return {
        "version": FORMAT_VERSION,
        "nodes": [
            {"id": n.id, "text": n.text, "section": n.section, "kind": n.kind}
            for n in graph.nodes
        ],
        "edges": [
            {"src": e.src, "dst": e.dst, "relation": e.relation, "confidence": e.confidence}
            for e in graph.edges
        ],
    }


def canonical_bytes(graph: ArgumentGraph) -> bytes:
    return (json.dumps(graph_to_dict(graph), indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def graph_hash(graph: ArgumentGraph) -> str:
    return hashlib.sha256(canonical_bytes(graph)).hexdigest()


def graph_from_dict(payload: dict) -> ArgumentGraph:
    if not isinstance(payload, dict):
        raise GraphFileError("graph file must contain a JSON object")
    version = payload.get("version")
    if version is None:
        raise GraphFileError("graph file is missing the mandatory 'version' field")
    if version != FORMAT_VERSION:
        raise GraphFileError(f"unsupported graph file version {version!r}")
    try:
        nodes = [
            GraphNode(
                id=str(n["id"]),
                text=str(n["text"]),
                section=int(n["section"]),
                kind=str(n["kind"]),
            )
            for n in payload.get("nodes", [])
        ]
        edges = [
            GraphEdge(
                src=str(e["src"]),
                dst=str(e["dst"]),
                relation=str(e["relation"]),
                confidence=float(e["confidence"]),
            )
            for e in payload.get("edges", [])
        ]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFileError(f"malformed graph file: {exc}") from exc
    try:
        return ArgumentGraph(nodes=nodes, edges=edges)
    except MalformedGraphError as exc:
        raise GraphFileError(str(exc)) from exc


def load_graph(path: Union[str, Path]) -> ArgumentGraph:
    path = Path(path)
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise GraphFileError(f"graph file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise GraphFileError(f"graph file {path} is not valid JSON: {exc}") from exc
    return graph_from_dict(payload)


def atomic_write_bytes(path: Union[str, Path], data: bytes) -> None:
    """Write via temp file + rename so a crash never leaves a partial file."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=str(path.parent), prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def save_graph(graph: ArgumentGraph, path: Union[str, Path]) -> str:
    """Atomically write the canonical form; returns the graph hash."""
    data = canonical_bytes(graph)
    atomic_write_bytes(path, data)
    return hashlib.sha256(data).hexdigest()
