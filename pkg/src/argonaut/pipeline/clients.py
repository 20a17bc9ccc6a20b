"""Extractor and classifier client contracts, deterministic mocks, and the
local socket transport.

Wire contract (newline-delimited JSON over TCP, one request per connection):

  classify request  {"op": "classify",
                     "batch": [{"pair_id", "text_a", "text_b"}, ...]}
  classify response {"results": [{"pair_id", "label", "confidence"}, ...]}

  extract request   {"op": "extract", "section_text": "..."}
  extract response  {"literals": {"<id>": "<span text>", ...}}

Labels are the 3-class reduction {support, attack, none}. A malformed
response rejects the whole batch (ProtocolError); transport failures raise
TransportError (retriable); a connection refused up front raises
ClientUnavailableError.

The mocks are deterministic keyword rules so the full pipeline runs and
tests reproducibly with no model endpoints:

- MockExtractorClient marks every sentence containing one of its keywords
  (default: "should", "because").
- MockClassifierClient labels a pair by shared marker tokens (uppercase
  letter + digits, e.g. "C4", "R12") plus a cue word in the source text:
  an attack cue wins over a support cue; no shared marker means "none".
"""

from __future__ import annotations

import json
import re
import socket
import socketserver
import threading
from dataclasses import dataclass
from typing import Dict, Iterable, List, Protocol, Sequence, Tuple

from argonaut.errors import ClientUnavailableError, ProtocolError, TransportError

LABELS = ("support", "attack", "none")

MARKER = re.compile(r"\b[A-Z]\d+\b")
_SENTENCE = re.compile(r"[^.!?]*[.!?][\"')\]]*", re.S)

ATTACK_CUES = ("however", "contradicts", "refutes")
SUPPORT_CUES = ("because", "builds on", "reinforces")
EXTRACT_KEYWORDS = ("should", "because")

ATTACK_CONFIDENCE = 0.9
SUPPORT_CONFIDENCE = 0.85
NONE_CONFIDENCE = 0.75


@dataclass(frozen=True)
class PairRequest:
    pair_id: str
    text_a: str
    text_b: str


@dataclass(frozen=True)
class PairResult:
    pair_id: str
    label: str
    confidence: float


class ClassifierClient(Protocol):
    def classify(self, batch: Sequence[PairRequest]) -> List[PairResult]: ...


class ExtractorClient(Protocol):
    def extract(self, section_text: str) -> Dict[str, str]: ...


def iter_sentences(text: str) -> Iterable[str]:
    pos = 0
    for match in _SENTENCE.finditer(text):
        chunk = match.group()
        pos = match.end()
        if chunk.strip():
            yield chunk
    tail = text[pos:]
    if tail.strip():
        yield tail


class MockExtractorClient:
    """Marks every sentence containing one of the keywords as a literal."""

    def __init__(self, keywords: Tuple[str, ...] = EXTRACT_KEYWORDS):
        self.keywords = tuple(k.lower() for k in keywords)

    def extract(self, section_text: str) -> Dict[str, str]:
        literals: Dict[str, str] = {}
        for sentence in iter_sentences(section_text):
            lowered = sentence.lower()
            if any(k in lowered for k in self.keywords):
                # exact substring of the section, so spans locate by find()
                literals[f"m{len(literals)}"] = sentence.strip()
        return literals


def classify_texts_by_rules(text_a: str, text_b: str) -> Tuple[str, float]:
    """The mock rule set, exposed so tests can recompute plants independently."""
    shared = set(MARKER.findall(text_a)) & set(MARKER.findall(text_b))
    if shared:
        lowered = text_a.lower()
        if any(cue in lowered for cue in ATTACK_CUES):
            return "attack", ATTACK_CONFIDENCE
        if any(cue in lowered for cue in SUPPORT_CUES):
            return "support", SUPPORT_CONFIDENCE
    return "none", NONE_CONFIDENCE


class MockClassifierClient:
    def classify(self, batch: Sequence[PairRequest]) -> List[PairResult]:
        results = []
        for req in batch:
            label, confidence = classify_texts_by_rules(req.text_a, req.text_b)
            results.append(PairResult(req.pair_id, label, confidence))
        return results


def validate_classifier_results(
    batch: Sequence[PairRequest], payload, raw: str
) -> List[PairResult]:
    if not isinstance(payload, list):
        raise ProtocolError("classifier response must be a list", raw)
    by_id = {}
    for item in payload:
        try:
            result = PairResult(
                pair_id=str(item["pair_id"]),
                label=str(item["label"]),
                confidence=float(item["confidence"]),
            )
        except (TypeError, KeyError, ValueError):
            raise ProtocolError("classifier result item malformed", raw) from None
        if result.label not in LABELS:
            raise ProtocolError(f"unknown label {result.label!r}", raw)
        if not 0.0 <= result.confidence <= 1.0:
            raise ProtocolError(f"confidence out of range: {result.confidence}", raw)
        prior = by_id.get(result.pair_id)
        if prior is None or result.confidence > prior.confidence:
            by_id[result.pair_id] = result  # duplicate answers: higher confidence wins
    try:
        return [by_id[req.pair_id] for req in batch]
    except KeyError as exc:
        raise ProtocolError(f"response missing pair {exc}", raw) from None


def _roundtrip(host: str, port: int, request: dict, timeout: float) -> dict:
    try:
        conn = socket.create_connection((host, port), timeout=timeout)
    except ConnectionRefusedError as exc:
        raise ClientUnavailableError(f"no service listening on {host}:{port}") from exc
    except OSError as exc:
        raise ClientUnavailableError(f"cannot reach {host}:{port}: {exc}") from exc
    try:
        with conn, conn.makefile("rwb") as stream:
            stream.write(json.dumps(request).encode("utf-8") + b"\n")
            stream.flush()
            line = stream.readline()
    except OSError as exc:
        raise TransportError(f"socket error talking to {host}:{port}: {exc}") from exc
    if not line:
        raise TransportError(f"{host}:{port} closed the connection without answering")
    try:
        return json.loads(line.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError):
        raise ProtocolError("response is not valid JSON", line[:200].decode("latin-1")) from None


class SocketClassifierClient:
    def __init__(self, host: str, port: int, timeout: float = 10.0):
        self.host, self.port, self.timeout = host, port, timeout

    def classify(self, batch: Sequence[PairRequest]) -> List[PairResult]:
        request = {
            "op": "classify",
            "batch": [
                {"pair_id": r.pair_id, "text_a": r.text_a, "text_b": r.text_b} for r in batch
            ],
        }
        payload = _roundtrip(self.host, self.port, request, self.timeout)
        return validate_classifier_results(batch, payload.get("results"), json.dumps(payload))


class SocketExtractorClient:
    def __init__(self, host: str, port: int, timeout: float = 10.0):
        self.host, self.port, self.timeout = host, port, timeout

    def extract(self, section_text: str) -> Dict[str, str]:
        payload = _roundtrip(
            self.host, self.port, {"op": "extract", "section_text": section_text}, self.timeout
        )
        literals = payload.get("literals")
        if not isinstance(literals, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in literals.items()
        ):
            raise ProtocolError("extractor response must map ids to spans", json.dumps(payload))
        return literals


class _Handler(socketserver.StreamRequestHandler):
    def handle(self):
        line = self.rfile.readline()
        if not line:
            return
        try:
            request = json.loads(line.decode("utf-8"))
            if request.get("op") == "classify":
                batch = [
                    PairRequest(p["pair_id"], p["text_a"], p["text_b"])
                    for p in request["batch"]
                ]
                results = self.server.classifier.classify(batch)  # type: ignore[attr-defined]
                response = {
                    "results": [
                        {"pair_id": r.pair_id, "label": r.label, "confidence": r.confidence}
                        for r in results
                    ]
                }
            elif request.get("op") == "extract":
                literals = self.server.extractor.extract(request["section_text"])  # type: ignore[attr-defined]
                response = {"literals": literals}
            else:
                response = {"error": f"unknown op {request.get('op')!r}"}
        except Exception as exc:  # a bad request must not kill the service
            response = {"error": str(exc)}
        self.wfile.write(json.dumps(response).encode("utf-8") + b"\n")


class MockClientServer(socketserver.ThreadingTCPServer):
    """Serves the mock clients over the wire contract (used by tests and as a
    stand-in endpoint during development)."""

    allow_reuse_address = True
    daemon_threads = True

    def __init__(self, host: str = "127.0.0.1", port: int = 0):
        super().__init__((host, port), _Handler)
        self.classifier = MockClassifierClient()
        self.extractor = MockExtractorClient()
        self._thread = None

    @property
    def port(self) -> int:
        return self.server_address[1]

    def start(self) -> "MockClientServer":
        self._thread = threading.Thread(target=self.serve_forever, daemon=True)
        self._thread.start()
        return self

    def stop(self) -> None:
        self.shutdown()
        self.server_close()
