"""Command-line shell: mine, solve, factcheck, feedback, stats, serve.

Exit codes are a stable contract: 0 success, 2 usage or validation problems,
3 solver timeout (partial output flagged), 4 client failure. Endpoint
options accept "mock" or "host:port" and can be overridden with the
ARGONAUT_EXTRACTOR / ARGONAUT_CLASSIFIER environment variables. All file
outputs are written atomically (temp file + rename).
"""

from __future__ import annotations

import json
import logging
import sys
from pathlib import Path

import click

from argonaut import __version__
from argonaut.core.convert import from_graph
from argonaut.core.semantics import Semantics
from argonaut.errors import (
    ArgonautError,
    ClientUnavailableError,
    ConfigError,
    GraphFileError,
    MalformedDocumentError,
    MalformedGraphError,
    ProtocolError,
    TransportError,
)
from argonaut.graph.io import atomic_write_bytes, canonical_bytes, graph_hash, load_graph
from argonaut.graph.stats import graph_stats
from argonaut.pipeline.clients import (
    MockClassifierClient,
    MockExtractorClient,
    SocketClassifierClient,
    SocketExtractorClient,
)
from argonaut.pipeline.documents import load_document
from argonaut.pipeline.mining import MineConfig, ingest_facts, mine_document
from argonaut.pipeline.pairs import WindowMode
from argonaut.sat.dimacs import to_dimacs
from argonaut.solver.encoding import encode
from argonaut.solver.search import SolverConfig, solve_k_largest
from argonaut.verify.factcheck import fact_check
from argonaut.verify.feedback import (
    DepthConfig,
    analyze_graph,
    feedback_file_text,
    render_feedback_message,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_TIMEOUT = 3
EXIT_CLIENT = 4

log = logging.getLogger(__name__)


def resolve_endpoint(value: str, kind: str):
    """"mock" or "host:port" -> a client instance."""
    value = (value or "mock").strip()
    if value == "mock":
        return MockExtractorClient() if kind == "extractor" else MockClassifierClient()
    host, sep, port = value.rpartition(":")
    if not sep or not port.isdigit():
        raise ConfigError(f"{kind} endpoint must be 'mock' or 'host:port', got {value!r}")
    if kind == "extractor":
        return SocketExtractorClient(host, int(port))
    return SocketClassifierClient(host, int(port))


def _fail(message: str, code: int):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _guard(fn):
    """Map domain errors onto the exit-code contract."""

    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (ClientUnavailableError, TransportError, ProtocolError) as exc:
            _fail(str(exc), EXIT_CLIENT)
        except (ConfigError, GraphFileError, MalformedDocumentError, MalformedGraphError) as exc:
            _fail(str(exc), EXIT_USAGE)
        except ArgonautError as exc:
            _fail(str(exc), 1)

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _write_json(path: Path, payload: dict) -> None:
    atomic_write_bytes(path, (json.dumps(payload, indent=2) + "\n").encode("utf-8"))


def _echo_stats(graph) -> None:
    stats = graph_stats(graph)
    click.echo(
        f"nodes: {stats.node_count} ({stats.fact_count} facts)  "
        f"support: {stats.support_count}  attack: {stats.attack_count}  "
        f"attack:support = {stats.ratio_text()}"
    )


@click.group()
@click.version_option(version=__version__, prog_name="argonaut")
@click.option("-v", "--verbose", is_flag=True, help="Enable info-level logging.")
def main(verbose: bool):
    """Argument-graph mining, extension solving, and verification."""
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )


@main.command()
@click.argument("input_path", type=click.Path(path_type=Path))
@click.option("-o", "--output", type=click.Path(path_type=Path), required=True)
@click.option("--window", default="within", show_default=True,
              help="Pair window: within | all | window:N")
@click.option("--max-chars", default=1200, show_default=True)
@click.option("--threshold", default=0.5, show_default=True)
@click.option("--batch-size", default=32, show_default=True)
@click.option("--extractor", envvar="ARGONAUT_EXTRACTOR", default="mock", show_default=True)
@click.option("--classifier", envvar="ARGONAUT_CLASSIFIER", default="mock", show_default=True)
@_guard
def mine(input_path, output, window, max_chars, threshold, batch_size, extractor, classifier):
    """Mine a markdown/text document into an argument graph file."""
    if not 0.0 <= threshold <= 1.0:
        raise ConfigError(f"threshold must be in [0, 1], got {threshold}")
    if batch_size < 1:
        raise ConfigError(f"batch-size must be >= 1, got {batch_size}")
    config = MineConfig(
        max_chars=max_chars,
        window=WindowMode.parse(window),
        threshold=threshold,
        batch_size=batch_size,
    )
    doc = load_document(input_path)
    result = mine_document(
        doc,
        resolve_endpoint(extractor, "extractor"),
        resolve_endpoint(classifier, "classifier"),
        config,
    )
    digest = _save_graph(result.graph, output)
    click.echo(f"wrote {output} (sha256 {digest[:12]})")
    _echo_stats(result.graph)
    report = result.report
    click.echo(
        f"sections: {report.section_count}  literals: {report.literal_count}  "
        f"pairs: {report.pair_count}  dropped spans: {report.dropped_spans}  "
        f"failed batches: {report.failed_batches}"
    )


def _save_graph(graph, path: Path) -> str:
    atomic_write_bytes(path, canonical_bytes(graph))
    return graph_hash(graph)


@main.command()
@click.argument("graph_file", type=click.Path(path_type=Path))
@click.option("-k", default=3, show_default=True, help="How many extensions to search for.")
@click.option("--semantics", default="admissible", show_default=True,
              type=click.Choice([s.value for s in Semantics]))
@click.option("--timeout", default=30.0, show_default=True)
@click.option("-o", "--output", type=click.Path(path_type=Path), default=None,
              help="Machine-readable result file (JSON).")
@click.option("--dump-cnf", type=click.Path(path_type=Path), default=None,
              help="Write the DIMACS encoding for offline debugging.")
@_guard
def solve(graph_file, k, semantics, timeout, output, dump_cnf):
    """Search a graph file for its k largest extensions."""
    graph = load_graph(graph_file)
    framework = from_graph(graph)
    sem = Semantics(semantics)
    if dump_cnf is not None:
        base = sem if sem is not Semantics.PREFERRED else Semantics.ADMISSIBLE
        atomic_write_bytes(dump_cnf, to_dimacs(encode(framework, base)).encode("utf-8"))
        click.echo(f"wrote CNF to {dump_cnf}")
    config = SolverConfig(k=k, semantics=sem, timeout_s=timeout)
    result = solve_k_largest(framework, config)
    for i, ext in enumerate(result.extensions, 1):
        members = ", ".join(sorted(ext)) if ext else "(empty)"
        click.echo(f"{i}. size {len(ext)}: {members}")
    if not result.extensions:
        click.echo(f"no {sem.value} extension exists")
    if output is not None:
        _write_json(
            output,
            {
                "version": 1,
                "semantics": sem.value,
                "k": k,
                "complete": result.complete,
                "graph_hash": graph_hash(graph),
                "extensions": [
                    {"size": len(e), "members": sorted(e)} for e in result.extensions
                ],
            },
        )
        click.echo(f"wrote {output}")
    if not result.complete:
        click.echo("warning: timeout hit, results are partial", err=True)
        sys.exit(EXIT_TIMEOUT)


@main.command()
@click.argument("graph_file", type=click.Path(path_type=Path))
@click.argument("facts_path", type=click.Path(path_type=Path))
@click.option("--out-graph", type=click.Path(path_type=Path), default=None,
              help="Augmented graph output (default: <graph>.facts.json).")
@click.option("--report", "report_path", type=click.Path(path_type=Path), default=None,
              help="Fact-check report output (default: <graph>.factcheck.json).")
@click.option("--threshold", default=0.5, show_default=True)
@click.option("--extractor", envvar="ARGONAUT_EXTRACTOR", default="mock", show_default=True)
@click.option("--classifier", envvar="ARGONAUT_CLASSIFIER", default="mock", show_default=True)
@_guard
def factcheck(graph_file, facts_path, out_graph, report_path, threshold, extractor, classifier):
    """Ingest a facts file and report every fact-contradicted literal."""
    graph = load_graph(graph_file)
    facts_doc = load_document(facts_path)
    config = MineConfig(threshold=threshold)
    result = ingest_facts(
        facts_doc,
        graph,
        resolve_endpoint(extractor, "extractor"),
        resolve_endpoint(classifier, "classifier"),
        config,
    )
    augmented = result.graph
    report = fact_check(augmented)
    out_graph = out_graph or graph_file.with_suffix(".facts.json")
    report_path = report_path or graph_file.with_suffix(".factcheck.json")
    digest = _save_graph(augmented, out_graph)
    _write_json(
        report_path,
        {
            "version": 1,
            "graph_hash": digest,
            "entries": [
                {"attacked": e.attacked, "fact": e.fact, "confidence": e.confidence}
                for e in report.entries
            ],
            "corroborations": [
                {"supported": c.supported, "fact": c.fact, "confidence": c.confidence}
                for c in report.corroborations
            ],
        },
    )
    click.echo(f"wrote {out_graph} and {report_path}")
    if report.entries:
        click.echo(f"{'literal':<12} {'fact':<12} confidence")
        for entry in report.entries:
            click.echo(f"{entry.attacked:<12} {entry.fact:<12} {entry.confidence:.2f}")
    else:
        click.echo("no fact-contradicted literals")
    _echo_stats(augmented)


@main.command()
@click.argument("graph_file", type=click.Path(path_type=Path))
@click.option("-m", "depth_m", default=3, show_default=True, help="Attack-search depth.")
@click.option("--top-j", default=5, show_default=True, help="Key literals to inspect.")
@click.option("--truncation", default=4, show_default=True, help="Reasoning-chain depth cap.")
@click.option("-o", "--output", type=click.Path(path_type=Path), default=None,
              help="Feedback message file (default: <graph>.feedback.txt).")
@click.option("--stamp", is_flag=True,
              help="Include a timestamp in the header (off by default: stamped files "
                   "are not byte-reproducible).")
@_guard
def feedback(graph_file, depth_m, top_j, truncation, output, stamp):
    """Render the iterative-refinement feedback message for a graph."""
    graph = load_graph(graph_file)
    depth = DepthConfig(m=depth_m, truncation=truncation)
    report = analyze_graph(graph, depth, top_j=top_j)
    message = render_feedback_message(report, graph)
    timestamp = None
    if stamp:
        from datetime import datetime, timezone

        timestamp = datetime.now(timezone.utc).isoformat()
    text = feedback_file_text(
        message,
        graph_hash(graph),
        f"m={depth.m} truncation={depth.truncation} top_j={top_j}",
        timestamp,
    )
    output = output or graph_file.with_suffix(".feedback.txt")
    atomic_write_bytes(output, text.encode("utf-8"))
    click.echo(text, nl=False)
    click.echo(f"wrote {output}")


@main.command()
@click.argument("graph_file", type=click.Path(path_type=Path))
@_guard
def stats(graph_file):
    """Print node/edge counts, the attack:support ratio, and the per-section histogram."""
    graph = load_graph(graph_file)
    _echo_stats(graph)
    per_section = graph_stats(graph).edges_per_section
    if per_section:
        click.echo("edges per section: " + ", ".join(f"{k}: {v}" for k, v in per_section.items()))


@main.command()
@click.argument("graph_file", type=click.Path(path_type=Path))
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
@click.option("--extractor", envvar="ARGONAUT_EXTRACTOR", default="mock", show_default=True)
@click.option("--classifier", envvar="ARGONAUT_CLASSIFIER", default="mock", show_default=True)
@click.option("--solver-timeout", default=30.0, show_default=True)
@_guard
def serve(graph_file, host, port, extractor, classifier, solver_timeout):
    """Serve the graph API consumed by the explorer UI (localhost analyst tool)."""
    import uvicorn

    from argonaut.service.app import create_app

    graph = load_graph(graph_file)
    app = create_app(
        graph,
        extractor=resolve_endpoint(extractor, "extractor"),
        classifier=resolve_endpoint(classifier, "classifier"),
        solver_timeout=solver_timeout,
    )
    click.echo(f"serving {graph_file} on http://{host}:{port}")
    uvicorn.run(app, host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
