"""The test-time feedback loop over a mined graph.

Key literals (the ones that ought to be well-supported) are ranked by
transitive in-support degree. For each, attacks are searched breadth-first
through the support ancestry: an attack on any support-ancestor within the
truncation depth counts as an attack on the literal, and whole chains longer
than m are not explored. A chain is undefended when nothing in the graph
attacks its attacker; those attacks are the weak links worth fixing first.

The rendered message is deterministic (byte-identical for identical graphs)
so it can be attached to an external orchestrator's checkpoint; the optional
timestamp in the metadata header is off by default for that reason.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from argonaut.errors import ConfigError
from argonaut.graph.model import ATTACK, KIND_ASSUMPTION, SUPPORT, ArgumentGraph
from argonaut.verify.factcheck import FactCheckReport, fact_check

NO_FINDINGS = "No findings: every key literal is unattacked and no fact contradicts the graph."


@dataclass(frozen=True)
class DepthConfig:
    m: int = 3  # attack-search depth (chain length bound)
    truncation: int = 4  # support-ancestry depth for reasoning chains

    def __post_init__(self):
        if self.m < 1:
            raise ConfigError(f"attack-search depth m must be >= 1, got {self.m}")
        if self.truncation < 0:
            raise ConfigError(f"truncation depth must be >= 0, got {self.truncation}")


@dataclass(frozen=True)
class AttackChain:
    """attacker =attack=> path[0] -support-> ... -support-> path[-1] (the target)."""

    attacker: str
    path: Tuple[str, ...]

    @property
    def target(self) -> str:
        return self.path[-1]

    @property
    def attacked(self) -> str:
        return self.path[0]

    @property
    def length(self) -> int:
        return len(self.path)  # attack edge plus support hops

    def arrows(self) -> str:
        return " -> ".join((f"{self.attacker} => {self.path[0]}",) + self.path[1:])


@dataclass(frozen=True)
class WeakLink:
    node: str
    attacker: str


@dataclass
class LiteralFinding:
    literal: str
    ancestry: List[Tuple[str, int]] = field(default_factory=list)  # (node, depth)
    chains: List[AttackChain] = field(default_factory=list)
    weak_links: List[WeakLink] = field(default_factory=list)


@dataclass
class FeedbackReport:
    depth: DepthConfig
    key_literals: List[str]
    fact_findings: List[LiteralFinding]
    key_findings: List[LiteralFinding]
    fact_report: FactCheckReport

    @property
    def is_empty(self) -> bool:
        return self.fact_report.is_empty and not any(f.chains for f in self.key_findings)


def _support_parents(graph: ArgumentGraph) -> Dict[str, List[str]]:
    """node -> sorted direct supporters (sources of support edges into it)."""
    parents: Dict[str, List[str]] = {}
    for edge in graph.edges:
        if edge.relation == SUPPORT:
            parents.setdefault(edge.dst, []).append(edge.src)
    return {k: sorted(v) for k, v in parents.items()}


def support_ancestry(
    graph: ArgumentGraph, target: str, max_depth: int
) -> List[Tuple[str, int]]:
    """Transitive supporters of target with their hop distance, depth-capped."""
    parents = _support_parents(graph)
    seen = {target: 0}
    frontier = [target]
    out: List[Tuple[str, int]] = []
    depth = 0
    while frontier and depth < max_depth:
        depth += 1
        next_frontier = []
        for node in frontier:
            for parent in parents.get(node, ()):
                if parent not in seen:
                    seen[parent] = depth
                    out.append((parent, depth))
                    next_frontier.append(parent)
        frontier = next_frontier
    return sorted(out, key=lambda item: (item[1], item[0]))


def select_key_literals(graph: ArgumentGraph, top_j: int) -> List[str]:
    """Assumption literals ranked by transitive in-support degree, ties by id."""
    if top_j < 1:
        raise ConfigError(f"top_j must be >= 1, got {top_j}")
    candidates = [n.id for n in graph.nodes if n.kind == KIND_ASSUMPTION]
    scored = []
    for literal in candidates:
        ancestors = support_ancestry(graph, literal, max_depth=len(graph.nodes))
        scored.append((-len(ancestors), literal))
    scored.sort()
    return [literal for _, literal in scored[:top_j]]


def _support_closure_down(graph: ArgumentGraph, start: str) -> List[str]:
    """start plus everything it transitively supports (its derivations)."""
    children: Dict[str, List[str]] = {}
    for edge in graph.edges:
        if edge.relation == SUPPORT:
            children.setdefault(edge.src, []).append(edge.dst)
    seen = {start}
    frontier = [start]
    while frontier:
        node = frontier.pop()
        for child in children.get(node, ()):
            if child not in seen:
                seen.add(child)
                frontier.append(child)
    return sorted(seen)


def find_undefended_attacks(
    graph: ArgumentGraph, target: str, depth: DepthConfig
) -> List[AttackChain]:
    """Undefended attack chains reaching target within depth.m edges.

    An attacker counts as defended when some node attacks any member of its
    downward support closure (attacks propagate through support, so hitting a
    derivation of the attacker defeats it too); this matches the closed-set
    defense the core semantics implement.
    """
    graph.node(target)  # raises on unknown target
    attackers_of: Dict[str, List[str]] = {}
    for edge in graph.edges:
        if edge.relation == ATTACK:
            attackers_of.setdefault(edge.dst, []).append(edge.src)

    # support-ancestors within the lift radius, with their path back to target
    radius = min(depth.truncation, depth.m - 1)
    parents = _support_parents(graph)
    path_to_target: Dict[str, Tuple[str, ...]] = {target: (target,)}
    frontier = [target]
    hops = 0
    while frontier and hops < radius:
        hops += 1
        next_frontier = []
        for node in frontier:
            for parent in parents.get(node, ()):
                if parent not in path_to_target:
                    path_to_target[parent] = (parent,) + path_to_target[node]
                    next_frontier.append(parent)
        frontier = next_frontier

    countered: Dict[str, bool] = {}

    def is_countered(attacker: str) -> bool:
        if attacker not in countered:
            countered[attacker] = any(
                attackers_of.get(member) for member in _support_closure_down(graph, attacker)
            )
        return countered[attacker]

    chains = []
    for attacked, path in path_to_target.items():
        for attacker in sorted(attackers_of.get(attacked, ())):
            if is_countered(attacker):
                continue  # someone counter-attacks: the chain is defended
            chains.append(AttackChain(attacker=attacker, path=path))
    chains.sort(key=lambda c: (c.length, c.attacker, c.path))
    return chains


def weak_links_of(chains: Sequence[AttackChain]) -> List[WeakLink]:
    links = {WeakLink(node=c.attacked, attacker=c.attacker) for c in chains}
    return sorted(links, key=lambda w: (w.node, w.attacker))


def build_feedback(
    graph: ArgumentGraph,
    fact_report: FactCheckReport,
    chains_by_literal: Dict[str, List[AttackChain]],
    depth: DepthConfig,
) -> FeedbackReport:
    fact_findings = []
    for literal in fact_report.attacked_literals():
        fact_findings.append(
            LiteralFinding(
                literal=literal,
                ancestry=support_ancestry(graph, literal, depth.truncation),
            )
        )
    key_findings = []
    for literal in sorted(chains_by_literal):
        chains = chains_by_literal[literal]
        key_findings.append(
            LiteralFinding(
                literal=literal,
                ancestry=support_ancestry(graph, literal, depth.truncation),
                chains=list(chains),
                weak_links=weak_links_of(chains),
            )
        )
    return FeedbackReport(
        depth=depth,
        key_literals=sorted(chains_by_literal),
        fact_findings=fact_findings,
        key_findings=key_findings,
        fact_report=fact_report,
    )


def analyze_graph(
    graph: ArgumentGraph, depth: Optional[DepthConfig] = None, top_j: int = 5
) -> FeedbackReport:
    """fact_check + key-literal selection + chain search, in one pass."""
    depth = depth or DepthConfig()
    report = fact_check(graph)
    key = select_key_literals(graph, top_j) if graph.nodes else []
    chains = {literal: find_undefended_attacks(graph, literal, depth) for literal in key}
    return build_feedback(graph, report, chains, depth)


def _quoted(graph: ArgumentGraph, node_id: str) -> str:
    text = " ".join(graph.node(node_id).text.split())
    return f'{node_id}: "{text}"'


def render_feedback_message(report: FeedbackReport, graph: ArgumentGraph) -> str:
    """Human-readable critique, lossless w.r.t. the report entries."""
    if report.is_empty:
        return NO_FINDINGS + "\n"
    lines: List[str] = ["Verification feedback", "====================", ""]

    if report.fact_report.entries or report.fact_report.corroborations:
        lines += ["Fact check", "----------"]
        grouped = report.fact_report.by_literal()
        ancestry_of = {f.literal: f.ancestry for f in report.fact_findings}
        for literal in report.fact_report.attacked_literals():
            lines.append(f"- contradicted literal {_quoted(graph, literal)}")
            for entry in grouped[literal]:
                lines.append(
                    f"  * attacked by fact {_quoted(graph, entry.fact)}"
                    f" (confidence {entry.confidence:.2f})"
                )
            ancestry = ancestry_of.get(literal, [])
            if ancestry:
                chain_text = "; ".join(f"{node} (depth {d})" for node, d in ancestry)
                lines.append(
                    f"  * reasoning chain behind it (within depth {report.depth.truncation}): {chain_text}"
                )
        for corr in report.fact_report.corroborations:
            lines.append(
                f"- corroborated literal {corr.supported} by fact {corr.fact}"
                f" (confidence {corr.confidence:.2f})"
            )
        lines.append("")

    flagged = [f for f in report.key_findings if f.chains]
    if flagged:
        lines += [f"Key literals with undefended attacks (depth {report.depth.m})", "-" * 40]
        for finding in flagged:
            lines.append(f"- key literal {_quoted(graph, finding.literal)}")
            for chain in finding.chains:
                lines.append(f"  * undefended chain: {chain.arrows()}")
                lines.append(f"    attacking argument {_quoted(graph, chain.attacker)}")
            for link in finding.weak_links:
                lines.append(
                    f"  * weak link: {link.node} is attacked by {link.attacker}"
                    " and nothing counter-attacks"
                )
        lines.append("")
    return "\n".join(lines)


def feedback_file_text(
    message: str,
    graph_digest: str,
    config_desc: str,
    timestamp: Optional[str] = None,
) -> str:
    """Message wrapped in the fenced metadata header used by checkpoint files."""
    header = ["---", f"graph: {graph_digest}", f"config: {config_desc}"]
    if timestamp:
        header.append(f"generated: {timestamp}")
    header.append("---")
    return "\n".join(header) + "\n\n" + message
