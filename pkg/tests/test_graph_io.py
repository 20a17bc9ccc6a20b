import json

import pytest

from argonaut.core.convert import convert_graph, from_graph
from argonaut.core.framework import Rule
from argonaut.errors import GraphFileError, MalformedGraphError
from argonaut.graph.io import (
    canonical_bytes,
    graph_from_dict,
    graph_hash,
    graph_to_dict,
    load_graph,
    save_graph,
)
from argonaut.graph.model import ArgumentGraph, GraphEdge, GraphNode
from argonaut.graph.stats import graph_stats, reduced_ratio


def node(nid, kind="assumption", section=0, text=None):
    return GraphNode(id=nid, text=text or f"text {nid}", section=section, kind=kind)


def edge(src, dst, relation="support", confidence=0.8):
    return GraphEdge(src=src, dst=dst, relation=relation, confidence=confidence)


@pytest.fixture
def small_graph():
    return ArgumentGraph(
        nodes=[node("a"), node("b"), node("f1", kind="fact", section=1)],
        edges=[edge("b", "a", "attack", 0.9), edge("f1", "a", "attack", 0.7)],
    )


class TestModelInvariants:
    def test_self_loop_rejected(self):
        with pytest.raises(MalformedGraphError, match="self-loop"):
            ArgumentGraph(nodes=[node("a")], edges=[edge("a", "a")])

    def test_dangling_edge_rejected(self):
        with pytest.raises(MalformedGraphError, match="missing node"):
            ArgumentGraph(nodes=[node("a")], edges=[edge("a", "ghost")])

    def test_duplicate_triple_deduplicated_silently(self):
        g = ArgumentGraph(
            nodes=[node("a"), node("b")],
            edges=[edge("a", "b", "support", 0.6), edge("a", "b", "support", 0.9)],
        )
        assert len(g.edges) == 1
        assert g.edges[0].confidence == 0.9

    def test_unknown_kind_rejected(self):
        with pytest.raises(MalformedGraphError, match="kind"):
            ArgumentGraph(nodes=[GraphNode("a", "t", 0, kind="belief")], edges=[])


class TestSerialization:
    def test_round_trip(self, small_graph, tmp_path):
        path = tmp_path / "graph.json"
        save_graph(small_graph, path)
        loaded = load_graph(path)
        assert graph_to_dict(loaded) == graph_to_dict(small_graph)

    def test_canonical_bytes_stable(self, small_graph):
        assert canonical_bytes(small_graph) == canonical_bytes(small_graph)
        reordered = ArgumentGraph(
            nodes=list(small_graph.nodes),
            edges=list(reversed(small_graph.edges)),
        )
        assert canonical_bytes(reordered) == canonical_bytes(small_graph)

    def test_hash_matches_saved_file(self, small_graph, tmp_path):
        path = tmp_path / "graph.json"
        digest = save_graph(small_graph, path)
        assert digest == graph_hash(small_graph)
        assert path.read_bytes() == canonical_bytes(small_graph)

    def test_version_field_mandatory(self):
        with pytest.raises(GraphFileError, match="version"):
            graph_from_dict({"nodes": [], "edges": []})

    def test_unknown_version_rejected(self):
        with pytest.raises(GraphFileError, match="version"):
            graph_from_dict({"version": 99, "nodes": [], "edges": []})

    def test_invalid_json_file(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(GraphFileError, match="JSON"):
            load_graph(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(GraphFileError, match="not found"):
            load_graph(tmp_path / "absent.json")

    def test_field_order_canonical(self, small_graph):
        payload = json.loads(canonical_bytes(small_graph))
        assert list(payload.keys()) == ["version", "nodes", "edges"]
        assert list(payload["nodes"][0].keys()) == ["id", "text", "section", "kind"]
        assert list(payload["edges"][0].keys()) == ["src", "dst", "relation", "confidence"]


class TestStats:
    def test_ratio_one_to_twelve(self):
        nodes = [node(f"n{i}") for i in range(14)]
        edges = [edge(f"n{i}", f"n{i+1}", "support") for i in range(12)]
        edges.append(edge("n13", "n0", "attack"))
        stats = graph_stats(ArgumentGraph(nodes=nodes, edges=edges))
        assert stats.ratio == (1, 12)
        assert stats.ratio_text() == "1:12"

    def test_ratio_reduces(self):
        assert reduced_ratio(2, 8) == (1, 4)
        assert reduced_ratio(0, 5) == (0, 1)
        assert reduced_ratio(3, 0) == (1, 0)

    def test_no_edges_undefined(self):
        stats = graph_stats(ArgumentGraph(nodes=[node("a")], edges=[]))
        assert stats.ratio is None
        assert "undefined" in stats.ratio_text()

    def test_per_section_histogram(self):
        g = ArgumentGraph(
            nodes=[node("a", section=0), node("b", section=0), node("c", section=2)],
            edges=[edge("a", "b"), edge("c", "a", "attack")],
        )
        assert graph_stats(g).edges_per_section == {0: 1, 2: 1}


class TestFromGraph:
    def test_attack_edge_becomes_contrary_rule(self):
        g = ArgumentGraph(nodes=[node("a"), node("b")], edges=[edge("a", "b", "attack")])
        f = from_graph(g)
        assert Rule(head="b!", body="a") in f.rules

    def test_edge_into_fact_dropped_with_warning(self):
        g = ArgumentGraph(
            nodes=[node("a"), node("f1", kind="fact")],
            edges=[edge("a", "f1", "support")],
        )
        result = convert_graph(g)
        assert result.warning_count == 1
        assert result.framework.rules == frozenset()

    def test_translation_builds_g2(self, g2):
        g = ArgumentGraph(
            nodes=[node("a"), node("b"), node("c")],
            edges=[edge("c", "a", "support"), edge("b", "a", "attack")],
        )
        f = from_graph(g)
        assert f.assumptions == g2.assumptions
        assert f.rules == g2.rules
        assert f.contraries == g2.contraries

    def test_rule_count_matches_kept_edges_and_contraries_all_nodes(self):
        g = ArgumentGraph(
            nodes=[node("a"), node("b"), node("f1", kind="fact")],
            edges=[
                edge("a", "b", "support"),
                edge("f1", "a", "attack"),
                edge("b", "f1", "support"),  # dropped
            ],
        )
        result = convert_graph(g)
        kept = len(g.edges) - result.warning_count
        assert len(result.framework.rules) == kept
        assert len(result.framework.contraries) == len(g.nodes)

    def test_reserved_suffix_rejected(self):
        g = ArgumentGraph(nodes=[node("a!")], edges=[])
        with pytest.raises(MalformedGraphError, match="reserved"):
            from_graph(g)

    def test_fact_to_assumption_attack_retained(self):
        g = ArgumentGraph(
            nodes=[node("a"), node("f1", kind="fact")],
            edges=[edge("f1", "a", "attack")],
        )
        f = from_graph(g)
        assert Rule(head="a!", body="f1") in f.rules
        assert "f1" in f.facts
