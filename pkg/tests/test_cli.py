import json

import pytest
from click.testing import CliRunner

from argonaut.cli import main
from argonaut.fixtures import DEBATE, FACTS, RISK, fixture_path
from argonaut.graph.io import load_graph


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(main, list(args), catch_exceptions=False)


@pytest.fixture
def mined_risk(runner, tmp_path):
    out = tmp_path / "risk.json"
    result = invoke(runner, "mine", str(fixture_path(RISK)), "-o", str(out))
    assert result.exit_code == 0, result.output
    return out


class TestMine:
    def test_risk_fixture_ratio_in_output(self, runner, tmp_path):
        out = tmp_path / "risk.json"
        result = invoke(runner, "mine", str(fixture_path(RISK)), "-o", str(out))
        assert result.exit_code == 0
        assert "attack:support = 1:12" in result.output
        assert out.exists()

    def test_debate_fixture_ratio(self, runner, tmp_path):
        out = tmp_path / "debate.json"
        result = invoke(runner, "mine", str(fixture_path(DEBATE)), "-o", str(out))
        assert result.exit_code == 0
        assert "attack:support = 1:4" in result.output

    def test_missing_input_exits_2(self, runner, tmp_path):
        result = invoke(runner, "mine", str(tmp_path / "absent.md"), "-o", str(tmp_path / "x.json"))
        assert result.exit_code == 2

    def test_empty_input_exits_2(self, runner, tmp_path):
        empty = tmp_path / "empty.md"
        empty.write_text("   \n")
        result = invoke(runner, "mine", str(empty), "-o", str(tmp_path / "x.json"))
        assert result.exit_code == 2

    def test_bad_threshold_exits_2(self, runner, tmp_path):
        result = invoke(
            runner, "mine", str(fixture_path(RISK)),
            "-o", str(tmp_path / "x.json"), "--threshold", "2.0",
        )
        assert result.exit_code == 2

    def test_unreachable_classifier_exits_4(self, runner, tmp_path):
        result = invoke(
            runner, "mine", str(fixture_path(RISK)),
            "-o", str(tmp_path / "x.json"), "--classifier", "127.0.0.1:1",
        )
        assert result.exit_code == 4

    def test_byte_identical_reruns(self, runner, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        invoke(runner, "mine", str(fixture_path(RISK)), "-o", str(a))
        invoke(runner, "mine", str(fixture_path(RISK)), "-o", str(b))
        assert a.read_bytes() == b.read_bytes()


class TestSolve:
    def test_solve_g1_file(self, runner, tmp_path):
        graph = {
            "version": 1,
            "nodes": [
                {"id": "a", "text": "a", "section": 0, "kind": "assumption"},
                {"id": "b", "text": "b", "section": 0, "kind": "assumption"},
            ],
            "edges": [{"src": "b", "dst": "a", "relation": "attack", "confidence": 0.9}],
        }
        path = tmp_path / "g1.json"
        path.write_text(json.dumps(graph))
        out = tmp_path / "solutions.json"
        result = invoke(runner, "solve", str(path), "-k", "2",
                        "--semantics", "admissible", "-o", str(out))
        assert result.exit_code == 0
        payload = json.loads(out.read_text())
        assert payload["extensions"] == [
            {"size": 1, "members": ["b"]},
            {"size": 0, "members": []},
        ]
        assert payload["complete"] is True

    def test_empty_graph_single_empty_extension(self, runner, tmp_path):
        path = tmp_path / "empty.json"
        path.write_text(json.dumps({"version": 1, "nodes": [], "edges": []}))
        result = invoke(runner, "solve", str(path))
        assert result.exit_code == 0
        assert "size 0: (empty)" in result.output

    def test_stable_on_converted_g2(self, runner, tmp_path):
        graph = {
            "version": 1,
            "nodes": [
                {"id": n, "text": n, "section": 0, "kind": "assumption"} for n in "abc"
            ],
            "edges": [
                {"src": "c", "dst": "a", "relation": "support", "confidence": 0.9},
                {"src": "b", "dst": "a", "relation": "attack", "confidence": 0.9},
            ],
        }
        path = tmp_path / "g2.json"
        path.write_text(json.dumps(graph))
        result = invoke(runner, "solve", str(path), "--semantics", "stable")
        assert result.exit_code == 0
        assert "size 1: b" in result.output

    def test_timeout_exits_3(self, runner, mined_risk):
        result = invoke(runner, "solve", str(mined_risk), "--timeout", "1e-9")
        assert result.exit_code == 3

    def test_corrupt_graph_exits_2(self, runner, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{}")
        result = invoke(runner, "solve", str(path))
        assert result.exit_code == 2

    def test_dimacs_dump(self, runner, mined_risk, tmp_path):
        cnf = tmp_path / "enc.cnf"
        result = invoke(runner, "solve", str(mined_risk), "--dump-cnf", str(cnf))
        assert result.exit_code == 0
        text = cnf.read_text()
        assert text.splitlines()[0].startswith("c argonaut encoding")
        assert "p cnf " in text


class TestFactcheck:
    def test_planted_contradictions_reported(self, runner, mined_risk, tmp_path):
        result = invoke(runner, "factcheck", str(mined_risk), str(fixture_path(FACTS)))
        assert result.exit_code == 0, result.output
        augmented = mined_risk.with_suffix(".facts.json")
        report_file = mined_risk.with_suffix(".factcheck.json")
        assert augmented.exists() and report_file.exists()
        report = json.loads(report_file.read_text())
        assert len(report["entries"]) == 7
        assert len(report["corroborations"]) == 1
        # original untouched
        assert load_graph(mined_risk).fact_nodes() == []

    def test_unrelated_facts_empty_report(self, runner, mined_risk, tmp_path):
        noise = tmp_path / "noise.md"
        noise.write_text("A standalone note because metric Z99 is tracked elsewhere.\n")
        result = invoke(runner, "factcheck", str(mined_risk), str(noise))
        assert result.exit_code == 0
        report = json.loads(mined_risk.with_suffix(".factcheck.json").read_text())
        assert report["entries"] == []
        assert "no fact-contradicted literals" in result.output

    def test_missing_facts_file_exits_2(self, runner, mined_risk, tmp_path):
        result = invoke(runner, "factcheck", str(mined_risk), str(tmp_path / "absent.md"))
        assert result.exit_code == 2


class TestFeedback:
    def test_no_attacks_renders_no_findings(self, runner, tmp_path):
        graph = {
            "version": 1,
            "nodes": [
                {"id": "a", "text": "a", "section": 0, "kind": "assumption"},
                {"id": "b", "text": "b", "section": 0, "kind": "assumption"},
            ],
            "edges": [{"src": "b", "dst": "a", "relation": "support", "confidence": 0.9}],
        }
        path = tmp_path / "calm.json"
        path.write_text(json.dumps(graph))
        result = invoke(runner, "feedback", str(path))
        assert result.exit_code == 0
        assert "No findings" in result.output

    def test_factchecked_fixture_mentions_attacked_literals(self, runner, mined_risk):
        invoke(runner, "factcheck", str(mined_risk), str(fixture_path(FACTS)))
        augmented = mined_risk.with_suffix(".facts.json")
        result = invoke(runner, "feedback", str(augmented))
        assert result.exit_code == 0
        report = json.loads(mined_risk.with_suffix(".factcheck.json").read_text())
        for entry in report["entries"]:
            assert entry["attacked"] in result.output

    def test_depth_changes_chain_count(self, runner, tmp_path):
        # attacker sits 2 support hops above the target: visible at m=3, not m=1
        nodes = [
            {"id": n, "text": n, "section": 0, "kind": "assumption"}
            for n in ("a", "s1", "s2", "w")
        ]
        edges = [
            {"src": "s1", "dst": "a", "relation": "support", "confidence": 0.9},
            {"src": "s2", "dst": "s1", "relation": "support", "confidence": 0.9},
            {"src": "w", "dst": "s2", "relation": "attack", "confidence": 0.9},
        ]
        path = tmp_path / "depth.json"
        path.write_text(json.dumps({"version": 1, "nodes": nodes, "edges": edges}))
        shallow = invoke(runner, "feedback", str(path), "-m", "1")
        deep = invoke(runner, "feedback", str(path), "-m", "3")
        # at m=1 only the direct attack on s2 is visible; at m=3 the attack
        # propagates to s1 and a through the support chain
        assert shallow.output.count("undefended chain") == 1
        assert deep.output.count("undefended chain") == 3
        assert "w => s2 -> s1 -> a" not in shallow.output
        assert "w => s2 -> s1 -> a" in deep.output

    def test_byte_identical_file_outputs(self, runner, mined_risk, tmp_path):
        one, two = tmp_path / "m1.txt", tmp_path / "m2.txt"
        invoke(runner, "feedback", str(mined_risk), "-o", str(one))
        invoke(runner, "feedback", str(mined_risk), "-o", str(two))
        assert one.read_bytes() == two.read_bytes()


class TestStatsAndAtomicity:
    def test_stats_command(self, runner, mined_risk):
        result = invoke(runner, "stats", str(mined_risk))
        assert result.exit_code == 0
        assert "1:12" in result.output

    def test_crash_mid_write_leaves_no_partial_file(self, runner, tmp_path, monkeypatch):
        import argonaut.graph.io as gio

        target = tmp_path / "out.json"
        target.write_text("old content")

        def explode(src, dst):
            raise OSError("injected crash")

        monkeypatch.setattr(gio.os, "replace", explode)
        with pytest.raises(OSError):
            gio.atomic_write_bytes(target, b"new content")
        assert target.read_text() == "old content"
        assert list(tmp_path.glob("*.tmp")) == []
