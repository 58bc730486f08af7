"""End-to-end runs of the jinf command group."""

import json

import pytest
from click.testing import CliRunner

from jinf.cli.commands import cli
from jinf.main import main

MOVED = "union({1},diff(evens,{2}))"
PAIR_SWAP = json.dumps({
    "kind": "regular",
    "flip": True,
    "perm": {"modulus": 2, "classes": [{"from": 0, "to": 1, "offset": -1}, {"from": 1, "to": 0, "offset": 1}]},
})


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli, list(args), catch_exceptions=False)


class TestSets:
    def test_eval(self, runner):
        result = invoke(runner, "set", "eval", "inter(evens,mod(3,0))")
        assert result.exit_code == 0
        assert result.output.strip() == "per(;000001)"

    def test_canon(self, runner):
        result = invoke(runner, "set", "canon", "union({1},odds)")
        assert result.output.strip() == "L=0 prefix= p=2 period=10"

    def test_classify_and_member(self, runner):
        assert invoke(runner, "set", "classify", "{1,2}").output.strip() == "FiniteOfSize(2)"
        assert invoke(runner, "set", "member", "evens", "4").output.strip() == "member: true"

    def test_parse_error_exits_2_with_grammar(self, runner):
        result = invoke(runner, "set", "eval", "union(evens")
        assert result.exit_code == 2
        assert "PARSE_ERROR" in result.output
        assert "expr :=" in result.output


class TestGraphs:
    def test_adjacency(self, runner):
        result = invoke(runner, "adj", "--x", "evens", "--y", MOVED)
        assert result.exit_code == 0
        assert result.output.strip() == "adjacent: true"

    def test_distance_with_path(self, runner):
        result = invoke(runner, "dist", "--x", "evens", "--y", "union({1,3},diff(evens,{2,4}))", "--path")
        lines = result.output.splitlines()
        assert lines[0] == "2"
        assert lines[1] == "evens"
        assert len(lines) == 4

    def test_clique(self, runner):
        args = ["clique"]
        for extra in ("{1}", "{3}", "{5}"):
            args += ["--v", f"union(evens,{extra})"]
        result = invoke(runner, *args)
        assert result.output.strip() == "star evens"

    def test_kneser_distance_three(self, runner):
        result = invoke(runner, "kneser", "dist", "--x", "evens", "--y", "union(odds,{2})")
        assert result.output.splitlines()[0] == "3"

    def test_not_a_vertex_exits_1(self, runner):
        result = invoke(runner, "adj", "--x", "{1}", "--y", "evens")
        assert result.exit_code == 1
        assert "NOT_BALANCED" in result.output

    def test_missing_option_is_a_usage_error(self, runner):
        result = invoke(runner, "adj", "--x", "evens")
        assert result.exit_code == 2

    def test_json_output(self, runner):
        result = invoke(runner, "--json", "dist", "--x", "evens", "--y", MOVED)
        payload = json.loads(result.output)
        assert payload["success"] is True
        assert payload["data"] == {"distance": 1}


class TestAutomorphisms:
    def test_reconstruct_and_verify(self, runner):
        result = invoke(runner, "auto", "reconstruct", "--spec", PAIR_SWAP, "--a", "evens", "--range", "4", "--verify")
        assert result.exit_code == 0
        assert result.output.splitlines() == ["flip: true", "sigma: 2 1 4 3", "restriction: ok"]

    def test_classify(self, runner):
        result = invoke(runner, "auto", "classify", "--spec", PAIR_SWAP, "--a", "evens")
        assert result.output.strip() == "CaseB"

    def test_example_certificate_round_trip(self, runner):
        result = invoke(runner, "--json", "auto", "example1", "--a", "evens", "--b", MOVED)
        data = json.loads(result.output)["data"]
        spec, cert = json.dumps(data["spec"]), json.dumps(data["certificate"])
        verified = invoke(runner, "auto", "verify-cert", "--spec", spec, "--cert", cert)
        assert verified.exit_code == 0
        assert verified.output.strip() == "true"
        rejected = invoke(runner, "auto", "verify-cert", "--spec", '{"perm": {}}', "--cert", cert)
        assert rejected.exit_code == 1
        assert rejected.output.strip() == "false"

    def test_spec_from_file(self, runner, tmp_path):
        path = tmp_path / "swap.json"
        path.write_text(PAIR_SWAP, encoding="utf-8")
        result = invoke(runner, "auto", "apply", "--spec", f"@{path}", "--x", "evens")
        assert result.output.strip() == "evens"

    def test_order_reconstruct(self, runner):
        result = invoke(runner, "order", "reconstruct", "--spec", PAIR_SWAP, "--window", "4")
        assert result.output.splitlines() == ["reversing: true", "sigma: 2 1 4 3"]


class TestOracle:
    def test_johnson_summary(self, runner):
        result = invoke(runner, "oracle", "johnson", "--n", "4", "--k", "2")
        assert result.output.strip() == "J(4,2): 6 vertices, 12 edges"

    def test_aut_order(self, runner):
        assert invoke(runner, "oracle", "aut-order", "--n", "5", "--k", "2").output.strip() == "120"

    def test_bfs_unreachable(self, runner):
        result = invoke(runner, "oracle", "bfs", "--family", "kneser", "--n", "4", "--k", "2", "--u", "1,2", "--v", "1,3")
        assert result.output.strip() == "unreachable"

    def test_induced_perm(self, runner):
        result = invoke(runner, "oracle", "induced-perm", "--n", "5", "--k", "2", "--perm", "2,3,1,5,4")
        assert result.output.strip() == "2,3,1,5,4"

    def test_bad_label(self, runner):
        result = invoke(runner, "oracle", "bfs", "--n", "4", "--k", "2", "--u", "1,x", "--v", "1,3")
        assert result.exit_code == 2


class TestSuiteCommands:
    def test_list(self, runner):
        result = invoke(runner, "suite", "list", "--filter", "oracle.")
        assert result.output.splitlines() == ["oracle.aut_order", "oracle.cliques", "oracle.induced_permutation"]

    def test_run_filtered(self, runner, tmp_path):
        output = tmp_path / "report.json"
        result = invoke(runner, "suite", "run", "--filter", "oracle.cliques", "--output", str(output))
        assert result.exit_code == 0
        assert result.output.startswith("PASS  oracle.cliques")
        assert json.loads(output.read_text(encoding="utf-8"))["status"] == "pass"

    def test_run_by_tag(self, runner):
        result = invoke(runner, "suite", "run", "--filter", "theorem2", "--seed", "1")
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert [line.split()[1] for line in lines[:3]] == [
            "order.preservation",
            "order.reconstruct",
            "order.reversing_detected",
        ]
        assert all(line.startswith("PASS") for line in lines[:3])

    def test_filter_selecting_nothing_exits_2(self, runner):
        result = invoke(runner, "suite", "run", "--filter", "theorem9")
        assert result.exit_code == 2
        assert "NO_CHECKS_SELECTED" in result.output


def test_main_returns_exit_code():
    assert main(["set", "member", "evens", "4"]) == 0
    assert main(["set", "eval", "union(evens"]) == 2
    assert main(["--version"]) == 0
