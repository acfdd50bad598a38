"""Tests for the command-line interface."""

import json

import pytest

from lindcalc.cli import main, run
from lindcalc.services.report import dumps


def lines(result):
    return result.output.splitlines()


class TestLabelCommands:
    def test_theta(self, runner):
        result = runner.invoke(main, ["theta", "1"])
        assert result.exit_code == 0
        assert lines(result) == ["-|-\t0", "-|1\t1", "1|-\t1"]

    def test_theta_orthogonal_json(self, runner):
        result = runner.invoke(main, ["theta", "2", "--family", "o", "--json"])
        payload = json.loads(result.output)
        assert payload["count"] == "4"
        assert [e["weight"] for e in payload["labels"]] == ["-", "1", "1,1", "2"]

    def test_norm_and_star(self, runner):
        assert runner.invoke(main, ["norm", "2,1|1"]).output == "4\n"
        assert runner.invoke(main, ["star", "2|1"]).output == "1|2\n"
        assert runner.invoke(main, ["star", "--family", "sp", "2"]).output == "2\n"

    def test_labels_with_an_empty_plus_side(self, runner):
        assert runner.invoke(main, ["star", "-|1"]).output == "1|-\n"
        assert runner.invoke(main, ["norm", "-|2,1"]).output == "3\n"
        assert runner.invoke(main, ["star", "-|-", "--json"]).exit_code == 0

    def test_flags_before_the_subcommand(self, runner):
        assert runner.invoke(main, ["--family", "o", "theta", "1"]).output == "-\t0\n1\t1\n"
        payload = json.loads(runner.invoke(main, ["--json", "norm", "1|-"]).output)
        assert payload == {"norm": "1", "weight": "1|-"}

    def test_subcommand_flag_wins(self, runner):
        result = runner.invoke(main, ["--family", "o", "star", "--family", "sl", "2|1"])
        assert result.output == "1|2\n"


class TestOracleCommands:
    def test_dim_at_rank(self, runner):
        result = runner.invoke(main, ["dim", "1|1", "--rank", "3"])
        assert result.output == "8\n"

    def test_char(self, runner):
        result = runner.invoke(main, ["char", "--family", "sp", "2"])
        assert lines(result) == ["2\t1", "0\t1", "-2\t1"]

    def test_branch(self, runner):
        result = runner.invoke(main, ["branch", "2|-", "--rank", "2"])
        assert lines(result) == ["2\t1", "1\t1", "0\t1"]

    def test_restrict_mult(self, runner):
        result = runner.invoke(main, ["restrict-mult", "-|-", "2", "1|-", "3"])
        assert result.output == "1\n"


class TestOrderCommands:
    def test_trivial_below_adjoint(self, runner):
        result = runner.invoke(main, ["order", "--family", "sl", "0|0", "1|1"])
        assert result.exit_code == 0
        assert result.output == "true\n"

    def test_order_json(self, runner):
        result = runner.invoke(main, ["order", "2|-", "1|1", "--json", "--window", "1"])
        assert json.loads(result.output) == {"lambda": "1|1", "leq": False, "mu": "2|-"}

    def test_dot(self, runner):
        result = runner.invoke(main, ["order", "--dot", "0|0", "1|-"])
        assert result.output.startswith('digraph "sl:1|-" {')

    def test_dot_below_a_label_with_an_empty_plus_side(self, runner):
        result = runner.invoke(main, ["order", "-|-", "-|1", "--dot"])
        assert result.exit_code == 0
        assert result.output.startswith('digraph "sl:-|1" {')

    def test_dot_rejects_json(self, runner):
        result = runner.invoke(main, ["order", "--dot", "--json", "0|0", "1|-"])
        assert result.exit_code == 2
        assert "--dot cannot be combined with --json" in result.output
        assert runner.invoke(main, ["--json", "order", "--dot", "0|0", "1|-"]).exit_code == 2

    def test_chain(self, runner):
        assert runner.invoke(main, ["chain", "1|1", "-|-"]).output == "3\n"
        assert runner.invoke(main, ["chain", "-|-", "1|1"]).output == "incomparable\n"
        assert runner.invoke(main, ["chain", "2,1|-", "-|-"]).output == "4\n"

    def test_theta_k_and_ext1(self, runner):
        assert runner.invoke(main, ["theta-k", "1|1", "2"]).output == "-|-\n"
        assert runner.invoke(main, ["ext1", "-|-", "1|-"]).output == "beth:1\n"
        assert runner.invoke(main, ["ext1", "1|-", "1|-"]).output == "finite:0\n"

    def test_single_block(self, runner):
        assert runner.invoke(main, ["single-block", "2", "--family", "o"]).output == "true\n"


class TestTensorCommands:
    def test_orthogonal_square(self, runner):
        result = runner.invoke(main, ["tpq", "--family", "o", "2", "0"])
        assert result.exit_code == 0
        assert lines(result) == ["weight\tmult\tlayer", "2\t1\t0", "1,1\t1\t0", "-\t1\t1"]

    def test_tpq_json(self, runner):
        payload = json.loads(runner.invoke(main, ["tpq", "1", "1", "--json"]).output)
        assert payload["factors"] == [
            {"weight": "1|1", "mult": "1", "layer": "0"},
            {"weight": "-|-", "mult": "1", "layer": "1"},
        ]

    def test_tensor(self, runner):
        result = runner.invoke(main, ["tensor", "1|-", "-|1"])
        assert lines(result) == ["1|1\t1", "-|-\t1"]

    def test_loewy(self, runner):
        assert runner.invoke(main, ["loewy", "--tpq", "2", "2"]).output == "3\n"
        assert runner.invoke(main, ["loewy", "--family", "o", "--tpq", "2", "2"]).output == "3\n"
        assert runner.invoke(main, ["loewy", "2,1|-"]).output == "4\n"

    def test_bound_from_flag_and_env(self, runner, monkeypatch):
        result = runner.invoke(main, ["tpq", "2", "1", "--bound", "2"])
        assert result.exit_code == 1
        assert "Bound Exceeded" in result.output
        monkeypatch.setenv("LINDCALC_TPQ_BOUND", "1")
        assert runner.invoke(main, ["tpq", "1", "1"]).exit_code == 1


class TestProfileCommands:
    def test_adjoint_hull_json(self, runner):
        result = runner.invoke(main, ["inj-profile", "--family", "sl", "1|1", "--json"])
        payload = json.loads(result.output)
        assert payload["loewy_length"] == "3"
        assert payload["layers"][0] == [{"weight": "1|1", "mult": "finite:1"}]
        assert payload["layers"][2] == [{"weight": "-|-", "mult": "beth:1"}]

    def test_hull_text(self, runner):
        result = runner.invoke(main, ["inj-profile", "-|1"])
        assert lines(result) == [
            "Loewy length: 2",
            "layer 0: -|1 x finite:1",
            "layer 1: -|- x beth:1",
        ]

    def test_closure_check(self, runner):
        result = runner.invoke(main, ["closure-check", "--simple", "1|-", "--tpq", "2,0"])
        assert result.output == "closed (level 2)\n"
        assert runner.invoke(main, ["closure-check", "--infinite"]).output == "not closed\n"

    def test_natural_product(self, runner):
        args = ["natural-profile", "--kind", "product", "--card", "finite:3", "--json"]
        payload = json.loads(runner.invoke(main, args).output)
        assert payload["layers"] == [[{"weight": "1|-", "mult": "finite:3"}]]

    def test_card(self, runner):
        assert runner.invoke(main, ["card", "add", "beth:1", "7"]).output == "beth:1\n"
        assert runner.invoke(main, ["card", "power", "finite:3"]).output == "finite:8\n"
        assert runner.invoke(main, ["card", "add", "beth:1"]).exit_code == 2

    def test_card_power_of_a_huge_count(self, runner):
        result = runner.invoke(main, ["card", "power", "finite:100000"])
        assert result.exit_code == 1
        assert "Bound Exceeded" in result.output


class TestDirectLimitCommands:
    def test_verdicts(self, runner):
        sympower = ["dlim-verdict", "--kind", "sympower"]
        assert runner.invoke(main, sympower).output == "GrowingTypes\n"
        spinor = ["dlim-verdict", "--kind", "spinor", "--family", "o", "--t", "1,2:1"]
        assert runner.invoke(main, spinor).output == "BoundedTypes\n"
        stable = ["dlim-verdict", "--kind", "stable", "--label", "1|1", "--window", "3..5"]
        assert runner.invoke(main, stable).output == "BoundedTypes\n"

    def test_stable_needs_label(self, runner):
        assert runner.invoke(main, ["dlim-verdict", "--kind", "stable"]).exit_code == 2

    def test_types(self, runner):
        result = runner.invoke(main, ["types", "--kind", "sympower", "2", "5"])
        assert len(lines(result)) == 6

    def test_spinor_equiv(self, runner):
        args = ["spinor-equiv", "--t", "1,2:1", "--tprime", "-:1"]
        assert runner.invoke(main, args).output == "true\n"
        args = ["spinor-equiv", "--t", "-:1", "--tprime", "-:2"]
        assert runner.invoke(main, args).output == "false\n"

    def test_mult_one(self, runner):
        assert runner.invoke(main, ["mult-one", "1|1"]).output == "true\n"
        assert runner.invoke(main, ["mult-one", "1|1", "--ranks", "2..4"]).exit_code == 1


class TestErrors:
    def test_domain_error_exit_code(self, runner):
        result = runner.invoke(main, ["dim", "2,1|-", "--rank", "2"])
        assert result.exit_code == 1
        assert "Rank Too Small: " in result.output
        assert "needs rank >= 3" in result.output

    def test_localized_title(self, runner):
        result = runner.invoke(main, ["dim", "2,1|-", "--rank", "2", "--lang", "ja"])
        assert result.exit_code == 1
        assert "ランク不足" in result.output

    def test_malformed_weight(self, runner):
        result = runner.invoke(main, ["norm", "2|1|1"])
        assert result.exit_code == 1
        assert "Invalid Weight" in result.output

    def test_bad_environment(self, runner, monkeypatch):
        monkeypatch.setenv("LINDCALC_STABLE_MARGIN", "wide")
        result = runner.invoke(main, ["norm", "1|-"])
        assert result.exit_code == 1
        assert "LINDCALC_STABLE_MARGIN must be a valid integer" in result.output

    @pytest.mark.parametrize(
        "args",
        [["norm", "--family", "gl", "1"], ["chain", "1|-"], ["no-such-command"], ["loewy"]],
    )
    def test_usage_errors(self, runner, args):
        assert runner.invoke(main, args).exit_code == 2


class TestOutput:
    def test_json_round_trips(self, runner):
        out = runner.invoke(main, ["inj-profile", "1,1|1", "--json"]).output
        assert dumps(json.loads(out)) + "\n" == out

    def test_identical_invocations(self, runner):
        args = ["tpq", "--family", "sp", "3", "0", "--json"]
        assert runner.invoke(main, args).output == runner.invoke(main, args).output


class TestRun:
    def test_success(self, capsys):
        assert run(["norm", "2,1|1"]) == 0
        assert capsys.readouterr().out == "4\n"

    def test_domain_error(self, capsys):
        assert run(["truncate-me"]) == 2
        assert run(["dim", "x|y"]) == 1
        assert "Invalid Weight" in capsys.readouterr().err
