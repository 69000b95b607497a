"""
Tests for the command-line front end
"""

import io
import json

import pytest

from app.cli import run


def invoke(argv, stdin_text=""):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = run(argv, stdin=io.StringIO(stdin_text), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


pytestmark = pytest.mark.integration


class TestInvariantCommands:
    def test_push(self):
        code, out, _ = invoke(["push", "--p", "2", "--g", "2", "--r", "1", "--d", "0"])
        assert code == 0
        assert out == '{"rank":2,"degree":1,"slope":"1/2"}\n'

    def test_push_integer_slope_keeps_denominator(self):
        code, out, _ = invoke(["push", "--p", "3", "--g", "1", "--r", "1", "--d", "-3"])
        assert code == 0
        assert json.loads(out)["slope"] == "-1/1"

    def test_pull_text(self):
        code, out, _ = invoke(["pull", "--p", "3", "--r", "2", "--d", "1", "--format", "text"])
        assert code == 0
        assert out.strip() == "pull: rank=2 degree=3 slope=3/2"

    def test_canfil(self):
        code, out, _ = invoke(["canfil", "--p", "3", "--g", "2", "--r", "1", "--d", "0"])
        assert code == 0
        data = json.loads(out)
        assert [(x["rank"], x["degree"]) for x in data["gradeds"]] == [(1, 4), (1, 2), (1, 0)]
        assert data["total"] == {"rank": 3, "degree": 6}

    def test_non_prime(self):
        code, out, err = invoke(["push", "--p", "4", "--g", "2", "--r", "1", "--d", "0"])
        assert code == 1
        assert out == ""
        assert err.startswith("NonPrimeCharacteristic:")

    def test_warnings_go_to_given_stderr(self, clean_env):
        code, _, err = invoke(["push", "--p", "2", "--g", "0", "--r", "1", "--d", "0"])
        assert code == 0
        assert "F_* need not preserve semistability" in err


class TestPolygonCommands:
    def test_oper(self):
        code, out, _ = invoke(["oper", "--r", "2", "--d", "0", "--g", "2"])
        assert code == 0
        assert json.loads(out) == {"r": 2, "d": 0, "vertices": [[0, 0], [1, 1], [2, 0]]}

    def test_oper_indivisible(self):
        code, _, err = invoke(["oper", "--r", "2", "--d", "1", "--g", "2"])
        assert code == 1
        assert "IndivisibleDegree" in err

    def test_oper_negative_genus(self):
        for r in ("1", "3"):
            code, out, err = invoke(["oper", "--r", r, "--d", "0", "--g", "-1"])
            assert code == 1
            assert out == ""
            assert err.startswith("NegativeGenus")

    def test_dominates_files(self, polygon_file):
        oper = polygon_file([(0, 0), (1, 1), (2, 0)])
        chord = polygon_file([(0, 0), (2, 0)])
        code, out, _ = invoke(["dominates", "--p1", oper, "--p2", chord, "--format", "text"])
        assert (code, out.strip()) == (0, "true")
        code, out, _ = invoke(["dominates", "--p1", chord, "--p2", oper])
        assert code == 0
        assert json.loads(out)["dominates"] is False

    def test_dominates_endpoint_mismatch(self, polygon_file):
        code, _, err = invoke(
            ["dominates", "--p1", polygon_file([(0, 0), (2, 0)]), "--p2", polygon_file([(0, 0), (2, 1)])]
        )
        assert code == 1
        assert err.startswith("EndpointMismatch")

    def test_enumerate_round_trips_through_stdin(self):
        code, out, _ = invoke(["enumerate", "--r", "3", "--d", "0", "--g", "2"])
        assert code == 0
        for polygon in json.loads(out):
            code, verdict, _ = invoke(
                ["dominates", "--p1", "-", "--p2", "-", "--format", "text"], json.dumps(polygon)
            )
            assert (code, verdict.strip()) == (0, "true")

    def test_enumerate_oracles_agree(self):
        argv = ["enumerate", "--r", "4", "--d", "0", "--g", "2"]
        assert invoke(argv)[1] == invoke(argv + ["--oracle", "bruteforce"])[1]

    def test_enumerate_explicit_constraints(self):
        code, out, _ = invoke(
            ["enumerate", "--r", "2", "--d", "0", "--max-gap", "4", "--window", "-4", "4", "--format", "text"]
        )
        assert code == 0
        assert out.splitlines() == ["[(0,0),(1,1),(2,0)]", "[(0,0),(1,2),(2,0)]", "[(0,0),(2,0)]"]

    def test_enumerate_needs_constraints(self):
        code, _, err = invoke(["enumerate", "--r", "2", "--d", "0"])
        assert code == 2
        assert "--g" in err

    def test_slopes(self, polygon_file):
        path = polygon_file([(0, 0), (1, 2), (2, 2), (3, 0)])
        code, out, _ = invoke(["slopes", "--p1", path, "--g", "2"])
        assert code == 0
        assert json.loads(out) == {"mu_max": "2/1", "mu_min": "-2/1", "gap": "4/1", "oper_shape": True}

    def test_malformed_polygon_file(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("[1, 2", encoding="utf-8")
        code, _, _ = invoke(["dominates", "--p1", str(path), "--p2", str(path)])
        assert code == 2

    def test_non_convex_polygon_file(self, tmp_path):
        path = tmp_path / "concave.json"
        path.write_text('{"r": 2, "d": 1, "vertices": [[0, 0], [1, 0], [2, 1]]}', encoding="utf-8")
        code, _, err = invoke(["dominates", "--p1", str(path), "--p2", str(path)])
        assert code == 1
        assert err.startswith("NotConvex")


class TestPosetCommand:
    def test_dot_chain(self):
        code, out, _ = invoke(["poset", "--r", "2", "--d", "0", "--g", "3", "--format", "dot"])
        assert code == 0
        assert out.startswith("digraph")
        assert out.count("[label=") == 3
        assert out.count("->") == 2

    def test_json_from_input(self, tmp_path):
        path = tmp_path / "family.json"
        path.write_text(
            json.dumps(
                [
                    {"r": 2, "d": 0, "vertices": [[0, 0], [2, 0]]},
                    {"r": 2, "d": 0, "vertices": [[0, 0], [1, 1], [2, 0]]},
                ]
            ),
            encoding="utf-8",
        )
        code, out, _ = invoke(["poset", "--r", "2", "--d", "0", "--input", str(path)])
        assert code == 0
        data = json.loads(out)
        assert data["covers"] == [[0, 1]]
        assert (data["maximum"], data["minimum"]) == (0, 1)


class TestVerifyCommand:
    def test_oper_dominance_passes(self):
        code, out, _ = invoke(["verify", "--claim", "oper-dominance", "--r", "2", "--d", "0", "--g", "2"])
        assert code == 0
        report = json.loads(out)
        assert report["passed"] is True
        assert report["stats"]["elapsed_ms"] == 0

    def test_output_is_deterministic(self):
        argv = ["verify", "--claim", "maximal-stratum", "--p", "3", "--g", "2", "--d", "1"]
        assert invoke(argv) == invoke(argv)

    def test_loosened_gap_reports_counterexample(self):
        code, out, _ = invoke(
            ["verify", "--claim", "oper-dominance", "--r", "2", "--d", "0", "--g", "2", "--max-gap", "4"]
        )
        assert code == 0
        report = json.loads(out)
        assert report["passed"] is False
        assert [w["vertices"] for w in report["witnesses"]] == [[[0, 0], [1, 2], [2, 0]]]

    def test_negative_max_gap_is_usage_error(self):
        code, out, err = invoke(
            ["verify", "--claim", "oper-dominance", "--r", "2", "--d", "0", "--g", "2", "--max-gap", "-1"]
        )
        assert code == 2
        assert out == ""
        assert "max_gap must be non-negative" in err

    def test_max_gap_only_for_oper_dominance(self):
        code, _, _ = invoke(["verify", "--claim", "gap-equivalence", "--g", "2", "--max-gap", "4"])
        assert code == 2

    def test_genus_too_small(self):
        code, _, err = invoke(["verify", "--claim", "gap-equivalence", "--g", "1"])
        assert code == 1
        assert err.startswith("GenusTooSmall")

    def test_batch(self):
        code, out, _ = invoke(
            ["batch", "--claims", "canonical-hn", "--p", "2", "--g", "2", "--d-min", "0", "--d-max", "0", "--r-max", "1"]
        )
        assert code == 0
        reports = json.loads(out)
        assert len(reports) == 1
        assert reports[0]["passed"] is True


class TestDetpushCommand:
    def test_expression(self):
        code, out, _ = invoke(["detpush", "--rank", "2", "--divisor", "2*P1-1*P2", "--map", "P1:Q1,P2:Q1"])
        assert code == 0
        assert json.loads(out) == {"power": 2, "points": {"Q1": 1}, "expression": "det(f_*O_X)^2 +1*Q1"}

    def test_malformed_divisor_is_usage_error(self):
        code, _, _ = invoke(["detpush", "--rank", "1", "--divisor", "2P1", "--map", "P1:Q1"])
        assert code == 2

    def test_unmapped_point(self):
        code, _, err = invoke(["detpush", "--rank", "1", "--divisor", "1*P1+1*P2", "--map", "P1:Q1"])
        assert code == 1
        assert err.startswith("InvalidDivisor")


class TestUsageAndConfig:
    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["frobnicate"],
            ["push", "--p", "2", "--g", "2", "--d", "0"],
            ["push", "--p", "two", "--g", "2", "--r", "1", "--d", "0"],
            ["enumerate", "--r", "2", "--d", "0", "--g", "2", "--node-cap", "0"],
            ["poset", "--r", "2", "--d", "0", "--g", "2", "--format", "svg"],
        ],
    )
    def test_usage_errors(self, argv):
        assert invoke(argv)[0] == 2

    def test_env_node_cap(self, clean_env):
        clean_env.setenv("FROBSTRAT_NODE_CAP", "3")
        code, _, err = invoke(["enumerate", "--r", "4", "--d", "0", "--g", "2"])
        assert code == 1
        assert "node cap 3 exhausted" in err
        assert err.splitlines()[-1].startswith("BudgetExceeded")

    def test_flag_beats_env(self, clean_env):
        clean_env.setenv("FROBSTRAT_NODE_CAP", "3")
        code, _, _ = invoke(["enumerate", "--r", "4", "--d", "0", "--g", "2", "--node-cap", "1000000"])
        assert code == 0

    def test_no_floats_in_output(self):
        for argv in (
            ["push", "--p", "5", "--g", "3", "--r", "3", "--d", "2"],
            ["canfil", "--p", "5", "--g", "3", "--r", "3", "--d", "2"],
            ["verify", "--claim", "oper-dominance", "--r", "3", "--d", "3", "--g", "2"],
        ):
            _, out, _ = invoke(argv)
            assert "." not in out
