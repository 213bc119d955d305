import json

import pytest
from click.testing import CliRunner

from aimnu.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, args):
    return runner.invoke(main, args, catch_exceptions=False)


class TestList:
    def test_table(self, runner):
        result = invoke(runner, ["list"])
        assert result.exit_code == 0
        for name in ("hermite", "morse", "hulthen", "kratzer"):
            assert name in result.output

    def test_json(self, runner):
        result = invoke(runner, ["list", "--format", "json"])
        doc = json.loads(result.output)
        assert len(doc["entries"]) == 17
        assert doc["entries"][1]["name"] == "hermite"

    def test_filter(self, runner):
        result = invoke(runner, ["list", "--filter", "chebyshev", "--format", "json"])
        names = [e["name"] for e in json.loads(result.output)["entries"]]
        assert names == ["chebyshev_a", "chebyshev_b"]


class TestSolve:
    def test_table(self, runner):
        result = invoke(runner, ["solve", "hermite", "--n", "3"])
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0].split() == ["n", "eigenvalue"]
        assert [line.split() for line in lines[1:]] == [
            ["0", "0"],
            ["1", "1"],
            ["2", "2"],
            ["3", "3"],
        ]

    def test_json_exact_rationals(self, runner):
        result = invoke(
            runner, ["solve", "kratzer", "--n", "2", "--format", "json"]
        )
        doc = json.loads(result.output)
        assert [row["eigenvalue"] for row in doc["rows"]] == ["1/2", "1/4", "1/6"]

    def test_csv(self, runner):
        result = invoke(runner, ["solve", "morse", "--n", "1", "--format", "csv"])
        assert result.output.splitlines() == ["n,eigenvalue", "0,2", "1,1"]

    def test_param_override(self, runner):
        result = invoke(
            runner,
            ["solve", "morse", "--param", "beta=7/2", "--n", "0", "--format", "csv"],
        )
        assert "0,3" in result.output

    def test_unknown_entry_exits_2(self, runner):
        result = runner.invoke(main, ["solve", "missing_entry"])
        assert result.exit_code == 2

    def test_bad_parameter_exits_2(self, runner):
        result = runner.invoke(main, ["solve", "morse", "--param", "alpha=0"])
        assert result.exit_code == 2
        result = runner.invoke(main, ["solve", "hermite", "--param", "x=1.5"])
        assert result.exit_code == 2

    def test_problem_file(self, runner, tmp_path):
        doc = {
            "name": "custom_hermite",
            "tau": {"r0": "0", "r1": {"const": "-2"}},
            "sigma": ["1"],
            "gamma": {"const": "0", "param": "2"},
            "parameter": "k",
            "evalPoint": "1",
        }
        path = tmp_path / "problem.json"
        path.write_text(json.dumps(doc))
        result = invoke(runner, ["solve", str(path), "--n", "2", "--format", "json"])
        assert result.exit_code == 0
        out = json.loads(result.output)
        assert out["name"] == "custom_hermite"
        assert [row["eigenvalue"] for row in out["rows"]] == ["0", "1", "2"]

    def test_malformed_file_exits_2(self, runner, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        result = runner.invoke(main, ["solve", str(path)])
        assert result.exit_code == 2


class TestAim:
    def test_hermite_bracket(self, runner):
        result = invoke(
            runner, ["aim", "hermite", "--bracket=-1/2:3/2", "--format", "json"]
        )
        assert result.exit_code == 0
        rows = json.loads(result.output)["rows"]
        assert all(row["converged"] for row in rows)
        values = [
            abs(int(r["value"].split("/")[0]) / int(r["value"].split("/")[1]))
            if "/" in r["value"]
            else abs(int(r["value"]))
            for r in rows
        ]
        assert any(v < 1e-7 for v in values)
        assert any(abs(v - 1) < 1e-7 for v in values)

    def test_no_root_exits_1(self, runner):
        result = runner.invoke(
            main, ["aim", "morse", "--bracket", "10:11", "--kmax", "6", "--scan", "16"]
        )
        assert result.exit_code == 1
        assert "no sign change" in result.output

    def test_bad_bracket_exits_2(self, runner):
        result = runner.invoke(main, ["aim", "hermite", "--bracket", "zero-one"])
        assert result.exit_code == 2


class TestEigenfunction:
    def test_recursion_coefficients(self, runner):
        result = invoke(
            runner, ["eigenfunction", "hermite", "--n", "2", "--format", "json"]
        )
        doc = json.loads(result.output)
        assert doc["coefficients"] == ["-1/2", "0", "1"]
        assert doc["eigenvalue"] == "2"

    def test_rodrigues(self, runner):
        result = invoke(
            runner,
            ["eigenfunction", "hermite", "--n", "2", "--method", "rodrigues", "--format", "json"],
        )
        assert json.loads(result.output)["coefficients"] == ["-2", "0", "4"]

    def test_explicit_out_of_range_exits_2(self, runner):
        result = runner.invoke(
            main, ["eigenfunction", "hermite", "--n", "5", "--method", "explicit"]
        )
        assert result.exit_code == 2

    def test_hypergeometric_hulthen_only(self, runner):
        result = runner.invoke(
            main, ["eigenfunction", "legendre", "--method", "hypergeometric"]
        )
        assert result.exit_code == 2
        result = invoke(
            runner,
            ["eigenfunction", "hulthen", "--n", "1", "--method", "hypergeometric", "--format", "json"],
        )
        assert json.loads(result.output)["coefficients"] == ["-1", "3"]

    def test_samples_csv(self, runner):
        result = invoke(
            runner,
            ["eigenfunction", "legendre", "--n", "1", "--samples", "0:1:3", "--format", "csv"],
        )
        assert result.output.splitlines() == ["r,y", "0,0", "0.5,0.5", "1,1"]


class TestNu:
    def _write(self, tmp_path, doc):
        path = tmp_path / "nu.json"
        path.write_text(json.dumps(doc))
        return str(path)

    def test_oscillator(self, runner, tmp_path):
        path = self._write(
            tmp_path, {"tauTilde": ["0"], "sigma": ["1"], "sigmaTilde": ["5", "0", "-1"]}
        )
        result = invoke(runner, ["nu", path, "--n", "2", "--format", "json"])
        doc = json.loads(result.output)
        assert [c["k"] for c in doc["candidates"]] == ["5", "5"]
        assert {c["lambdaBar"] for c in doc["candidates"]} == {"6", "4"}
        assert {c["lambdaBar_2"] for c in doc["candidates"]} == {"-4", "4"}

    def test_no_reduction_exits_1(self, runner, tmp_path):
        path = self._write(
            tmp_path, {"tauTilde": ["0"], "sigma": ["1"], "sigmaTilde": ["0", "0", "-2"]}
        )
        result = runner.invoke(main, ["nu", path])
        assert result.exit_code == 1

    def test_missing_key_exits_2(self, runner, tmp_path):
        path = self._write(tmp_path, {"sigma": ["1"]})
        result = runner.invoke(main, ["nu", path])
        assert result.exit_code == 2


class TestVerify:
    def test_single_suite(self, runner):
        result = invoke(runner, ["verify", "--filter", "delta"])
        assert result.exit_code == 0
        assert "2/2 checks passed" in result.output
        assert "FAIL" not in result.output

    def test_unknown_filter_exits_2(self, runner):
        result = runner.invoke(main, ["verify", "--filter", "zzz"])
        assert result.exit_code == 2


class TestDeterminism:
    def test_json_and_csv_outputs_stable(self, runner):
        for args in (
            ["solve", "hulthen", "--n", "4", "--format", "json"],
            ["solve", "hulthen", "--n", "4", "--format", "csv"],
            ["eigenfunction", "gegenbauer", "--n", "3", "--format", "csv"],
            ["aim", "hermite", "--bracket=-1/2:3/2", "--format", "json"],
        ):
            first = invoke(runner, args)
            second = invoke(runner, args)
            assert first.output == second.output
            assert first.exit_code == second.exit_code == 0
