import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from polysyz.cli import cli

DATA = Path(__file__).resolve().parent.parent / "data"
CUBIC = str(DATA / "cubic_triangle.json")
TRIANGLE = str(DATA / "unit_triangle.json")
SQUARE = str(DATA / "unit_square.json")
SIMPLEX = str(DATA / "simplex_112.json")


@pytest.fixture
def runner():
    return CliRunner()


def run_ok(runner, args):
    result = runner.invoke(cli, args, catch_exceptions=False)
    assert result.exit_code == 0, result.stdout
    return result


class TestBasicCommands:
    def test_count(self, runner):
        out = run_ok(runner, ["count", CUBIC, "--d", "2"]).stdout
        assert json.loads(out) == {"d": 2, "count": 10}

    def test_ehrhart(self, runner):
        data = json.loads(run_ok(runner, ["ehrhart", CUBIC]).stdout)
        assert data["coeffs"] == ["1", "3/2", "3/2"]

    def test_roots(self, runner):
        data = json.loads(run_ok(runner, ["roots", TRIANGLE]).stdout)
        assert data == {"r": 2, "integer_roots": [-1, -2]}

    def test_normality_witness(self, runner):
        data = json.loads(run_ok(runner, ["normality", SIMPLEX]).stdout)
        assert data["normal"] is False
        assert data["witness"] == {"point": [1, 1, 1], "m": 2}

    def test_betti_json(self, runner):
        data = json.loads(
            run_ok(runner, ["betti", CUBIC, "--max-i", "2", "--max-slope", "3"]).stdout
        )
        assert data["entries"]["0,0"] == 1
        assert data["entries"]["1,3"] == 1

    def test_betti_text(self, runner):
        out = run_ok(
            runner,
            ["betti", SQUARE, "--max-i", "2", "--max-slope", "3", "--format", "text"],
        ).stdout
        assert "." in out and "1" in out

    def test_np(self, runner):
        data = json.loads(
            run_ok(runner, ["np", CUBIC, "--pmax", "1", "--max-slope", "3"]).stdout
        )
        statuses = {v["p"]: v["status"] for v in data["verdicts"]}
        assert statuses[0] != "FAILS"
        assert statuses[1] == "FAILS"

    def test_cohomology_product(self, runner):
        data = json.loads(
            run_ok(
                runner, ["cohomology", "--product", "1,2", "--d", "1,1"]
            ).stdout
        )
        assert data["dims"]["0"] == 6
        assert data["euler"] == 6

    def test_regularity(self, runner):
        data = json.loads(run_ok(runner, ["regularity", CUBIC, "--m", "2"]).stdout)
        assert data["regular"] is True
        data = json.loads(
            run_ok(runner, ["regularity", "--product", "1,1", "--m", "-1,0"]).stdout
        )
        assert data["regular"] is False

    def test_predict(self, runner):
        data = json.loads(
            run_ok(runner, ["predict", CUBIC, "--w1", "2", "--p", "3"]).stdout
        )
        assert data["prediction"] == {"p": 3, "twist": 4}

    def test_criteria_product(self, runner):
        result = run_ok(
            runner, ["criteria", "--product", "2,2", "--d", "2,2", "--p", "2"]
        )
        payload = json.loads(result.stdout)
        by_name = {r["criterion"]: r for r in payload}
        assert by_name["segre_veronese"]["guaranteed_p"] == 2

    def test_criteria_polytope(self, runner):
        result = run_ok(runner, ["criteria", CUBIC, "--d", "2", "--p", "1"])
        payload = json.loads(result.stdout)
        by_name = {r["criterion"]: r for r in payload}
        assert by_name["dimension_bound"]["guaranteed_p"] == 1
        assert by_name["hilbert_roots"]["guaranteed_p"] == 1
        assert by_name["polytope_normality"]["threshold"] == 2


class TestExitCodes:
    def test_missing_file(self, runner):
        result = runner.invoke(cli, ["ehrhart", "no_such_file.json"])
        assert result.exit_code == 2

    def test_degenerate_input(self, runner, tmp_path):
        bad = tmp_path / "line.json"
        bad.write_text(json.dumps({"vertices": [[0, 0], [1]]}))
        result = runner.invoke(cli, ["ehrhart", str(bad)])
        assert result.exit_code == 2

    def test_bad_vector(self, runner):
        result = runner.invoke(cli, ["cohomology", "--product", "1,x", "--d", "1,1"])
        assert result.exit_code == 2

    def test_window_limit(self, runner):
        result = runner.invoke(cli, ["betti", CUBIC, "--max-slope", "20"])
        assert result.exit_code == 3
        result = runner.invoke(cli, ["np", CUBIC, "--pmax", "9"])
        assert result.exit_code == 3


class TestDeterminism:
    def test_corpus_reproducible(self, runner, tmp_path):
        a, b = tmp_path / "a", tmp_path / "b"
        for out in (a, b):
            run_ok(
                runner,
                ["corpus", "--seed", "5", "--count", "6", "--out-dir", str(out)],
            )
        files_a = sorted(p.name for p in a.iterdir())
        assert files_a == sorted(p.name for p in b.iterdir())
        for name in files_a:
            assert (a / name).read_bytes() == (b / name).read_bytes()

    def test_cache_cold_vs_warm(self, runner, tmp_path):
        args = [
            "np",
            CUBIC,
            "--pmax",
            "1",
            "--max-slope",
            "3",
            "--cache-dir",
            str(tmp_path),
        ]
        cold = run_ok(runner, args).stdout
        assert any(tmp_path.iterdir())
        warm = run_ok(runner, args).stdout
        assert cold == warm

    def test_threads_do_not_change_output(self, runner):
        base = run_ok(runner, ["betti", SIMPLEX, "--max-i", "2", "--max-slope", "4"]).stdout
        threaded = run_ok(
            runner,
            ["betti", SIMPLEX, "--max-i", "2", "--max-slope", "4", "--threads", "4"],
        ).stdout
        assert base == threaded

    def test_certify_agrees_with_modular(self, runner):
        fast = run_ok(runner, ["betti", SQUARE, "--max-i", "3", "--max-slope", "4"]).stdout
        exact = run_ok(
            runner,
            ["betti", SQUARE, "--max-i", "3", "--max-slope", "4", "--certify"],
        ).stdout
        assert json.loads(fast)["entries"] == json.loads(exact)["entries"]


def test_report(runner):
    out = run_ok(runner, ["report"]).stdout
    assert "| match |" in out
    assert "NO" not in out
