"""CLI contract tests: output shapes, engines, guards, and exit codes."""

import json
import subprocess
import sys

from riordan_graphs import verify
from riordan_graphs.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:
    def test_pascal_12(self, capsys):
        code, out, _ = run_cli(capsys, "count", "--spec", "pascal:n=12", "--what", "is")
        assert code == 0
        assert json.loads(out)["count"] == 98

    def test_alpha_on_toeplitz(self, capsys):
        code, out, _ = run_cli(
            capsys, "count", "--spec", "toeplitz:n=5;d=1,3", "--what", "alpha"
        )
        assert code == 0
        # {1, 3, 5} is independent (pairwise distances 2 and 4), so alpha is 3
        assert json.loads(out)["count"] == 3

    def test_engines_agree(self, capsys):
        counts = {}
        for engine in ("brute", "branch", "banded"):
            code, out, _ = run_cli(
                capsys,
                "count", "--spec", "toeplitz:n=18;d=1,3", "--engine", engine,
            )
            assert code == 0
            counts[engine] = json.loads(out)["count"]
        assert len(set(counts.values())) == 1

    def test_auto_uses_banded_for_narrow_toeplitz(self, capsys):
        _, out, _ = run_cli(capsys, "count", "--spec", "toeplitz:n=30;d=2")
        payload = json.loads(out)
        assert payload["engine"] == "banded"

    def test_max_is_includes_witnesses(self, capsys):
        _, out, _ = run_cli(capsys, "count", "--spec", "pascal:n=4", "--what", "max-is")
        payload = json.loads(out)
        assert payload["count"] == 1
        assert payload["witnesses"] == [[2, 4]]

    def test_maximal_listing(self, capsys):
        _, out, _ = run_cli(capsys, "count", "--spec", "pascal:n=4", "--what", "maximal")
        payload = json.loads(out)
        assert payload["sets"] == [[1], [2, 4], [3]]

    def test_cliques(self, capsys):
        _, out, _ = run_cli(capsys, "count", "--spec", "toeplitz:n=5;d=1,2", "--what", "cliques")
        assert json.loads(out)["count"] == 16

    def test_guard_blocks_large_n(self, capsys):
        code, _, err = run_cli(capsys, "count", "--spec", "pascal:n=64")
        assert code == 2
        assert "guard" in err

    def test_force_overrides_guard(self, capsys):
        code, out, _ = run_cli(capsys, "count", "--spec", "pascal:n=41", "--force")
        assert code == 0
        assert json.loads(out)["count"] > 0

    def test_env_overrides_guard(self, capsys, monkeypatch):
        monkeypatch.setenv("RIORDAN_MAX_N", "45")
        code, _, _ = run_cli(capsys, "count", "--spec", "pascal:n=41")
        assert code == 0
        monkeypatch.setenv("RIORDAN_MAX_N", "10")
        code, _, err = run_cli(capsys, "count", "--spec", "pascal:n=12")
        assert code == 2 and "guard" in err


class TestSeriesAndGraph:
    def test_series_eval(self, capsys):
        code, out, _ = run_cli(capsys, "series", "eval", "--expr", "1/(1-z)", "--order", "6")
        assert code == 0
        assert json.loads(out)["coefficients"] == [1, 1, 1, 1, 1, 1]

    def test_series_error_is_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "series", "eval", "--expr", "1/(1-z", "--order", "6")
        assert code == 2
        assert "offset 6" in err

    def test_graph_build_json(self, capsys):
        code, out, _ = run_cli(capsys, "graph", "build", "--spec", "toeplitz:n=4;d=2")
        assert code == 0
        assert json.loads(out) == {"n": 4, "edges": [[1, 3], [2, 4]]}

    def test_graph_build_dot(self, capsys):
        code, out, _ = run_cli(
            capsys, "graph", "build", "--spec", "pascal:n=2", "--format", "dot"
        )
        assert code == 0
        assert out == "graph G {\n  1;\n  2;\n  1 -- 2;\n}\n"

    def test_bad_spec_is_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "graph", "build", "--spec", "septagon:n=4")
        assert code == 2 and "septagon" in err


class TestBoundsAndVerify:
    def test_bounds_json(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--spec", "pascal:n=6")
        assert code == 0
        payload = json.loads(out)
        assert payload["exact"] == 12 and payload["ok"]

    def test_bounds_table_format(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--spec", "pascal:n=6", "--format", "table")
        assert code == 0
        assert "pascal-upper" in out and "tight" in out

    def test_verify_table1(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "table1")
        assert code == 0
        payload = json.loads(out)
        assert payload["ok"] and len(payload["cells"]) == 36

    def test_verify_table1_detects_mismatch(self, capsys, monkeypatch):
        broken = dict(verify.TABLE1)
        broken["pascal"] = (9,) + broken["pascal"][1:]
        monkeypatch.setattr(verify, "TABLE1", broken)
        code, out, _ = run_cli(capsys, "verify", "table1", "--max-n", "2")
        assert code == 1
        assert not json.loads(out)["ok"]

    def test_verify_sweep_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "sweep", "--family", "catalan:n={n}", "--range", "5..8"
        )
        assert code == 0
        assert [r["n"] for r in json.loads(out)] == [5, 6, 7, 8]

    def test_verify_sweep_csv(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "verify", "sweep", "--family", "toeplitz:n={n};d=1,2",
            "--range", "5..7", "--format", "csv",
        )
        assert code == 0
        assert out.splitlines()[0] == "spec,n,exact,bound,value,relation,holds,tight"

    def test_verify_sweep_bad_range(self, capsys):
        code, _, err = run_cli(
            capsys, "verify", "sweep", "--family", "pascal:n={n}", "--range", "5-8"
        )
        assert code == 2 and "range" in err

    def test_verify_decomposition(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "decomposition", "--spec", "catalan:n=12")
        assert code == 0
        assert json.loads(out)["ok"]

    def test_verify_decomposition_needs_riordan(self, capsys):
        code, _, err = run_cli(capsys, "verify", "decomposition", "--spec", "delta:n=6")
        assert code == 2 and "Riordan" in err

    def test_usage_error_is_exit_2(self, capsys):
        assert main(["count"]) == 2
        capsys.readouterr()


class TestDeterminism:
    def test_sweep_output_is_byte_identical(self):
        cmd = [
            sys.executable, "-m", "riordan_graphs",
            "verify", "sweep", "--family", "pascal:n={n}", "--range", "4..10",
        ]
        first = subprocess.run(cmd, capture_output=True, check=True)
        second = subprocess.run(cmd, capture_output=True, check=True)
        assert first.stdout == second.stdout
        assert first.stdout  # nonempty

    def test_count_engine_flag_recorded(self):
        cmd = [
            sys.executable, "-m", "riordan_graphs",
            "count", "--spec", "motzkin:n=10", "--engine", "brute",
        ]
        result = subprocess.run(cmd, capture_output=True, check=True)
        payload = json.loads(result.stdout)
        assert payload == {
            "spec": "motzkin:n=10", "what": "is", "engine": "brute", "count": 48,
        }
