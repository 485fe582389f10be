import json
import os

import pytest

from lzl import parse_graph
from lzl.cli import load_graph, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def report_of(stdout: str) -> dict:
    return json.loads(stdout[stdout.index("{"):])


class TestGen:
    def test_grid_file(self, tmp_path, capsys):
        out = tmp_path / "g.graph"
        code, _, _ = run_cli(capsys, "gen", "--family", "grid", "--n", "4", "--out", str(out))
        assert code == 0
        g = parse_graph(out.read_text())
        assert g.n == 16 and g.edge_count() == 24

    def test_kary_counts(self, tmp_path, capsys):
        out = tmp_path / "t.graph"
        code, _, _ = run_cli(capsys, "gen", "--family", "kary", "--k", "3", "--d", "3",
                             "--out", str(out))
        assert code == 0
        g = parse_graph(out.read_text())
        assert g.n == 40 and g.edge_count() == 39

    def test_spider_stdout(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "--family", "spider", "--arms", "3,3,3")
        assert code == 0
        assert out.startswith("p 10 9")

    def test_unknown_family_exit2(self, capsys):
        code, _, err = run_cli(capsys, "gen", "--family", "moebius", "--n", "4")
        assert code == 2 and "error" in err


class TestGraphSpecs:
    def test_family_specs(self):
        assert load_graph("grid:4")[0].n == 16
        assert load_graph("kary:3,3")[0].n == 40
        assert load_graph("spider:3,3,3")[0].n == 10
        assert load_graph("kary:3,3:sub10")[0].n == 430

    def test_file_spec(self, tmp_path):
        p = tmp_path / "x.graph"
        p.write_text("p 2 1\ne 1 2\n")
        g, gid = load_graph(str(p))
        assert g.n == 2 and gid == "x.graph"


class TestIsoCmd:
    def test_h_index_grid4(self, capsys):
        code, out, _ = run_cli(capsys, "iso", "--graph", "grid:4", "--mode", "vertex",
                               "--h-index", "--peak")
        assert code == 0
        results = report_of(out)["report"]["results"]
        assert results["h_index"] == 4 and results["peak"] == 4

    def test_csv_export(self, tmp_path, capsys):
        csv = tmp_path / "p.csv"
        code, _, _ = run_cli(capsys, "iso", "--graph", "path:4", "--mode", "edge",
                             "--csv", str(csv))
        assert code == 0
        assert csv.read_text().splitlines()[0] == "k,phi,exact"

    def test_cap_exit3(self, capsys):
        code, _, err = run_cli(capsys, "iso", "--graph", "grid:6")
        assert code == 3 and "cap" in err


class TestBoundsCmd:
    def test_grid11_window(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--graph", "grid:11", "--no-iso")
        assert code == 0
        best = report_of(out)["report"]["results"]["best"]["prox1"]
        assert best["lower"] == 4 and best["upper"] == 7

    def test_k4_pathwidth_route(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--graph", "complete:4",
                               "--pathwidth", "--solve")
        assert code == 0
        results = report_of(out)["report"]["results"]
        assert results["best"]["zeta1"]["upper"] == 3
        rules = {b["rule"] for b in results["bounds"]}
        assert "pathwidth-sweep" in rules


class TestSolveCmds:
    def test_zeta_spider(self, capsys):
        code, out, _ = run_cli(capsys, "zeta", "solve", "--graph", "spider:3,3,3")
        assert code == 0
        assert report_of(out)["report"]["results"]["zeta1"] == 2

    def test_zeta_k5(self, capsys):
        code, out, _ = run_cli(capsys, "zeta", "solve", "--graph", "complete:5")
        assert code == 0
        assert report_of(out)["report"]["results"]["zeta1"] == 4

    def test_prox_solve_and_verify(self, tmp_path, capsys):
        code, out, _ = run_cli(capsys, "prox", "solve", "--graph", "path:6")
        assert code == 0
        assert report_of(out)["report"]["results"]["prox1"] == 1

        sched = tmp_path / "s.json"
        sched.write_text(json.dumps(
            {"mode": "prox", "cops": 1, "rounds": [[2], [3], [4], [5]]}
        ))
        code, out, _ = run_cli(capsys, "prox", "verify", "--graph", "path:6",
                               "--schedule", str(sched))
        assert code == 0
        assert report_of(out)["report"]["results"]["cleared"] is True

    def test_failed_verification_exit1(self, tmp_path, capsys):
        sched = tmp_path / "s.json"
        sched.write_text(json.dumps({"mode": "prox", "cops": 1, "rounds": [[2]]}))
        code, out, _ = run_cli(capsys, "prox", "verify", "--graph", "path:6",
                               "--schedule", str(sched))
        assert code == 1

    def test_zeta_simulate_escape_exit1(self, capsys):
        code, out, _ = run_cli(capsys, "zeta", "simulate", "--graph", "spider:3,3,3",
                               "--policy", "arm-scan")
        assert code == 1
        assert report_of(out)["report"]["results"]["outcome"] == "escape-witness"

    def test_solver_cap_exit3(self, capsys):
        code, _, _ = run_cli(capsys, "zeta", "solve", "--graph", "grid:4")
        assert code == 3


class TestStratCmd:
    def test_grid_sweep(self, tmp_path, capsys):
        emit = tmp_path / "grid11.json"
        code, out, _ = run_cli(capsys, "strat", "grid-sweep", "--n", "11",
                               "--emit", str(emit))
        assert code == 0
        results = report_of(out)["report"]["results"]
        assert results["budget"] == 6 and results["cleared"]
        data = json.loads(emit.read_text())
        assert data["cops"] == 6

    def test_tree_depth(self, capsys):
        code, out, _ = run_cli(capsys, "strat", "tree-depth", "--graph", "kary:2,8")
        assert code == 0
        results = report_of(out)["report"]["results"]
        assert results["budget"] == 3 and results["cleared"]

    def test_pathwidth_policy(self, capsys):
        code, out, _ = run_cli(capsys, "strat", "pathwidth", "--graph", "complete:4")
        assert code == 0
        results = report_of(out)["report"]["results"]
        assert results["budget"] == 3 and results["outcome"] == "captured-all-branches"

    def test_domination_inapplicable_exit2(self, capsys):
        code, _, err = run_cli(capsys, "strat", "domination", "--graph", "grid:2")
        assert code == 2


class TestTableCmd:
    def test_tab1_reproduces(self, capsys):
        code, out, _ = run_cli(capsys, "table", "tab1")
        assert code == 0
        rows = report_of(out)["report"]["results"]["rows"]
        assert rows == {"T0": [6, 2, 4], "T10": [9, 10, 10], "T100": [12, 77, 10]}
        assert "[ok]" in out


class TestDeterminismAndCache:
    def test_report_bytes_stable(self, capsys):
        _, out1, _ = run_cli(capsys, "zeta", "solve", "--graph", "path:5")
        _, out2, _ = run_cli(capsys, "zeta", "solve", "--graph", "path:5")
        r1 = json.dumps(report_of(out1)["report"], sort_keys=True)
        r2 = json.dumps(report_of(out2)["report"], sort_keys=True)
        assert r1 == r2

    def test_cache_roundtrip(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("LZL_CACHE", str(tmp_path / "cache"))
        _, out1, _ = run_cli(capsys, "prox", "solve", "--graph", "path:5")
        assert report_of(out1)["cache"]["hit"] is False
        _, out2, _ = run_cli(capsys, "prox", "solve", "--graph", "path:5")
        assert report_of(out2)["cache"]["hit"] is True
        assert report_of(out1)["report"] == report_of(out2)["report"]
        assert len(os.listdir(tmp_path / "cache")) == 1

    def test_max_n_override(self, capsys, monkeypatch):
        monkeypatch.setenv("LZL_MAX_N", "9")
        code, _, _ = run_cli(capsys, "prox", "solve", "--graph", "grid:3")
        assert code == 0
        monkeypatch.setenv("LZL_MAX_N", "8")
        code, _, _ = run_cli(capsys, "prox", "solve", "--graph", "grid:3")
        assert code == 3


class TestUsageErrors:
    def test_gen_missing_n(self, capsys):
        code, _, err = run_cli(capsys, "gen", "--family", "path")
        assert code == 2 and "--n" in err

    def test_gen_missing_kary_params(self, capsys):
        code, _, err = run_cli(capsys, "gen", "--family", "kary", "--k", "3")
        assert code == 2 and "--d" in err

    def test_strat_missing_graph(self, capsys):
        code, _, err = run_cli(capsys, "strat", "tree-depth")
        assert code == 2 and "--graph" in err

    def test_grid_sweep_missing_n(self, capsys):
        code, _, err = run_cli(capsys, "strat", "grid-sweep")
        assert code == 2 and "--n" in err

    def test_prox_verify_missing_schedule(self, capsys):
        code, _, err = run_cli(capsys, "prox", "verify", "--graph", "path:4")
        assert code == 2 and "--schedule" in err

    def test_zeta_simulate_missing_policy(self, capsys):
        code, _, err = run_cli(capsys, "zeta", "simulate", "--graph", "path:4")
        assert code == 2 and "--policy" in err
