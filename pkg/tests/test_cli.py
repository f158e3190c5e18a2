"""Command-line behavior: outputs, file round-trips, JSON, and exit codes."""

import json
import subprocess
import sys

import pytest

from hyperf import (
    FReport,
    Orientation,
    PSetColoring,
    complete,
    read_path,
    to_text,
    write_path,
)
from hyperf.cli import main
from hyperf.verify import SUITES, CheckResult, VerifySuiteReport


def test_gen_then_f_pipeline(tmp_path, capsys):
    target = tmp_path / "h.hg"
    assert main(["gen", "complete", "--n", "4", "--r", "3", "-o", str(target)]) == 0
    capsys.readouterr()
    assert main(["f", str(target), "--p", "1", "--k", "1", "--method", "brute"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "0"
    assert read_path(target) == complete(4, 3)


def test_mad_prints_exact_rational(tmp_path, capsys):
    target = tmp_path / "k5.hg"
    write_path(complete(5, 2), target)
    assert main(["mad", str(target)]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "4/1"
    assert out[1].startswith("witness:")
    assert main(["mad", str(target), "--quiet"]) == 0
    assert capsys.readouterr().out.splitlines() == ["4/1"]


def test_orient_writes_verifiable_file(tmp_path, capsys):
    src = tmp_path / "h.hg"
    out = tmp_path / "h.or"
    write_path(complete(4, 3), src)
    assert main(["orient", str(src), "--max-outdeg", "1", "-o", str(out)]) == 0
    capsys.readouterr()
    oriented = read_path(out)
    assert isinstance(oriented, Orientation)
    assert oriented.base == complete(4, 3)
    firsts = [0] * 4
    for order in oriented.orders:
        firsts[order[0]] += 1
    assert max(firsts) <= 1


def test_orient_infeasible_exit_two(tmp_path, capsys):
    src = tmp_path / "k5.hg"
    write_path(complete(5, 2), src)
    assert main(["orient", str(src), "--max-outdeg", "1"]) == 2
    assert "infeasible" in capsys.readouterr().out


def test_orient_needs_exactly_one_mode(tmp_path, capsys):
    src = tmp_path / "h.hg"
    write_path(complete(3, 2), src)
    assert main(["orient", str(src)]) == 1


def test_f_json_roundtrip(tmp_path, capsys):
    src = tmp_path / "k4.hg"
    write_path(complete(4, 2), src)
    assert main(["f", str(src), "--json", "--method", "via-m"]) == 0
    rep = FReport.from_dict(json.loads(capsys.readouterr().out))
    assert rep.value == 2
    assert rep.method == "via-m"


def test_f_auto_picks_closed_form(tmp_path, capsys):
    src = tmp_path / "k10.hg"
    write_path(complete(10, 2), src)
    assert main(["f", str(src), "--k", "2"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ["4", "method: closed"]


def test_b_json_coloring_roundtrip(tmp_path, capsys):
    src = tmp_path / "h.hg"
    write_path(complete(5, 3), src)
    assert main(["b", str(src), "--p", "2", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["b"] == 10
    coloring = PSetColoring.from_dict(payload["coloring"])
    assert len(coloring.colored) == 10


def test_chi_r_and_m_outputs(tmp_path, capsys):
    src = tmp_path / "h.hg"
    write_path(complete(6, 3), src)
    assert main(["chi-r", str(src), "--p", "2", "--quiet"]) == 0
    assert capsys.readouterr().out.strip() == "3"
    k10 = tmp_path / "k10.hg"
    write_path(complete(10, 2), k10)
    assert main(["m", k10.as_posix(), "--k", "1", "--quiet"]) == 0
    assert capsys.readouterr().out.strip() == "6"


def test_bounds_json_lists_rows(tmp_path, capsys):
    src = tmp_path / "k5.hg"
    write_path(complete(5, 2), src)
    assert main(["bounds", str(src), "--k", "1", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    names = {row["name"] for row in payload["bounds"]}
    assert {"independence", "chromatic", "degenerate-upper"} <= names


def test_tset_not_found_is_exit_two(tmp_path, capsys):
    oriented = Orientation(complete(3, 2), ((0, 1), (0, 2), (1, 2)))
    src = tmp_path / "t.or"
    src.write_text(to_text(oriented))
    assert main(["tset", str(src), "--p", "1", "--k", "1", "--t", "2"]) == 2
    capsys.readouterr()
    cyclic = Orientation(complete(3, 2), ((0, 1), (2, 0), (1, 2)))
    src.write_text(to_text(cyclic))
    assert main(["tset", str(src), "--p", "1", "--k", "1", "--t", "3"]) == 0
    assert capsys.readouterr().out.strip() == "0 1 2"


def test_tset_rejects_plain_hypergraph(tmp_path, capsys):
    src = tmp_path / "h.hg"
    write_path(complete(3, 2), src)
    assert main(["tset", str(src), "--p", "1", "--k", "1", "--t", "1"]) == 1


def test_pack_fano_block_count(capsys):
    assert main(["pack", "--n", "7", "--r", "3", "--p", "2", "--k", "1", "--m", "3"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "7"
    assert main(["pack", "--n", "6", "--r", "4", "--p", "2", "--k", "3"]) == 2


def test_missing_file_is_exit_one(capsys):
    assert main(["mad", "definitely-not-here.hg"]) == 1


def test_unknown_flag_is_exit_one(tmp_path, capsys):
    src = tmp_path / "h.hg"
    write_path(complete(3, 2), src)
    assert main(["f", str(src), "--definitely-not-a-flag"]) == 1


def test_budget_flag_exit_three(tmp_path, capsys):
    src = tmp_path / "k6.hg"
    write_path(complete(6, 2), src)
    assert main(["b", str(src), "--budget", "5"]) == 3
    assert "budget" in capsys.readouterr().err


def test_budget_env_var(tmp_path, capsys, monkeypatch):
    src = tmp_path / "k10.hg"
    write_path(complete(10, 2), src)
    monkeypatch.setenv("HYPERF_BUDGET", "5")
    assert main(["m", str(src), "--k", "1"]) == 3
    capsys.readouterr()
    # an explicit flag overrides the environment
    assert main(["m", str(src), "--k", "1", "--budget", "10000000"]) == 0
    monkeypatch.setenv("HYPERF_BUDGET", "not-a-number")
    assert main(["m", str(src), "--k", "1"]) == 1


def test_gen_json_output(capsys):
    assert main(["gen", "complete", "--n", "3", "--r", "2", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"n": 3, "r": 2, "edges": [[0, 1], [0, 2], [1, 2]]}


def test_gen_missing_params_exit_one(capsys):
    assert main(["gen", "complete", "--n", "3"]) == 1


def test_verify_suite_passes(capsys):
    assert main(["verify", "ramsey-chi"]) == 0
    assert "ramsey-chi: 4 passed, 0 failed" in capsys.readouterr().out


def test_verify_unknown_suite_exit_one(capsys):
    assert main(["verify", "no-such-suite"]) == 1


def test_verify_failure_exit_four(capsys, monkeypatch):
    def doomed(seed=1, budget=None):
        check = CheckResult(instance="x", relation="y == z", values={}, ok=False)
        return VerifySuiteReport(suite="doomed", seed=seed, checks=[check])

    monkeypatch.setitem(SUITES, "doomed", doomed)
    assert main(["verify", "doomed"]) == 4
    out = capsys.readouterr().out
    assert "1 failed" in out and "FAIL x" in out


def test_verify_json_roundtrip(capsys):
    assert main(["verify", "multipartite", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    report = VerifySuiteReport.from_dict(payload)
    assert report.failed == 0
    assert report.suite == "multipartite"


def test_module_entry_point(tmp_path):
    src = tmp_path / "k5.hg"
    write_path(complete(5, 2), src)
    proc = subprocess.run(
        [sys.executable, "-m", "hyperf.cli", "mad", str(src), "--quiet"],
        capture_output=True, text=True, timeout=60,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "4/1"
