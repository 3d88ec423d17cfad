import json
import re

import pytest

from harmonic_periods import Metric, evaluate
from harmonic_periods.cli import build_report, compare, main
from harmonic_periods.datasets import data_path
from harmonic_periods.errors import MismatchError
from harmonic_periods.io import parse_json
from harmonic_periods.search import dphs_search
from conftest import GAP_FOE

GAP = str(data_path("gap.csv"))
HARTSTONE = str(data_path("hartstone.csv"))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_harmonize_tsu(capsys):
    code, out, _ = run(capsys, "harmonize", GAP, "--metric", "tsu", "--algorithm", "dphs")
    assert code == 0
    assert "TSU = 0.9725" in out


def test_harmonize_foe_brute_force_stats(capsys):
    code, out, _ = run(capsys, "harmonize", GAP, "--metric", "foe",
                       "--algorithm", "brute-force", "--stats")
    assert code == 0
    assert "FOE = 213" in out
    assert "3806 (m, b) pairs" in out


def test_global_flags_before_subcommand(capsys):
    code, out, _ = run(capsys, "--format", "json", "--stats", "harmonize", GAP, "--metric", "mpe")
    doc = json.loads(out)
    assert code == 0
    assert doc["assignment"]["cost"] == 0.36
    assert doc["stats"]["algorithm"] == "dphs"


def test_percentage_display(capsys):
    _, out, _ = run(capsys, "harmonize", GAP, "--metric", "mpe")
    assert "MPE = 36.000%" in out


def test_infeasible_exit(capsys, tmp_path):
    p = tmp_path / "bad.csv"
    p.write_text("name,wcet,period\nonly,10,5\n")
    code, out, _ = run(capsys, "harmonize", str(p))
    assert code == 1
    assert "no feasible harmonic assignment" in out


def test_parse_error_exit(capsys, tmp_path):
    p = tmp_path / "bad.csv"
    p.write_text("name,wcet,period\na,zz,5\n")
    code, _, err = run(capsys, "harmonize", str(p))
    assert code == 2 and "line 2" in err
    code, _, _ = run(capsys, "harmonize", str(tmp_path / "missing.csv"))
    assert code == 2
    empty = tmp_path / "empty.csv"
    empty.write_text("")
    assert run(capsys, "check", str(empty))[0] == 2


def test_json_totals_match_evaluate(capsys, gap):
    for metric in Metric:
        _, out, _ = run(capsys, "--format", "json", "harmonize", GAP, "--metric", metric.value)
        doc = json.loads(out)
        periods = doc["assignment"]["periods"]
        totals = doc["totals"]
        assert totals["total_utilization"] == pytest.approx(evaluate("tsu", gap, periods), abs=1e-6)
        assert totals["max_pe"] == pytest.approx(evaluate("mpe", gap, periods), abs=1e-6)
        assert totals["total_foe"] == pytest.approx(evaluate("foe", gap, periods), abs=1e-6)
        # totals recomputable from the rows
        rows = doc["rows"]
        assert sum(r["utilization"] for r in rows) == pytest.approx(totals["total_utilization"],
                                                                    abs=1e-6)
        assert max(r["percentage_error"] for r in rows) == pytest.approx(totals["max_pe"])
        assert sum(r["first_order_error"] for r in rows) == totals["total_foe"]


def test_table_totals_match_evaluate(capsys, gap):
    _, out, _ = run(capsys, "harmonize", GAP, "--metric", "foe")
    m = re.search(r"total U = ([\d.]+), max PE = ([\d.]+)%, total FOE = ([\d.]+)", out)
    assert float(m.group(1)) == pytest.approx(evaluate("tsu", gap, GAP_FOE), abs=1e-6)
    assert float(m.group(2)) / 100 == pytest.approx(evaluate("mpe", gap, GAP_FOE), abs=1e-5)
    assert float(m.group(3)) == 213


def test_json_report_round_trip(capsys, gap):
    _, out, _ = run(capsys, "--format", "json", "harmonize", GAP)
    assert parse_json(json.dumps(json.loads(out)["tasks"])) == gap


def test_check(capsys):
    code, out, _ = run(capsys, "check", GAP)
    assert code == 0 and out.strip().endswith("schedulable") and "not" not in out
    periods = ",".join(map(str, GAP_FOE))
    code, out, _ = run(capsys, "check", GAP, "--periods", periods)
    assert code == 1 and "not schedulable" in out
    code, _, _ = run(capsys, "check", GAP, "--periods", "1,2")
    assert code == 2


def test_check_single_task(capsys, tmp_path):
    p = tmp_path / "one.csv"
    p.write_text("name,wcet,period\nt,2,5\n")
    code, out, _ = run(capsys, "--format", "json", "check", str(p))
    doc = json.loads(out)
    assert code == 0 and doc["response_times"] == [2] and doc["schedulable"]


def test_compare_gap(capsys):
    code, out, _ = run(capsys, "compare", GAP)
    assert code == 0
    assert out.count("3806") == 4
    code, out, _ = run(capsys, "--format", "json", "compare", GAP)
    rows = json.loads(out)
    assert {r["metric"] for r in rows} == {"tpe", "tsu", "foe", "mpe"}
    assert all(r["reduction"] >= 0.90 for r in rows)


def test_compare_small_and_single(capsys, tmp_path):
    p = tmp_path / "small.csv"
    p.write_text("name,wcet,period\na,2,12\nb,3,35\nc,2,112\n")
    code, out, _ = run(capsys, "--format", "json", "compare", str(p))
    tpe = [r for r in json.loads(out) if r["metric"] == "tpe"][0]
    assert code == 0 and tpe["cost"] == pytest.approx(0.2565, abs=1e-4)
    p.write_text("name,wcet,period\na,1,9\n")
    assert run(capsys, "compare", str(p))[0] == 0


def test_compare_mismatch_exit(capsys, monkeypatch):
    import harmonic_periods.cli as cli
    from dataclasses import replace

    real = cli.dphs_search

    def broken(ts, metric):
        r = real(ts, metric)
        return replace(r, assignment=replace(r.assignment, cost=r.assignment.cost + 1))

    monkeypatch.setattr(cli, "dphs_search", broken)
    assert run(capsys, "compare", GAP)[0] == 3
    with pytest.raises(MismatchError):
        compare(parse_json('[{"name": "a", "wcet": 1, "period": 9}]'))


def test_experiment_command(capsys, tmp_path):
    argv = ["experiment", "--sweep", "vary-tn", "--t1", "15", "--n", "8",
            "--points", "1000,2000,4000", "--trials", "3", "--seed", "7", "--no-timing"]
    code, _, _ = run(capsys, *argv, "--out", str(tmp_path / "a"))
    assert code == 0
    csv_a = (tmp_path / "a" / "experiment_vary-tn.csv").read_bytes()
    assert len(csv_a.decode().splitlines()) == 1 + 6
    assert (tmp_path / "a" / "experiment_vary-tn.json").exists()
    run(capsys, *argv, "--out", str(tmp_path / "b"))
    assert (tmp_path / "b" / "experiment_vary-tn.csv").read_bytes() == csv_a


def test_experiment_invalid_range(capsys, tmp_path):
    code, _, err = run(capsys, "experiment", "--sweep", "vary-tn", "--t1", "50",
                       "--points", "20", "--out", str(tmp_path))
    assert code == 2 and "t1" in err


def test_build_report_rows(gap):
    report = build_report(gap, dphs_search(gap, "tsu"))
    assert len(report.per_task_rows) == 17
    assert report.totals["cost"] == 0.9725
