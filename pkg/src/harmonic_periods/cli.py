"""Command-line front end.

Exit codes: 0 success, 1 infeasible / not schedulable, 2 bad input,
3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from .errors import ConvergenceError, HarmonicPeriodsError, MismatchError, ValidationError
from .experiments import ExperimentConfig, Sweep, run_experiment, write_results
from .io import parse_taskset_file
from .metrics import Metric, evaluate
from .model import Algorithm, HarmonicAssignment, SearchStats, TaskSet
from .schedulability import is_rm_schedulable, total_utilization
from .search import SearchResult, brute_force_search, dphs_search, harmonize

EXIT_OK, EXIT_INFEASIBLE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


@dataclass(frozen=True)
class ReportRow:
    name: str
    wcet: float
    period: int
    new_period: int
    utilization: float
    percentage_error: float
    first_order_error: int


@dataclass(frozen=True)
class Report:
    original: TaskSet
    assignment: Optional[HarmonicAssignment]
    per_task_rows: tuple[ReportRow, ...]
    totals: dict
    stats: SearchStats


def build_report(taskset: TaskSet, result: SearchResult) -> Report:
    a = result.assignment
    rows = ()
    totals = {}
    if a is not None:
        rows = tuple(
            ReportRow(t.name, t.wcet, bound, p, t.wcet / p, (bound - p) / bound, bound - p)
            for t, bound, p in zip(taskset, taskset.effective_bounds, a.periods)
        )
        totals = {
            "cost": a.cost,
            "total_utilization": evaluate(Metric.TSU, taskset, a.periods),
            "max_pe": evaluate(Metric.MPE, taskset, a.periods),
            "total_foe": evaluate(Metric.FOE, taskset, a.periods),
            "tpe": evaluate(Metric.TPE, taskset, a.periods),
        }
    return Report(taskset, a, rows, totals, result.stats)


def _num(x, places=6):
    text = f"{x:.{places}f}".rstrip("0").rstrip(".")
    return text if text not in ("", "-0") else "0"


def format_cost(metric: Metric, cost: float) -> str:
    """Metric total as printed in reports: percentages for TPE/MPE."""
    if metric.is_percentage:
        return f"{metric.name} = {cost * 100:.3f}%"
    return f"{metric.name} = {_num(cost)}"


def _table(header, rows):
    widths = [max(len(str(c)) for c in col) for col in zip(header, *rows)]

    def line(cells):
        return "  ".join(str(c).rjust(w) for c, w in zip(cells, widths))

    return "\n".join([line(header), line(["-" * w for w in widths])] + [line(r) for r in rows])


def render_report(report: Report, fmt="table", show_stats=False) -> str:
    stats = {
        "algorithm": report.stats.algorithm.value,
        "pairs_evaluated": report.stats.pairs_evaluated,
        "elapsed_ms": report.stats.elapsed * 1e3,
    }
    a = report.assignment
    if fmt == "json":
        doc = {"tasks": report.original.to_records(), "feasible": a is not None}
        if a is not None:
            doc["assignment"] = {
                "metric": a.metric.value, "multiplier": a.multiplier, "base": a.base,
                "exponents": list(a.exponents), "periods": list(a.periods), "cost": a.cost,
            }
            doc["rows"] = [r.__dict__ for r in report.per_task_rows]
            doc["totals"] = report.totals
        if show_stats:
            doc["stats"] = stats
        return json.dumps(doc, indent=2)

    if a is None:
        out = ["no feasible harmonic assignment"]
    else:
        rows = [[r.name, _num(r.wcet), r.period, r.new_period, f"{r.utilization:.5f}",
                 f"{r.percentage_error * 100:.3f}", r.first_order_error]
                for r in report.per_task_rows]
        out = [
            _table(["task", "C", "T", "T'", "U", "PE(%)", "FOE"], rows),
            "",
            f"m = {a.multiplier}, b = {a.base}",
            format_cost(a.metric, a.cost),
            f"total U = {_num(report.totals['total_utilization'])}, "
            f"max PE = {report.totals['max_pe'] * 100:.3f}%, "
            f"total FOE = {_num(report.totals['total_foe'])}",
        ]
    if show_stats:
        out.append(f"{stats['algorithm']}: {stats['pairs_evaluated']} (m, b) pairs evaluated "
                   f"in {stats['elapsed_ms']:.3f} ms")
    return "\n".join(out)


def cmd_harmonize(args) -> int:
    taskset = parse_taskset_file(args.input)
    result = harmonize(taskset, Metric.parse(args.metric), Algorithm(args.algorithm))
    print(render_report(build_report(taskset, result), args.format, args.stats))
    return EXIT_OK if result.feasible else EXIT_INFEASIBLE


def _parse_periods(text):
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise ValidationError(f"--periods must be comma-separated integers, got {text!r}") from None


def cmd_check(args) -> int:
    taskset = parse_taskset_file(args.input)
    periods = list(taskset.effective_bounds) if args.periods is None else _parse_periods(args.periods)
    if any(p < 1 for p in periods):
        raise ValidationError("periods must be >= 1")
    report = is_rm_schedulable(taskset, periods)
    utilization = total_utilization(taskset, periods)
    verdict = "schedulable" if report.schedulable else "not schedulable"
    if args.format == "json":
        print(json.dumps({
            "periods": periods,
            "response_times": list(report.per_task_response),
            "total_utilization": utilization,
            "schedulable": report.schedulable,
        }, indent=2))
    else:
        rows = [[t.name, _num(t.wcet), p, "missed" if r is None else _num(r)]
                for t, p, r in zip(taskset, periods, report.per_task_response)]
        print(_table(["task", "C", "T", "R"], rows))
        print(f"\ntotal U = {_num(utilization)}")
        print(verdict)
    return EXIT_OK if report.schedulable else EXIT_INFEASIBLE


def compare(taskset: TaskSet) -> list[dict]:
    """Run both searches for every metric; raise MismatchError if costs differ."""
    out = []
    for metric in Metric:
        bf = brute_force_search(taskset, metric)
        ph = dphs_search(taskset, metric)
        if bf.cost != ph.cost:
            raise MismatchError(f"{metric.name}: brute force {bf.cost} != DPHS {ph.cost}")
        out.append({
            "metric": metric.value,
            "cost": bf.cost,
            "brute_force_pairs": bf.stats.pairs_evaluated,
            "dphs_pairs": ph.stats.pairs_evaluated,
            "reduction": 1 - ph.stats.pairs_evaluated / bf.stats.pairs_evaluated,
            "brute_force_ms": bf.stats.elapsed * 1e3,
            "dphs_ms": ph.stats.elapsed * 1e3,
        })
    return out


def cmd_compare(args) -> int:
    taskset = parse_taskset_file(args.input)
    rows = compare(taskset)
    if args.format == "json":
        print(json.dumps(rows, indent=2))
        return EXIT_OK
    table = []
    for r in rows:
        metric = Metric(r["metric"])
        cost = "infeasible" if r["cost"] is None else format_cost(metric, r["cost"]).split(" = ")[1]
        table.append([metric.name, cost, r["brute_force_pairs"], r["dphs_pairs"],
                      f"{r['reduction'] * 100:.0f}%", f"{r['brute_force_ms']:.3f}",
                      f"{r['dphs_ms']:.3f}"])
    print(_table(["metric", "cost", "BF pairs", "DPHS pairs", "reduction", "BF ms", "DPHS ms"],
                 table))
    return EXIT_OK


def _points(text):
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise ValidationError(f"--points must be comma-separated integers, got {text!r}") from None


def cmd_experiment(args) -> int:
    config = ExperimentConfig(
        sweep=Sweep(args.sweep), sweep_points=_points(args.points), trials=args.trials,
        cardinality=args.n, t1=args.t1, tn=args.tn, seed=args.seed,
        metric=Metric.parse(args.metric), timing=args.timing,
    )
    records = run_experiment(config)
    csv_path, json_path = write_results(records, config, args.out)
    if args.format == "json":
        print(json.dumps({"csv": str(csv_path), "metadata": str(json_path),
                          "records": len(records)}))
    else:
        print(_table(["sweep_value", "algorithm", "mean_pairs", "mean_ms"],
                     [[r.sweep_value, r.algorithm.value, f"{r.mean_pairs:.2f}",
                       f"{r.mean_elapsed * 1e3:.3f}"] for r in records]))
        print(f"\nwrote {csv_path} and {json_path}")
    return EXIT_OK


def _global_flags(parser, suppress=False):
    # subparsers must not overwrite values given before the subcommand
    parser.add_argument("--format", choices=["table", "json"],
                        default=argparse.SUPPRESS if suppress else "table",
                        help="output format (default: table)")
    parser.add_argument("--stats", action="store_true",
                        default=argparse.SUPPRESS if suppress else False,
                        help="include pairs evaluated and search time")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harmonic-periods",
        description="Assign optimal integer harmonic periods to real-time task sets.",
    )
    _global_flags(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help):
        p = sub.add_parser(name, help=help)
        # also accept the global flags after the subcommand
        _global_flags(p, suppress=True)
        p.set_defaults(func=func)
        return p

    p = command("harmonize", cmd_harmonize, "find an optimal harmonic period assignment")
    p.add_argument("input", help="task-set file (.csv or .json)")
    p.add_argument("--metric", choices=[m.value for m in Metric], default="tsu")
    p.add_argument("--algorithm", choices=[a.value for a in Algorithm], default="dphs")

    p = command("check", cmd_check, "rate-monotonic response-time analysis")
    p.add_argument("input", help="task-set file (.csv or .json)")
    p.add_argument("--periods", help="comma-separated periods in ascending-bound task order "
                                     "(default: the task set's own periods)")

    p = command("compare", cmd_compare, "brute force vs DPHS for all four metrics")
    p.add_argument("input", help="task-set file (.csv or .json)")

    p = command("experiment", cmd_experiment, "random-workload sweep, written as CSV + JSON")
    p.add_argument("--sweep", choices=[s.value for s in Sweep], required=True)
    p.add_argument("--points", required=True, help="comma-separated sweep values")
    p.add_argument("--t1", type=int, default=15)
    p.add_argument("--tn", type=int, default=5000)
    p.add_argument("--n", type=int, default=8, help="task-set cardinality")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--metric", choices=[m.value for m in Metric], default="tpe")
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--no-timing", dest="timing", action="store_false",
                   help="write 0 for mean_elapsed_ns so the CSV is byte-reproducible")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (MismatchError, ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValidationError, OSError, HarmonicPeriodsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
