"""Random-workload comparison of brute force and DPHS.

Each sweep varies one parameter of the random task sets (largest period,
smallest period, cardinality) and records the mean number of ``(m, b)``
pairs each algorithm costs plus the mean search time.

Periods are drawn uniformly from ``[t1, tn]``. In the three controlled
sweeps the smallest draw is replaced by ``t1`` and the largest by ``tn`` so
the multiplier and base ranges are exactly the ones under study; the
``random-runtime`` sweep keeps raw draws. All wcets are 1, which keeps
feasibility from affecting the counts.
"""

from __future__ import annotations

import csv
import enum
import json
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from .errors import InvalidRange
from .metrics import Metric
from .model import Algorithm, TaskSet, build_taskset
from .search import brute_force_search, dphs_search

GENERATOR_ID = "numpy.random.PCG64 via SeedSequence.spawn (one child per sweep point)"
CSV_HEADER = ("sweep_value", "algorithm", "mean_pairs", "mean_elapsed_ns")


class Sweep(str, enum.Enum):
    VARY_TN = "vary-tn"
    VARY_T1 = "vary-t1"
    VARY_CARDINALITY = "vary-n"
    RANDOM_RUNTIME = "random-runtime"


@dataclass(frozen=True)
class ExperimentConfig:
    sweep: Sweep
    sweep_points: tuple[int, ...]
    trials: int = 1000
    cardinality: int = 8
    t1: int = 15
    tn: int = 5000
    seed: int = 0
    metric: Metric = Metric.TPE
    timing: bool = True

    def __post_init__(self):
        object.__setattr__(self, "sweep", Sweep(self.sweep))
        object.__setattr__(self, "metric", Metric.parse(self.metric))
        object.__setattr__(self, "sweep_points", tuple(int(p) for p in self.sweep_points))
        if self.trials < 1:
            raise InvalidRange(f"trials must be >= 1, got {self.trials}")
        if self.cardinality < 1:
            raise InvalidRange(f"cardinality must be >= 1, got {self.cardinality}")
        if not 0 <= self.seed < 2**64:
            raise InvalidRange("seed must be a 64-bit unsigned integer")
        if not self.sweep_points:
            raise InvalidRange("at least one sweep point is required")
        for point in self.sweep_points:
            t1, tn, n = self.point_params(point)
            if n < 1:
                raise InvalidRange(f"cardinality must be >= 1, got {n}")
            if not 1 <= t1 <= tn:
                raise InvalidRange(f"need 1 <= t1 <= tn, got t1={t1}, tn={tn}")

    def point_params(self, point: int) -> tuple[int, int, int]:
        """``(t1, tn, n)`` used at one sweep point."""
        if self.sweep is Sweep.VARY_TN:
            return self.t1, point, self.cardinality
        if self.sweep is Sweep.VARY_T1:
            return point, self.tn, self.cardinality
        return self.t1, self.tn, point

    def to_dict(self) -> dict:
        d = asdict(self)
        d["sweep"] = self.sweep.value
        d["metric"] = self.metric.value
        d["sweep_points"] = list(self.sweep_points)
        return d


@dataclass(frozen=True)
class ExperimentRecord:
    sweep_value: int
    algorithm: Algorithm
    mean_pairs: float
    mean_elapsed: float  # seconds


def generate_taskset(n: int, t1: int, tn: int, rng: np.random.Generator,
                     anchor_min: bool = True, anchor_max: bool = False) -> TaskSet:
    """``n`` unit-wcet tasks with integer periods drawn uniformly from ``[t1, tn]``."""
    if t1 > tn:
        raise InvalidRange(f"t1={t1} exceeds tn={tn}")
    if n < 1 or t1 < 1:
        raise InvalidRange(f"need n >= 1 and t1 >= 1, got n={n}, t1={t1}")
    periods = np.sort(rng.integers(t1, tn, size=n, endpoint=True))
    if anchor_min:
        periods[0] = t1
    if anchor_max and n > 1:
        periods[-1] = tn
    return build_taskset((f"t{i}", 1, int(p)) for i, p in enumerate(periods))


def run_experiment(config: ExperimentConfig) -> list[ExperimentRecord]:
    anchored = config.sweep is not Sweep.RANDOM_RUNTIME
    children = np.random.SeedSequence(config.seed).spawn(len(config.sweep_points))
    records = []
    for point, child in zip(config.sweep_points, children):
        rng = np.random.Generator(np.random.PCG64(child))
        t1, tn, n = config.point_params(point)
        totals = {Algorithm.BRUTE_FORCE: [0, 0.0], Algorithm.DPHS: [0, 0.0]}
        for _ in range(config.trials):
            ts = generate_taskset(n, t1, tn, rng, anchor_min=anchored, anchor_max=anchored)
            for search in (brute_force_search, dphs_search):
                stats = search(ts, config.metric).stats
                totals[stats.algorithm][0] += stats.pairs_evaluated
                totals[stats.algorithm][1] += stats.elapsed
        for algorithm, (pairs, elapsed) in totals.items():
            mean_elapsed = elapsed / config.trials if config.timing else 0.0
            records.append(ExperimentRecord(point, algorithm, pairs / config.trials, mean_elapsed))
    return records


def write_results(records, config: ExperimentConfig, out_dir,
                  stem: Optional[str] = None) -> tuple[Path, Path]:
    """Write ``<stem>.csv`` and its ``<stem>.json`` metadata sidecar into ``out_dir``."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = stem or f"experiment_{config.sweep.value}"
    csv_path = out_dir / f"{stem}.csv"
    with open(csv_path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in records:
            writer.writerow([r.sweep_value, r.algorithm.value, repr(float(r.mean_pairs)),
                             int(round(r.mean_elapsed * 1e9))])
    meta = {
        "config": config.to_dict(),
        "seed": config.seed,
        "generator": GENERATOR_ID,
        "numpy_version": np.__version__,
        "columns": list(CSV_HEADER),
    }
    json_path = out_dir / f"{stem}.json"
    json_path.write_text(json.dumps(meta, indent=2) + "\n", encoding="utf-8")
    return csv_path, json_path


def read_results(path) -> list[ExperimentRecord]:
    with open(path, newline="", encoding="utf-8") as f:
        return [ExperimentRecord(int(row["sweep_value"]), Algorithm(row["algorithm"]),
                                 float(row["mean_pairs"]), int(row["mean_elapsed_ns"]) / 1e9)
                for row in csv.DictReader(f)]
