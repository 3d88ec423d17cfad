"""Optimal harmonic period search.

Every candidate period vector has the form ``T'_i = m * b**x_i`` where, for a
given multiplier ``m`` and base ``b``, ``x_i`` is the largest exponent keeping
``T'_i`` within the task's bound. The multiplier ranges over ``1..T_1`` and
the base over ``1..T_n // m`` (``T_1``/``T_n`` being the smallest/largest
effective bound).

:func:`brute_force_search` costs every ``(m, b)`` pair. :func:`dphs_search`
(discrete piecewise harmonic search) only costs, for each multiplier, the
bases right before some exponent drops; for a fixed exponent vector each
metric improves as the base grows, so those bases hold all the local optima.
Both return the same optimal cost.

Integer arithmetic is exact throughout; floats only appear in cost values,
and near-equal float costs are re-ranked with exact fractions so ties always
resolve to the first candidate in scan order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

import numpy as np

from .errors import MultiplierOutOfRange
from .intmath import floor_log, integer_root
from .metrics import Metric, batch_costs, batch_feasible, evaluate_exact
from .model import Algorithm, HarmonicAssignment, SearchStats, TaskSet

# rows of the (candidate, task) matrices built per batch
CHUNK_ROWS = 1 << 15

_TIE_RTOL = 1e-9


@dataclass(frozen=True)
class SearchResult:
    assignment: Optional[HarmonicAssignment]
    stats: SearchStats

    @property
    def feasible(self) -> bool:
        return self.assignment is not None

    @property
    def cost(self) -> Optional[float]:
        return None if self.assignment is None else self.assignment.cost


def _check_multiplier(taskset, m):
    if not 1 <= m <= taskset.effective_bounds[0]:
        raise MultiplierOutOfRange(
            f"multiplier {m} outside 1..{taskset.effective_bounds[0]}"
        )


def exponent_vector(taskset: TaskSet, m: int, b: int) -> tuple[int, ...]:
    """Largest exponents with ``m * b**x_i <= bound_i`` (all 0 when ``b == 1``)."""
    _check_multiplier(taskset, m)
    if b < 1:
        raise ValueError(f"base must be >= 1, got {b}")
    if b == 1:
        return (0,) * len(taskset)
    # m * b**x <= T  <=>  b**x <= T // m  for positive integers
    return tuple(floor_log(b, t // m) for t in taskset.effective_bounds)


def closest_harmonic_series(taskset: TaskSet, m: int, b: int) -> list[int]:
    """Harmonic periods closest to (and not above) each bound for this ``(m, b)``."""
    return [m * b**x for x in exponent_vector(taskset, m, b)]


def local_minima_bases(taskset: TaskSet, m: int) -> list[int]:
    """Bases worth costing for multiplier ``m``, ascending.

    For each task with ``q = bound // m`` and each exponent ``x`` in
    ``1..floor(log2 q)``, the largest base still supporting ``x`` is the
    integer ``x``-th root of ``q``. Base 1 covers the all-zero exponents.
    """
    _check_multiplier(taskset, m)
    return list(_local_minima(taskset.effective_bounds, m))


@lru_cache(maxsize=4096)
def _local_minima(bounds, m):
    bases = {1}
    for q in {t // m for t in bounds}:
        for x in range(1, q.bit_length()):
            bases.add(integer_root(x, q))
    return tuple(sorted(bases))


def _candidates(bounds: np.ndarray, ms: np.ndarray, bs: np.ndarray):
    """Exponent and period matrices for a batch of ``(m, b)`` pairs."""
    q = bounds[None, :] // ms[:, None]
    b = bs[:, None]
    power = np.ones_like(q)
    exps = np.zeros_like(q)
    active = np.broadcast_to(b > 1, q.shape)
    while True:
        grown = power * b
        step = active & (grown <= q)
        if not step.any():
            break
        power = np.where(step, grown, power)
        exps += step
        active = step
    return exps, ms[:, None] * power


def _int_dtype(taskset):
    # power * base <= bound_i * bound_n must fit; fall back to Python ints
    top = taskset.effective_bounds[-1]
    return np.int64 if top * top < 2**62 else object


def _scan(taskset: TaskSet, metric: Metric, batches: Iterator):
    """Best feasible candidate over all batches, plus the number costed."""
    dtype = _int_dtype(taskset)
    bounds = np.asarray(taskset.effective_bounds, dtype=dtype)
    best = None  # (exact cost, m, b, exponents, periods)
    pairs = 0
    for ms, bs in batches:
        ms = np.asarray(ms, dtype=dtype)
        bs = np.asarray(bs, dtype=dtype)
        pairs += len(ms)
        exps, periods = _candidates(bounds, ms, bs)
        costs = batch_costs(metric, taskset, periods)
        costs[~batch_feasible(taskset, periods)] = np.inf
        lo = costs.min()
        if not np.isfinite(lo):
            continue
        # float sums can differ by an ulp for equal exact costs; re-rank exactly
        near = np.flatnonzero(costs <= lo + _TIE_RTOL * max(1.0, abs(lo)))
        for row in near:
            cand = tuple(int(p) for p in periods[row])
            exact = evaluate_exact(metric, taskset, cand)
            if best is None or exact < best[0]:
                best = (exact, int(ms[row]), int(bs[row]), tuple(int(x) for x in exps[row]), cand)
    return best, pairs


def _search(taskset, metric, algorithm, batches):
    metric = Metric.parse(metric)
    start = time.perf_counter()
    best, pairs = _scan(taskset, metric, batches)
    elapsed = time.perf_counter() - start
    assignment = None
    if best is not None:
        exact, m, b, exps, periods = best
        assignment = HarmonicAssignment(m, b, exps, periods, float(exact), metric)
    return SearchResult(assignment, SearchStats(pairs, elapsed, algorithm))


def _brute_force_batches(taskset):
    t1, tn = taskset.effective_bounds[0], taskset.effective_bounds[-1]
    ms, bs, rows = [], [], 0
    for m in range(1, t1 + 1):
        count = tn // m
        ms.append(np.full(count, m, dtype=np.int64))
        bs.append(np.arange(1, count + 1, dtype=np.int64))
        rows += count
        if rows >= CHUNK_ROWS:
            yield np.concatenate(ms), np.concatenate(bs)
            ms, bs, rows = [], [], 0
    if rows:
        yield np.concatenate(ms), np.concatenate(bs)


def _dphs_batches(taskset):
    ms, bs = [], []
    for m in range(1, taskset.effective_bounds[0] + 1):
        bases = _local_minima(taskset.effective_bounds, m)
        ms.extend([m] * len(bases))
        bs.extend(bases)
        if len(ms) >= CHUNK_ROWS:
            yield ms, bs
            ms, bs = [], []
    if ms:
        yield ms, bs


def brute_force_search(taskset: TaskSet, metric) -> SearchResult:
    """Cost every ``(m, b)`` with ``m <= T_1`` and ``b <= T_n // m``.

    Scan order is ``m`` ascending, then ``b`` ascending; the first candidate
    reaching the optimal cost is returned. ``assignment`` is ``None`` when no
    candidate satisfies ``wcet <= period`` for every task.
    """
    return _search(taskset, metric, Algorithm.BRUTE_FORCE, _brute_force_batches(taskset))


def dphs_search(taskset: TaskSet, metric) -> SearchResult:
    """Same optimum as :func:`brute_force_search`, costing only local-minima bases."""
    return _search(taskset, metric, Algorithm.DPHS, _dphs_batches(taskset))


def harmonize(taskset: TaskSet, metric, algorithm=Algorithm.DPHS) -> SearchResult:
    """Run the chosen search algorithm (DPHS by default)."""
    algorithm = Algorithm(algorithm)
    if algorithm is Algorithm.BRUTE_FORCE:
        return brute_force_search(taskset, metric)
    return dphs_search(taskset, metric)


def brute_force_pair_count(taskset: TaskSet) -> int:
    """Closed form for the brute-force count: sum of ``T_n // m`` over ``m <= T_1``."""
    t1, tn = taskset.effective_bounds[0], taskset.effective_bounds[-1]
    return sum(tn // m for m in range(1, t1 + 1))


def dphs_pair_count(taskset: TaskSet) -> int:
    t1 = taskset.effective_bounds[0]
    return sum(len(_local_minima(taskset.effective_bounds, m)) for m in range(1, t1 + 1))
