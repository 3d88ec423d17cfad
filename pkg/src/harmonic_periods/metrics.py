"""Harmonization cost functions.

All four metrics are minimized and measured against the floored integer
bounds of the task set:

* TPE: sum of (T - T') / T
* TSU: sum of C / T'
* FOE: sum of (T - T')
* MPE: max of (T - T') / T

Costs are reported as plain floats in natural units (fractions, not
percentages). :func:`evaluate_exact` gives the same quantity as a
:class:`~fractions.Fraction`; searches use it to settle near-ties so that
equal costs compare equal regardless of summation order.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import LengthMismatch
from .model import TaskSet


class Metric(str, enum.Enum):
    TPE = "tpe"
    TSU = "tsu"
    FOE = "foe"
    MPE = "mpe"

    @classmethod
    def parse(cls, value) -> "Metric":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(
                f"unknown metric {value!r}; expected one of {[m.value for m in cls]}"
            ) from None

    @property
    def is_percentage(self) -> bool:
        return self in (Metric.TPE, Metric.MPE)


def _check(taskset, periods):
    if len(periods) != len(taskset):
        raise LengthMismatch(f"{len(periods)} periods for {len(taskset)} tasks")
    if any(p < 1 for p in periods):
        raise ValueError(f"periods must be >= 1, got {tuple(periods)}")


def evaluate_exact(metric, taskset: TaskSet, periods: Sequence[int]) -> Fraction:
    metric = Metric.parse(metric)
    _check(taskset, periods)
    bounds = taskset.effective_bounds
    if metric is Metric.TPE:
        return sum((Fraction(t - p, t) for t, p in zip(bounds, periods)), Fraction(0))
    if metric is Metric.TSU:
        return sum((Fraction(c) / p for c, p in zip(taskset.wcets, periods)), Fraction(0))
    if metric is Metric.FOE:
        return Fraction(sum(t - p for t, p in zip(bounds, periods)))
    return max(Fraction(t - p, t) for t, p in zip(bounds, periods))


def evaluate(metric, taskset: TaskSet, periods: Sequence[int]) -> float:
    """Cost of ``periods`` under ``metric``; lower is better."""
    return float(evaluate_exact(metric, taskset, periods))


def is_feasible(taskset: TaskSet, periods: Sequence[int]) -> bool:
    """True iff every task fits in its period (``wcet <= period``)."""
    if len(periods) != len(taskset):
        raise LengthMismatch(f"{len(periods)} periods for {len(taskset)} tasks")
    return all(c <= p for c, p in zip(taskset.wcets, periods))


def batch_costs(metric: Metric, taskset: TaskSet, periods: np.ndarray) -> np.ndarray:
    """Float costs for every row of a ``(candidates, tasks)`` period matrix."""
    bounds = np.asarray(taskset.effective_bounds, dtype=np.float64)
    periods = periods.astype(np.float64)
    if metric is Metric.TPE:
        return ((bounds - periods) / bounds).sum(axis=1)
    if metric is Metric.TSU:
        return (np.asarray(taskset.wcets, dtype=np.float64) / periods).sum(axis=1)
    if metric is Metric.FOE:
        return (bounds - periods).sum(axis=1)
    return ((bounds - periods) / bounds).max(axis=1)


def batch_feasible(taskset: TaskSet, periods: np.ndarray) -> np.ndarray:
    return (np.asarray(taskset.wcets, dtype=np.float64) <= periods).all(axis=1)
