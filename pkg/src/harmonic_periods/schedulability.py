"""Rate-monotonic schedulability with implicit deadlines."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ConvergenceError, IndexOutOfRange, LengthMismatch
from .model import TaskSet, check_divisibility_chain

MAX_ITERATIONS = 10**6

# relative slack allowed at the U == 1 boundary of the harmonic bound
UTILIZATION_RTOL = 1e-9


@dataclass(frozen=True)
class ResponseTimeReport:
    """Per-task worst-case response times; ``None`` marks a task that missed."""

    per_task_response: tuple[Optional[float], ...]
    schedulable: bool


def _check_lengths(taskset, periods):
    if len(periods) != len(taskset):
        raise LengthMismatch(f"{len(periods)} periods for {len(taskset)} tasks")


def rm_priority_order(taskset: TaskSet, periods: Sequence[int]) -> list[int]:
    """Task indices from highest to lowest RM priority.

    Shorter period wins; equal periods fall back to task-set order, which is
    the original-bound order with input order as the last tie-break.
    """
    _check_lengths(taskset, periods)
    return sorted(range(len(periods)), key=lambda i: (periods[i], i))


def response_time(taskset: TaskSet, index: int, periods: Sequence[int]) -> Optional[float]:
    """Worst-case response time of task ``index``, or ``None`` if it exceeds the period.

    Iterates ``a = C_i + sum(ceil(a / T_j) * C_j)`` over the higher-priority
    tasks, starting from the sum of their wcets plus ``C_i``.
    """
    _check_lengths(taskset, periods)
    if not 0 <= index < len(taskset):
        raise IndexOutOfRange(f"task index {index} outside 0..{len(taskset) - 1}")
    wcets = taskset.wcets
    own = (periods[index], index)
    higher = [(periods[j], wcets[j]) for j in range(len(periods)) if (periods[j], j) < own]
    c = wcets[index]
    deadline = periods[index]
    a = c + sum(cj for _, cj in higher)
    for _ in range(MAX_ITERATIONS):
        if a > deadline:
            return None
        nxt = c + sum(math.ceil(a / tj) * cj for tj, cj in higher)
        if nxt == a:
            return a
        a = nxt
    raise ConvergenceError(f"response time of task {index} did not converge")


def is_rm_schedulable(taskset: TaskSet, periods: Optional[Sequence[int]] = None) -> ResponseTimeReport:
    """Response-time test for every task; defaults to the effective bounds."""
    if periods is None:
        periods = taskset.effective_bounds
    _check_lengths(taskset, periods)
    responses = tuple(response_time(taskset, i, periods) for i in range(len(taskset)))
    return ResponseTimeReport(responses, all(r is not None for r in responses))


def total_utilization(taskset: TaskSet, periods: Optional[Sequence[int]] = None) -> float:
    if periods is None:
        periods = taskset.effective_bounds
    _check_lengths(taskset, periods)
    return math.fsum(c / p for c, p in zip(taskset.wcets, periods))


def harmonic_utilization_test(taskset: TaskSet, assignment) -> bool:
    """Exact RM test for harmonic periods: total utilization at most 1.

    Raises :class:`~harmonic_periods.errors.NotHarmonic` if the periods do not
    form a divisibility chain in task order.
    """
    periods = getattr(assignment, "periods", assignment)
    _check_lengths(taskset, periods)
    check_divisibility_chain(periods)
    return total_utilization(taskset, periods) <= 1.0 + UTILIZATION_RTOL
