"""Tasks, task sets and harmonic period assignments."""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Sequence

from .errors import EmptyTaskSet, InvalidTask, LengthMismatch, NotHarmonic

if TYPE_CHECKING:
    from .metrics import Metric


@dataclass(frozen=True)
class Task:
    """One periodic task with an implicit deadline.

    Attributes:
        name: Label used in reports and to recover the input order.
        wcet: Worst-case execution time.
        period_bound: Largest period the application accepts.
    """

    name: str
    wcet: float
    period_bound: float

    def __post_init__(self):
        if not self.wcet > 0:
            raise InvalidTask(f"task {self.name!r}: wcet must be positive, got {self.wcet}")
        if not self.period_bound > 0:
            raise InvalidTask(
                f"task {self.name!r}: period must be positive, got {self.period_bound}"
            )


@dataclass(frozen=True)
class TaskSet:
    """Tasks sorted by non-decreasing period bound (stable on ties).

    ``effective_bounds`` holds the floored integer bounds that every search
    and every cost evaluation works with. Build instances with
    :func:`build_taskset` rather than calling the constructor directly.
    """

    tasks: tuple[Task, ...]
    effective_bounds: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        if not self.tasks:
            raise EmptyTaskSet("task set contains no tasks")
        tasks = tuple(self.tasks)
        if any(a.period_bound > b.period_bound for a, b in zip(tasks, tasks[1:])):
            raise InvalidTask("tasks must be sorted by non-decreasing period bound")
        bounds = tuple(math.floor(t.period_bound) for t in tasks)
        if bounds[0] < 1:
            raise InvalidTask(f"task {tasks[0].name!r}: period bound must be >= 1")
        object.__setattr__(self, "tasks", tasks)
        object.__setattr__(self, "effective_bounds", bounds)

    def __len__(self):
        return len(self.tasks)

    def __iter__(self):
        return iter(self.tasks)

    def __getitem__(self, i):
        return self.tasks[i]

    @property
    def wcets(self) -> tuple[float, ...]:
        return tuple(t.wcet for t in self.tasks)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(t.name for t in self.tasks)

    @property
    def utilization(self) -> float:
        """Utilization under the effective (floored) bounds."""
        return sum(c / t for c, t in zip(self.wcets, self.effective_bounds))

    def to_records(self) -> list[dict]:
        return [{"name": t.name, "wcet": t.wcet, "period": t.period_bound} for t in self.tasks]


def build_taskset(raw_tasks: Iterable) -> TaskSet:
    """Validate ``(name, wcet, period_bound)`` triples and sort them.

    Accepts :class:`Task` instances as well. A task whose wcet exceeds its
    bound is kept (with a warning); the searches simply report it infeasible.
    """
    tasks = []
    for raw in raw_tasks:
        if isinstance(raw, Task):
            task = raw
        else:
            try:
                name, wcet, period = raw
                task = Task(str(name), float(wcet), float(period))
            except (TypeError, ValueError) as exc:
                if isinstance(exc, InvalidTask):
                    raise
                raise InvalidTask(f"malformed task {raw!r}: {exc}") from exc
        if not math.isfinite(task.wcet) or not math.isfinite(task.period_bound):
            raise InvalidTask(f"task {task.name!r}: wcet and period must be finite")
        if task.period_bound < 1:
            raise InvalidTask(
                f"task {task.name!r}: period bound must be >= 1, got {task.period_bound}"
            )
        if task.wcet > task.period_bound:
            warnings.warn(
                f"task {task.name!r}: wcet {task.wcet} exceeds period {task.period_bound}",
                stacklevel=2,
            )
        tasks.append(task)
    if not tasks:
        raise EmptyTaskSet("task set contains no tasks")
    # sorted() is stable, so equal bounds keep their input order
    return TaskSet(tuple(sorted(tasks, key=lambda t: t.period_bound)))


class Algorithm(str, enum.Enum):
    BRUTE_FORCE = "brute-force"
    DPHS = "dphs"


@dataclass(frozen=True)
class SearchStats:
    pairs_evaluated: int
    elapsed: float  # seconds
    algorithm: Algorithm


@dataclass(frozen=True)
class HarmonicAssignment:
    """Harmonic periods ``multiplier * base**exponents[i]`` and their cost.

    For ``base == 1`` every exponent is stored as 0.
    """

    multiplier: int
    base: int
    exponents: tuple[int, ...]
    periods: tuple[int, ...]
    cost: float
    metric: Metric

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(x) for x in self.exponents))
        object.__setattr__(self, "periods", tuple(int(p) for p in self.periods))
        if self.multiplier < 1 or self.base < 1:
            raise ValueError("multiplier and base must be positive")
        if self.base == 1 and any(self.exponents):
            raise ValueError("base 1 assignments must have all exponents 0")
        expected = tuple(self.multiplier * self.base**x for x in self.exponents)
        if expected != self.periods:
            raise ValueError(f"periods {self.periods} do not match m*b**x = {expected}")
        check_divisibility_chain(self.periods)

    def __len__(self):
        return len(self.periods)

    def slack(self, taskset: TaskSet) -> tuple[int, ...]:
        """Per-task distance between the bound and the assigned period."""
        _check_lengths(taskset, self.periods)
        return tuple(t - p for t, p in zip(taskset.effective_bounds, self.periods))


def check_divisibility_chain(periods: Sequence[int]) -> None:
    """Raise :class:`NotHarmonic` unless each period divides every later one."""
    for a, b in zip(periods, periods[1:]):
        # divisibility is transitive, so adjacent pairs suffice
        if a > b or b % a:
            raise NotHarmonic(f"periods {tuple(periods)} are not a divisibility chain")


def is_harmonic(periods: Sequence[int]) -> bool:
    ordered = sorted(periods)
    return all(b % a == 0 for a, b in zip(ordered, ordered[1:]))


def _check_lengths(taskset, periods):
    if len(periods) != len(taskset):
        raise LengthMismatch(f"{len(periods)} periods for {len(taskset)} tasks")


def priority_order_preserved(original: TaskSet, assignment) -> bool:
    """True if RM priorities under the new periods match the original ones.

    Equal new periods are ordered by the original bounds (then input order),
    which is how ties are broken everywhere in this package.
    """
    periods = getattr(assignment, "periods", assignment)
    _check_lengths(original, periods)
    bounds = [t.period_bound for t in original.tasks]
    by_original = sorted(range(len(bounds)), key=lambda i: (bounds[i], i))
    by_new = sorted(range(len(bounds)), key=lambda i: (periods[i], bounds[i], i))
    return by_original == by_new
