"""Optimal integer harmonic periods for rate-monotonic task sets."""

from .datasets import gap_taskset, hartstone_taskset
from .errors import (
    ConvergenceError,
    EmptyTaskSet,
    HarmonicPeriodsError,
    IndexOutOfRange,
    InvalidRange,
    InvalidTask,
    LengthMismatch,
    MismatchError,
    MultiplierOutOfRange,
    NotHarmonic,
    ParseError,
    ValidationError,
)
from .intmath import floor_log, integer_root
from .io import parse_taskset_file
from .metrics import Metric, evaluate, is_feasible
from .model import (
    Algorithm,
    HarmonicAssignment,
    SearchStats,
    Task,
    TaskSet,
    build_taskset,
    priority_order_preserved,
)
from .schedulability import (
    ResponseTimeReport,
    harmonic_utilization_test,
    is_rm_schedulable,
    response_time,
)
from .search import (
    SearchResult,
    brute_force_search,
    closest_harmonic_series,
    dphs_search,
    local_minima_bases,
    harmonize,
)

__version__ = "0.1.0"
