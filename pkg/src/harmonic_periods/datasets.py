"""Bundled task sets from published case studies."""

from importlib import resources

from .io import parse_csv
from .model import TaskSet


def _load(filename) -> TaskSet:
    return parse_csv(resources.files(__package__).joinpath("data", filename).read_text("utf-8"))


def gap_taskset() -> TaskSet:
    """Generic Avionics Platform: 17 tasks, periods 25..1000 ms."""
    return _load("gap.csv")


def hartstone_taskset() -> TaskSet:
    """PN Hartstone: 5 tasks with fractional periods (floored to 32..333)."""
    return _load("hartstone.csv")


def data_path(filename):
    """Filesystem path of a bundled data file, for the CLI and demos."""
    return resources.files(__package__).joinpath("data", filename)
