import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from harmonic_periods import build_taskset, gap_taskset, hartstone_taskset  # noqa: E402

# GAP benchmark, ascending-bound order
GAP_TSU = (25, 25, 25, 50, 50, 50, 50, 50, 100, 200, 200, 200, 200, 200, 200, 800, 800)
GAP_MPE = (20, 20, 40, 40, 40, 40, 80, 80, 80, 160, 160, 160, 160, 160, 160, 640, 640)
GAP_FOE = (8, 8, 40, 40, 40, 40, 40, 40, 40, 200, 200, 200, 200, 200, 200, 1000, 1000)


@pytest.fixture(scope="session")
def gap():
    return gap_taskset()


@pytest.fixture(scope="session")
def hartstone():
    return hartstone_taskset()


@pytest.fixture
def small():
    return build_taskset([("a", 2, 12), ("b", 3, 35), ("c", 2, 112)])


# (criterion, passed, detail) rows printed after the run
ACCEPTANCE = []


def record_criterion(name, passed, detail=""):
    ACCEPTANCE.append((name, bool(passed), detail))
    print(f"[{'PASS' if passed else 'FAIL'}] {name}: {detail}")
    return passed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in ACCEPTANCE:
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {name}: {detail}")
