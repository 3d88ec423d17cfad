import pytest
from hypothesis import given, strategies as st

from harmonic_periods.intmath import floor_log, integer_root
from oracles import bisect_root, loop_floor_log


@pytest.mark.parametrize("base, value, expected", [
    (2, 22, 4),
    (2, 1, 0),
    (7, 1, 0),
    (5, 125, 3),
    (5, 124, 2),
    (10, 1000, 3),
    (3, 2, 0),
])
def test_floor_log(base, value, expected):
    assert floor_log(base, value) == expected
    assert loop_floor_log(base, value) == expected


@pytest.mark.parametrize("degree, value, expected", [
    (1, 22, 22),
    (2, 7, 2),
    (4, 22, 2),
    (3, 1000, 10),
    (3, 999, 9),
    (2, 1, 1),
    (5, 31, 1),
    (5, 32, 2),
])
def test_integer_root(degree, value, expected):
    assert integer_root(degree, value) == expected
    assert bisect_root(degree, value) == expected


@pytest.mark.parametrize("args", [(1, 5), (0, 5), (2, 0)])
def test_floor_log_rejects_bad_domain(args):
    with pytest.raises(ValueError):
        floor_log(*args)


@pytest.mark.parametrize("args", [(0, 5), (2, 0)])
def test_integer_root_rejects_bad_domain(args):
    with pytest.raises(ValueError):
        integer_root(*args)


@given(st.integers(2, 10**4), st.integers(1, 10**18))
def test_floor_log_brackets(base, value):
    x = floor_log(base, value)
    assert base**x <= value < base ** (x + 1)


@given(st.integers(2, 60), st.integers(0, 40), st.sampled_from([-1, 0, 1]))
def test_floor_log_exact_powers(base, x, delta):
    value = base**x + delta
    if value >= 1:
        assert floor_log(base, value) == loop_floor_log(base, value)


@given(st.integers(1, 64), st.integers(1, 10**30))
def test_integer_root_brackets(degree, value):
    r = integer_root(degree, value)
    assert r**degree <= value < (r + 1) ** degree


@given(st.integers(2, 12), st.integers(1, 10**6), st.sampled_from([-1, 0, 1]))
def test_integer_root_exact_powers(degree, r, delta):
    value = r**degree + delta
    if value >= 1:
        assert integer_root(degree, value) == bisect_root(degree, value)


def test_huge_values_use_exact_path():
    v = 3**2000
    assert integer_root(2000, v) == 3
    assert integer_root(2000, v - 1) == 2
    assert floor_log(3, v) == 2000
    assert floor_log(3, v - 1) == 1999
