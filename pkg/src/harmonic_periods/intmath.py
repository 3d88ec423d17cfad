"""Exact integer logarithm and integer root.

Floating point ``log``/``pow`` misplace exact powers (``math.log(125, 5)`` is
``3.0000000000000004``), so both functions only use floats for a first guess
and then correct the guess with integer multiplication.
"""

import math


def floor_log(base: int, value: int) -> int:
    """Largest ``x`` with ``base**x <= value``.

    >>> floor_log(2, 22)
    4
    >>> floor_log(5, 125)
    3
    """
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if value < 1:
        raise ValueError(f"value must be >= 1, got {value}")
    if value < base:
        return 0
    if base == 2:
        return value.bit_length() - 1
    x = int(math.log(value) / math.log(base))
    p = base**x
    while p > value:
        p //= base
        x -= 1
    while p * base <= value:
        p *= base
        x += 1
    return x


def integer_root(degree: int, value: int) -> int:
    """Largest ``r`` with ``r**degree <= value``.

    >>> integer_root(2, 7)
    2
    >>> integer_root(4, 22)
    2
    """
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    if value < 1:
        raise ValueError(f"value must be >= 1, got {value}")
    if degree == 1:
        return value
    if degree == 2:
        return math.isqrt(value)
    if value.bit_length() <= degree:
        # 2**degree > value, so the root is 1
        return 1
    if value.bit_length() > 1000:
        return _newton_root(degree, value)
    r = max(int(round(value ** (1.0 / degree))), 1)
    while r**degree > value:
        r -= 1
    while (r + 1) ** degree <= value:
        r += 1
    return r


def _newton_root(degree, value):
    # start above the root; the integer Newton step then decreases monotonically
    r = 1 << -(-value.bit_length() // degree)
    while True:
        s = ((degree - 1) * r + value // r ** (degree - 1)) // degree
        if s >= r:
            return r
        r = s
