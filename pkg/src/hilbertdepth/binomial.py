"""Generalized binomial coefficients over the integers.

Every quantity in this package is an exact integer built from the
generalized binomial coefficient

    C(m, r) = m(m-1)...(m-r+1) / r!   for r >= 0 and any integer m,
    C(m, r) = 0                       for r < 0.

The upper argument may be negative, in which case the value is signed:
C(-3, 2) = (-3)(-4)/2 = 6, C(-1, 1) = -1.  Python integers are arbitrary
precision, so no magnitude guard is needed.
"""
from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=None)
def binomial(m: int, r: int) -> int:
    """Return the generalized binomial coefficient C(m, r).

    Evaluated as the falling-factorial product with an exact division at
    every step: after step i the partial value equals C(m, i), which is an
    integer, so ``//`` never truncates.  Floating point is never involved.
    """
    if r < 0:
        return 0
    result = 1
    for i in range(1, r + 1):
        result = result * (m - i + 1) // i
    return result
