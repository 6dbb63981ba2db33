"""Hilbert function and Hilbert series of squarefree Veronese ideals.

For n >= d >= 1 the squarefree Veronese ideal of K[x_1, ..., x_n] is
generated by all products of d distinct variables.  Its degree-k graded
piece has dimension equal to the number of degree-k monomials whose
support contains at least d variables.  This module computes that count
by four independent routes:

* a closed coefficient formula,
      a(n, d, k) = sum_{i=d-1}^{n-1} C(i, d-1) * C(n-i+k-2, k-d),
  obtained by expanding the closed-form Hilbert series;
* a dynamic program over two equivalent recurrences in (n, d, k);
* brute-force enumeration of exponent vectors;
* coefficient extraction from the trivariate rational generating function
      sum a(n, d, k) x^n y^d z^k = xyz(1-z) / ((1-x-xyz-z+xz)(1-z-x)).

The routes share nothing beyond the generalized binomial, so their
agreement is a meaningful cross-check, not a tautology.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .binomial import binomial
from .errors import InternalDisagreement, RangeError, TooLarge
from .series import ClosedSeries, ClosedTerm

#: Enumeration refuses to iterate more exponent vectors than this.
ENUMERATION_LIMIT = 10**7

#: Memory guard for generating-function tables.
GENFUNC_LIMIT = 10**6


@dataclass(frozen=True)
class VeroneseParams:
    """The pair (n, d) with n >= d >= 1 identifying the ideal."""

    n: int
    d: int

    def __post_init__(self) -> None:
        if not 1 <= self.d <= self.n:
            raise ValueError(
                f"need n >= d >= 1, got n={self.n}, d={self.d}"
            )


def hilbert_series_closed(params: VeroneseParams) -> ClosedSeries:
    """Closed-form Hilbert series as a sum of C(i, d-1) * T^d * (1-T)^(-e).

    The sum runs over i = d-1, ..., n-1 with pole order e = n - i + d - 1,
    so the series has exactly n - d + 1 terms and the pole orders run over
    {d, ..., n}, each exactly once.
    """
    n, d = params.n, params.d
    return ClosedSeries(
        terms=tuple(
            ClosedTerm(coeff=binomial(i, d - 1), t_power=d, pole_order=n - i + d - 1)
            for i in range(d - 1, n)
        )
    )


def hilbert_coefficient(params: VeroneseParams, k: int) -> int:
    """a(n, d, k) by the closed coefficient formula; 0 for k < d."""
    n, d = params.n, params.d
    return sum(
        binomial(i, d - 1) * binomial(n - i + k - 2, k - d) for i in range(d - 1, n)
    )


def _recurrence_value(n: int, d: int, k: int, form: int) -> int:
    """Evaluate a(n, d, k) bottom-up from one of the two recurrences.

    Base row: a(n, 1, k) = C(n+k-1, k) for k >= 1.  Boundary convention:
    a(n, d, k) = 0 whenever n < d or k < d.  For d >= 2 either

        form 2:  a(n,d,k) = a(n-1,d,k) + sum_{s=1}^{k-d+1} a(n-1,d-1,k-s)

    (split monomials by the multiplicity of the last variable), or

        form 3:  a(n,d,k) = a(n-1,d,k) + a(n-1,d-1,k-1)
                            + a(n,d,k-1) - a(n-1,d,k-1)

    which telescopes the inner sum of form 2.  The memo table is local to
    the call, so concurrent callers never share state.
    """
    table = [[[0] * (k + 1) for _ in range(d + 1)] for _ in range(n + 1)]
    for n_ in range(1, n + 1):
        for k_ in range(1, k + 1):
            table[n_][1][k_] = binomial(n_ + k_ - 1, k_)
    for d_ in range(2, d + 1):
        for n_ in range(d_, n + 1):
            row_prev = table[n_ - 1]
            row_cur = table[n_]
            for k_ in range(d_, k + 1):
                if form == 2:
                    acc = row_prev[d_][k_]
                    for s in range(1, k_ - d_ + 2):
                        acc += row_prev[d_ - 1][k_ - s]
                else:
                    acc = (
                        row_prev[d_][k_]
                        + row_prev[d_ - 1][k_ - 1]
                        + row_cur[d_][k_ - 1]
                        - row_prev[d_][k_ - 1]
                    )
                row_cur[d_][k_] = acc
    return table[n][d][k]


def hilbert_coefficient_recurrence(params: VeroneseParams, k: int) -> int:
    """a(n, d, k) by dynamic programming over both recurrence forms.

    Both forms are evaluated and must agree; a mismatch is an
    implementation bug, reported as InternalDisagreement.
    """
    if k < 0:
        raise RangeError(f"k must be >= 0, got {k}")
    if k < params.d:
        return 0
    via_sum = _recurrence_value(params.n, params.d, k, form=2)
    via_telescope = _recurrence_value(params.n, params.d, k, form=3)
    if via_sum != via_telescope:
        raise InternalDisagreement(
            f"recurrence forms disagree at (n={params.n}, d={params.d}, k={k}): "
            f"{via_sum} != {via_telescope}"
        )
    return via_sum


@lru_cache(maxsize=None)
def _support_histogram(n: int, k: int) -> tuple[int, ...]:
    """Histogram of support sizes over all exponent vectors of degree k.

    Entry j counts the compositions of k into n nonnegative parts with
    exactly j positive parts.  The compositions are walked in decreasing
    lexicographic order by an explicit odometer, no recursion involved.
    """
    hist = [0] * (n + 1)
    vec = [0] * n
    vec[0] = k
    while True:
        hist[n - vec.count(0)] += 1
        if vec[-1] == k:
            return tuple(hist)
        j = n - 2
        while vec[j] == 0:
            j -= 1
        carry = vec[-1]
        vec[-1] = 0
        vec[j] -= 1
        vec[j + 1] = carry + 1


def count_by_enumeration(params: VeroneseParams, k: int) -> int:
    """dim of the degree-k piece by enumerating all exponent vectors.

    Counts vectors (e_1, ..., e_n) with sum k and at least d positive
    entries.  Refuses when more than ENUMERATION_LIMIT vectors exist.
    """
    if k < 0:
        raise RangeError(f"k must be >= 0, got {k}")
    total = binomial(params.n + k - 1, k)
    if total > ENUMERATION_LIMIT:
        raise TooLarge(
            f"enumeration of {total} exponent vectors exceeds the "
            f"{ENUMERATION_LIMIT} limit"
        )
    return sum(_support_histogram(params.n, k)[params.d :])


def count_by_support(params: VeroneseParams, k: int) -> int:
    """dim of the degree-k piece, grouping monomials by support size.

    There are C(n, j) * C(k-1, j-1) monomials of degree k using exactly j
    distinct variables, so the count is the sum over j = d, ..., min(n, k).
    """
    n, d = params.n, params.d
    return sum(
        binomial(n, j) * binomial(k - 1, j - 1) for j in range(d, min(n, k) + 1)
    )


@dataclass(frozen=True)
class GenfuncTable:
    """Truncated power-series table of the trivariate generating function."""

    n_max: int
    d_max: int
    k_max: int
    entries: tuple[tuple[tuple[int, ...], ...], ...]

    def value(self, n: int, d: int, k: int) -> int:
        if not (0 <= n <= self.n_max and 0 <= d <= self.d_max and 0 <= k <= self.k_max):
            raise RangeError(
                f"entry ({n}, {d}, {k}) outside table bounds "
                f"({self.n_max}, {self.d_max}, {self.k_max})"
            )
        return self.entries[n][d][k]


# Expanded denominator (1-x-xyz-z+xz)(1-z-x) of the generating function,
# as {(x,y,z) exponents: coefficient}, constant term 1 omitted.
_DENOMINATOR = (
    ((1, 0, 0), -2),
    ((0, 0, 1), -2),
    ((2, 0, 0), 1),
    ((0, 0, 2), 1),
    ((1, 0, 1), 3),
    ((1, 1, 1), -1),
    ((1, 0, 2), -1),
    ((2, 0, 1), -1),
    ((1, 1, 2), 1),
    ((2, 1, 1), 1),
)

# Numerator xyz(1-z).
_NUMERATOR = {(1, 1, 1): 1, (1, 1, 2): -1}


def genfunc_table(n_max: int, d_max: int, k_max: int) -> GenfuncTable:
    """Expand the generating function F(x, y, z) up to the given bounds.

    F satisfies F * denominator = numerator with the denominator having
    constant term 1, so the coefficients obey a linear recurrence solvable
    in one pass over (n, d, k) in graded lexicographic order.
    """
    if min(n_max, d_max, k_max) < 1:
        raise RangeError("table bounds must be >= 1")
    if n_max * d_max * k_max > GENFUNC_LIMIT:
        raise TooLarge(
            f"table of {n_max}*{d_max}*{k_max} entries exceeds the "
            f"{GENFUNC_LIMIT} limit"
        )
    table = [
        [[0] * (k_max + 1) for _ in range(d_max + 1)] for _ in range(n_max + 1)
    ]
    for n in range(n_max + 1):
        for d in range(d_max + 1):
            for k in range(k_max + 1):
                value = _NUMERATOR.get((n, d, k), 0)
                for (a, b, c), coef in _DENOMINATOR:
                    if n >= a and d >= b and k >= c:
                        value -= coef * table[n - a][d - b][k - c]
                table[n][d][k] = value
    return GenfuncTable(
        n_max=n_max,
        d_max=d_max,
        k_max=k_max,
        entries=tuple(tuple(tuple(row) for row in plane) for plane in table),
    )
