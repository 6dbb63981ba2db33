"""Hilbert depth of squarefree Veronese ideals via series positivity.

The Hilbert depth of a module equals the largest r such that
(1-T)^r * H(T) has no negative coefficient.  For the squarefree Veronese
ideal the multiplied series is again a finite sum of closed terms, with
degree-k coefficient

    b(n, d, k, r) = sum_{i=d-1}^{n-1} C(i, d-1) * C(n-i+k-r-2, k-d),

and the positivity test reduces to the finite window k in [d, max(r, d)]:
below d every coefficient vanishes; for r <= d the multiplied series is a
nonnegative combination of terms T^d * (1-T)^(-m) with m >= 0 and is
positive outright; and for r >= d - 1 the coefficients beyond the window
collapse to C(n+k-r-1, k), which is nonnegative whenever r <= n.  The
resulting depth satisfies the closed formula

    d + floor(C(n, d+1) / C(n, d)) = d + floor((n-d) / (d+1))
                                   = d - 1 + ceil((n-d+1) / (d+1)),

which this module evaluates independently and checks against the search.
"""
from __future__ import annotations

from dataclasses import dataclass

from .binomial import binomial
from .errors import InternalDisagreement, RangeError
from .veronese import VeroneseParams


@dataclass(frozen=True)
class PositivityReport:
    """Outcome of the nonnegativity test for (1-T)^r times the series."""

    r: int
    is_positive: bool
    first_negative: tuple[int, int] | None
    checked_window: tuple[int, int]


@dataclass(frozen=True)
class DepthResult:
    """Hilbert depth with the witness that one more (1-T) factor fails."""

    hdepth: int
    by_search: int
    by_formula: int
    failing_r_witness: tuple[int, int, int]


def b_coefficient(params: VeroneseParams, k: int, r: int) -> int:
    """Degree-k coefficient of (1-T)^r times the Hilbert series.

    Vanishes for k < d because every summand carries C(., k-d) with a
    negative lower index.
    """
    n, d = params.n, params.d
    return sum(
        binomial(i, d - 1) * binomial(n - i + k - r - 2, k - d)
        for i in range(d - 1, n)
    )


def positivity_report(params: VeroneseParams, r: int) -> PositivityReport:
    """Decide whether (1-T)^r times the Hilbert series is coefficientwise >= 0.

    Only the window k in [d, max(r, d)] needs inspection, by the two-regime
    argument in the module docstring; the tail collapse requires r <= n,
    which is why larger r is rejected.  Zero coefficients count as
    nonnegative.
    """
    if r < 0:
        raise RangeError(f"r must be >= 0, got {r}")
    if r > params.n:
        raise RangeError(
            f"positivity window is only finite for r <= n, got r={r} > n={params.n}"
        )
    k_lo, k_hi = params.d, max(r, params.d)
    for k in range(k_lo, k_hi + 1):
        value = b_coefficient(params, k, r)
        if value < 0:
            return PositivityReport(
                r=r,
                is_positive=False,
                first_negative=(k, value),
                checked_window=(k_lo, k_hi),
            )
    return PositivityReport(
        r=r, is_positive=True, first_negative=None, checked_window=(k_lo, k_hi)
    )


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def hdepth_by_formula(params: VeroneseParams) -> int:
    """Hilbert depth by the closed formula, in all three equivalent forms.

    All three are evaluated with exact integer floor/ceiling division and
    must coincide; a mismatch is an implementation bug.
    """
    n, d = params.n, params.d
    via_binomials = d + binomial(n, d + 1) // binomial(n, d)
    via_floor = d + (n - d) // (d + 1)
    via_ceil = d - 1 + _ceil_div(n - (d - 1), d + 1)
    if not via_binomials == via_floor == via_ceil:
        raise InternalDisagreement(
            f"depth formula forms disagree at (n={n}, d={d}): "
            f"{via_binomials}, {via_floor}, {via_ceil}"
        )
    return via_binomials


def _search_depth(params: VeroneseParams) -> tuple[int, tuple[int, int, int]]:
    """Largest r passing the positivity test, plus the failing witness.

    Positivity is monotone in r (dividing by (1-T) is a termwise
    nonnegative convolution), so the first failing r ends the search.  The
    depth of a nonzero module over n variables is at most n; the loop cap
    makes that assumption explicit instead of trusting termination.
    """
    for r in range(params.n + 1):
        report = positivity_report(params, r)
        if not report.is_positive:
            k_fail, value = report.first_negative
            return r - 1, (r, k_fail, value)
    # All r <= n positive, so the depth is exactly n (only d = n reaches
    # this).  The witness at r = n + 1 is scanned directly because the
    # finite-window report refuses r > n.
    r = params.n + 1
    for k in range(params.d, max(r, params.d) + 1):
        value = b_coefficient(params, k, r)
        if value < 0:
            return params.n, (r, k, value)
    raise InternalDisagreement(
        f"no failing power found up to r = n + 1 for (n={params.n}, d={params.d})"
    )


def hdepth_search(params: VeroneseParams) -> DepthResult:
    """Hilbert depth by incremental positivity search, checked against the formula."""
    by_search, witness = _search_depth(params)
    by_formula = hdepth_by_formula(params)
    if by_search != by_formula:
        raise InternalDisagreement(
            f"depth search and formula disagree at (n={params.n}, d={params.d}): "
            f"search={by_search}, formula={by_formula}"
        )
    return DepthResult(
        hdepth=by_search,
        by_search=by_search,
        by_formula=by_formula,
        failing_r_witness=witness,
    )


def _part1_sides(n: int, d: int, k: int, r: int, p: int) -> tuple[int, int]:
    lhs = b_coefficient(VeroneseParams(n - r + p - 1, p), k, p - 1)
    rhs = binomial(n + k - r - 1, k)
    return lhs, rhs


def check_lemma32_part1(n: int, d: int, k: int, r: int, p: int) -> bool:
    """Check the binomial collapse b(n-r+p-1, p, k, p-1) = C(n+k-r-1, k).

    The hypotheses min(n, k) >= d >= 1, 1 <= p <= d, 0 <= r and
    n - r + p - 1 >= p are part of the claim, so invalid combinations are
    rejected rather than reported as vacuously true.
    """
    if not (1 <= d <= min(n, k)):
        raise RangeError(f"need min(n, k) >= d >= 1, got n={n}, d={d}, k={k}")
    if not 1 <= p <= d:
        raise RangeError(f"need 1 <= p <= d, got p={p}, d={d}")
    if r < 0:
        raise RangeError(f"r must be >= 0, got {r}")
    if n - r + p - 1 < p:
        raise RangeError(
            f"need n - r + p - 1 >= p (i.e. r <= n - 1), got n={n}, r={r}"
        )
    lhs, rhs = _part1_sides(n, d, k, r, p)
    return lhs == rhs


def _part2_sides(n: int, d: int, k: int, r: int) -> tuple[int, int]:
    lhs = b_coefficient(VeroneseParams(n, d), k, r)
    correction = sum(
        binomial(n - t, d - 1) * binomial(r - (d - 1) - t, k - d)
        for t in range(1, r - k + 2)
    )
    rhs = (-1) ** (k - d) * correction + binomial(n + k - r - 1, k)
    return lhs, rhs


def check_lemma32_part2(n: int, d: int, k: int, r: int) -> bool:
    """Check the splitting of b(n, d, k, r) into a signed correction plus C(n+k-r-1, k).

    The correction sum over t = 1, ..., r - k + 1 is empty when k >= r + 1,
    so beyond the window the coefficient is a single binomial.  The
    identity requires r >= d - 1: for smaller r the split of the defining
    sum picks up nonvanishing terms and both sides genuinely differ
    (already at n = d = k = 2, r = 0), so such r are rejected.
    """
    if not (1 <= d <= min(n, k)):
        raise RangeError(f"need min(n, k) >= d >= 1, got n={n}, d={d}, k={k}")
    if r < max(0, d - 1):
        raise RangeError(f"the splitting identity needs r >= d - 1, got r={r}, d={d}")
    lhs, rhs = _part2_sides(n, d, k, r)
    return lhs == rhs


def _prop33_first_violation(n: int, d: int) -> tuple[int, int, int] | None:
    r = d - 1 + _ceil_div(n - (d - 1), d + 1)
    for k in range(d + 1, r + 1):
        lhs = binomial(n + k - r - 1, k)
        rhs = sum(
            binomial(n - t, d - 1) * binomial(r - (d - 1) - t, k - d)
            for t in range(1, r - k + 2)
        )
        if lhs < rhs:
            return k, lhs, rhs
    return None


def check_prop33(n: int, d: int) -> bool:
    """Check the inequality that makes the depth formula value positive.

    With r = d - 1 + ceil((n-d+1)/(d+1)), every k in [d+1, r] must satisfy
    C(n+k-r-1, k) >= sum_t C(n-t, d-1) * C(r-(d-1)-t, k-d).  The range is
    empty (vacuously true) when r <= d.
    """
    if not 1 <= d <= n:
        raise RangeError(f"need n >= d >= 1, got n={n}, d={d}")
    return _prop33_first_violation(n, d) is None
