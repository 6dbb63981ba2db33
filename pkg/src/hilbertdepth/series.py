"""Closed-form series with terms c * T^a * (1-T)^(-e) and their expansion.

Every series handled here is a finite sum of such terms, so the closed form
is exact and compact.  A term stores the integer coefficient ``c``, the
shift ``a`` (a nonnegative power of T) and the pole order ``e``: positive
``e`` means a genuine pole of order ``e`` at T = 1, while negative ``e``
denotes the polynomial factor (1-T)^|e|.

The coefficient of T^j in (1-T)^(-e) is binomial(e + j - 1, j) for every
signed integer e, which removes any pole/polynomial case split.
"""
from __future__ import annotations

from dataclasses import dataclass

from .binomial import binomial


@dataclass(frozen=True)
class ClosedTerm:
    """One summand coeff * T^t_power * (1-T)^(-pole_order)."""

    coeff: int
    t_power: int
    pole_order: int

    def __post_init__(self) -> None:
        if self.t_power < 0:
            raise ValueError(f"t_power must be >= 0, got {self.t_power}")


@dataclass(frozen=True)
class ClosedSeries:
    """A formal sum of closed terms.

    The representation is not unique (terms may merge or cancel), so series
    are compared through expansion, never through term-list equality.
    """

    terms: tuple[ClosedTerm, ...]


@dataclass(frozen=True)
class CoefficientWindow:
    """A contiguous run of exact coefficients starting at ``start_degree``.

    ``coefficients[j]`` is the coefficient of T^(start_degree + j).
    """

    start_degree: int
    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.start_degree < 0:
            raise ValueError("start_degree must be >= 0")
        if len(self.coefficients) < 1:
            raise ValueError("a coefficient window holds at least one value")

    def __getitem__(self, degree: int) -> int:
        return self.coefficients[degree - self.start_degree]


def term_coefficient(term: ClosedTerm, k: int) -> int:
    """Coefficient of T^k in coeff * T^a * (1-T)^(-e).

    Equals coeff * binomial(e + (k - a) - 1, k - a); the generalized
    binomial vanishes for k < a because its lower index is negative.
    """
    j = k - term.t_power
    return term.coeff * binomial(term.pole_order + j - 1, j)


def expand(series: ClosedSeries, k_max: int) -> CoefficientWindow:
    """Expand a series into the window of coefficients of T^0 .. T^k_max."""
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    coeffs = tuple(
        sum(term_coefficient(t, k) for t in series.terms) for k in range(k_max + 1)
    )
    return CoefficientWindow(start_degree=0, coefficients=coeffs)


def shift_pole_orders(series: ClosedSeries, r: int) -> ClosedSeries:
    """Multiply a series by (1-T)^r by lowering every pole order by r."""
    return ClosedSeries(
        terms=tuple(
            ClosedTerm(t.coeff, t.t_power, t.pole_order - r) for t in series.terms
        )
    )


def format_closed_series(series: ClosedSeries) -> str:
    """Render a series as a sum like ``T^2(1-T)^-3 + 2 T^2(1-T)^-2``.

    Unit coefficients, T^0 and (1-T)^0 factors are omitted; a negative
    pole order prints as a positive power of (1-T).
    """
    parts = []
    for term in series.terms:
        if term.coeff == 0:
            continue
        if term.t_power == 0:
            t_part = ""
        elif term.t_power == 1:
            t_part = "T"
        else:
            t_part = f"T^{term.t_power}"
        if term.pole_order == 0:
            pole_part = ""
        elif term.pole_order == -1:
            pole_part = "(1-T)"
        else:
            pole_part = f"(1-T)^{-term.pole_order}"
        factors = t_part + pole_part
        if not factors:
            parts.append(str(term.coeff))
        elif term.coeff == 1:
            parts.append(factors)
        else:
            parts.append(f"{term.coeff} {factors}")
    return " + ".join(parts) if parts else "0"


def first_negative(window: CoefficientWindow) -> tuple[int, int] | None:
    """Smallest degree in the window with a negative coefficient, if any.

    Returns ``(degree, coefficient)`` or ``None`` when every entry is >= 0;
    zero entries count as nonnegative.
    """
    for j, value in enumerate(window.coefficients):
        if value < 0:
            return window.start_degree + j, value
    return None
