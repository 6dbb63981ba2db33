"""Exhaustive verification grids over the identities behind the package.

Each suite walks a finite grid of parameters and checks one family of
identities exactly.  The grids are exhaustive over their bounds, so a
failure is reproducible by construction and is reported with the first
counterexample in (n, d, k, r) order.  Grid work may be partitioned
across threads (HILBERT_THREADS); every check is a pure function, and
results are merged in grid order, so the outcome is deterministic.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import depth as depth_checks
from . import veronese
from .binomial import binomial
from .errors import RangeError
from .series import expand, shift_pole_orders
from .veronese import ENUMERATION_LIMIT, VeroneseParams


@dataclass(frozen=True)
class Counterexample:
    """One failed identity instance, with both sides evaluated exactly."""

    identity: str
    n: int
    d: int
    k: int | None
    r: int | None
    lhs: int
    rhs: int

    def render(self) -> str:
        k = "-" if self.k is None else self.k
        r = "-" if self.r is None else self.r
        return (
            f"(n={self.n}, d={self.d}, k={k}, r={r}, "
            f"lhs={self.lhs}, rhs={self.rhs})"
        )


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    checks: int
    failures: int
    first_counterexample: Counterexample | None

    @property
    def passed(self) -> bool:
        return self.failures == 0


def worker_count() -> int:
    """Thread count for grid suites: HILBERT_THREADS or available parallelism."""
    raw = os.environ.get("HILBERT_THREADS")
    if raw is None or raw == "":
        return os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError:
        raise RangeError(f"HILBERT_THREADS must be a positive integer, got {raw!r}")
    if value < 1:
        raise RangeError(f"HILBERT_THREADS must be a positive integer, got {raw!r}")
    return value


Cell = tuple
CheckFn = Callable[[Cell], "Counterexample | None"]


def _run_cells(cells: Sequence[Cell], check: CheckFn) -> tuple[int, list[Counterexample]]:
    """Run one check per cell, chunked across workers, merged in grid order."""
    workers = worker_count()
    if workers <= 1 or len(cells) < 4 * workers:
        failures = [cx for cx in map(check, cells) if cx is not None]
        return len(cells), failures

    chunk = -(-len(cells) // workers)
    blocks = [cells[i : i + chunk] for i in range(0, len(cells), chunk)]

    def run_block(block: Sequence[Cell]) -> list[Counterexample]:
        return [cx for cx in map(check, block) if cx is not None]

    with ThreadPoolExecutor(max_workers=workers) as pool:
        merged: list[Counterexample] = []
        for block_failures in pool.map(run_block, blocks):
            merged.extend(block_failures)
    return len(cells), merged


def _enumeration_feasible(n: int, k: int) -> bool:
    return binomial(n + k - 1, k) <= ENUMERATION_LIMIT


def _suite_recurrence(n_max: int | None, k_max: int | None, r_max: int | None):
    """Recurrence routes against the closed formula, plus the class split.

    Covers the dynamic program (both recurrence forms), the enumeration
    and support-grouping counts, and the decomposition of the monomial set
    by the multiplicity of the last variable that the sum recurrence
    encodes.
    """
    n_max = 7 if n_max is None else n_max
    k_max = 9 if k_max is None else k_max
    cells: list[Cell] = []
    for n in range(1, n_max + 1):
        for d in range(1, n + 1):
            for k in range(d, k_max + 1):
                cells.append(("recurrence_vs_formula", n, d, k))
                if _enumeration_feasible(n, k):
                    cells.append(("enumeration_vs_formula", n, d, k))
                    cells.append(("support_vs_formula", n, d, k))
                    if n >= 2 and d >= 2:
                        cells.append(("class_decomposition", n, d, k))

    def check(cell: Cell) -> Counterexample | None:
        identity, n, d, k = cell
        params = VeroneseParams(n, d)
        rhs = veronese.hilbert_coefficient(params, k)
        if identity == "recurrence_vs_formula":
            lhs = veronese.hilbert_coefficient_recurrence(params, k)
        elif identity == "enumeration_vs_formula":
            lhs = veronese.count_by_enumeration(params, k)
        elif identity == "support_vs_formula":
            lhs = veronese.count_by_support(params, k)
        else:
            lhs = veronese.count_by_enumeration(params, k)
            # Boundary convention: the count vanishes when n - 1 < d.
            rhs = 0
            if n - 1 >= d:
                rhs = veronese.count_by_enumeration(VeroneseParams(n - 1, d), k)
            smaller = VeroneseParams(n - 1, d - 1)
            for s in range(1, k - d + 2):
                rhs += veronese.count_by_enumeration(smaller, k - s)
        if lhs != rhs:
            return Counterexample(identity, n, d, k, None, lhs, rhs)
        return None

    return cells, check


def _suite_genfunc(n_max: int | None, k_max: int | None, r_max: int | None):
    """Generating-function table entries against the closed formula.

    Also asserts the zero region d > min(n, k), which the linear
    recurrence must produce on its own.
    """
    n_max = 7 if n_max is None else n_max
    k_max = 9 if k_max is None else k_max
    table = veronese.genfunc_table(n_max, n_max, k_max)
    cells: list[Cell] = [
        ("genfunc_entry", n, d, k)
        for n in range(1, n_max + 1)
        for d in range(1, n_max + 1)
        for k in range(0, k_max + 1)
    ]

    def check(cell: Cell) -> Counterexample | None:
        identity, n, d, k = cell
        lhs = table.value(n, d, k)
        if d > n or k < d:
            rhs = 0
        else:
            rhs = veronese.hilbert_coefficient(VeroneseParams(n, d), k)
        if lhs != rhs:
            return Counterexample(identity, n, d, k, None, lhs, rhs)
        return None

    return cells, check


def _suite_series(n_max: int | None, k_max: int | None, r_max: int | None):
    """Closed-form series expansion against the coefficient formulas.

    Checks the expansion of the closed Hilbert series (including the zero
    coefficients below degree d) and the compressed-series coefficients
    against the shifted-expansion oracle.
    """
    n_max = 10 if n_max is None else n_max
    k_max = 15 if k_max is None else k_max
    windows: dict[tuple[int, int, int], object] = {}
    cells: list[Cell] = []
    for n in range(1, n_max + 1):
        for d in range(1, n + 1):
            closed = veronese.hilbert_series_closed(VeroneseParams(n, d))
            r_top = n if r_max is None else min(r_max, n)
            for r in range(0, r_top + 1):
                windows[(n, d, r)] = expand(shift_pole_orders(closed, r), k_max)
            for k in range(0, k_max + 1):
                cells.append(("series_expansion", n, d, k))
                for r in range(0, r_top + 1):
                    cells.append(("b_vs_shifted_expansion", n, d, k, r))

    def check(cell: Cell) -> Counterexample | None:
        if cell[0] == "series_expansion":
            identity, n, d, k = cell
            params = VeroneseParams(n, d)
            lhs = windows[(n, d, 0)][k]
            rhs = 0 if k < d else veronese.hilbert_coefficient(params, k)
            if lhs != rhs:
                return Counterexample(identity, n, d, k, None, lhs, rhs)
            return None
        identity, n, d, k, r = cell
        lhs = depth_checks.b_coefficient(VeroneseParams(n, d), k, r)
        rhs = windows[(n, d, r)][k]
        if lhs != rhs:
            return Counterexample(identity, n, d, k, r, lhs, rhs)
        return None

    return cells, check


def _suite_lemma32(n_max: int | None, k_max: int | None, r_max: int | None):
    """Both coefficient-collapse identities over their full validity grids.

    Part 1 needs r <= n - 1 (so the reduced ideal keeps at least p
    variables); part 2 needs r >= d - 1 (below that the sum split breaks,
    see check_lemma32_part2).  Tuples outside those ranges are not valid
    instances and are skipped.
    """
    n_max = 12 if n_max is None else n_max
    k_max = 12 if k_max is None else k_max
    cells: list[Cell] = []
    for n in range(1, n_max + 1):
        for d in range(1, n + 1):
            r_top = n + 2 if r_max is None else r_max
            for k in range(d, k_max + 1):
                for r in range(0, min(n - 1, r_top) + 1):
                    for p in range(1, d + 1):
                        cells.append((f"lemma32_part1(p={p})", n, d, k, r, p))
                for r in range(max(0, d - 1), r_top + 1):
                    cells.append(("lemma32_part2", n, d, k, r))

    def check(cell: Cell) -> Counterexample | None:
        if cell[0] == "lemma32_part2":
            identity, n, d, k, r = cell
            lhs, rhs = depth_checks._part2_sides(n, d, k, r)
        else:
            identity, n, d, k, r, p = cell
            lhs, rhs = depth_checks._part1_sides(n, d, k, r, p)
        if lhs != rhs:
            return Counterexample(identity, n, d, k, r, lhs, rhs)
        return None

    return cells, check


def _suite_prop33(n_max: int | None, k_max: int | None, r_max: int | None):
    """The depth-formula inequality for every parameter pair in the grid."""
    n_max = 30 if n_max is None else n_max
    cells: list[Cell] = [
        ("prop33", n, d) for n in range(1, n_max + 1) for d in range(1, n + 1)
    ]

    def check(cell: Cell) -> Counterexample | None:
        identity, n, d = cell
        violation = depth_checks._prop33_first_violation(n, d)
        if violation is not None:
            k, lhs, rhs = violation
            r = depth_checks.hdepth_by_formula(VeroneseParams(n, d))
            return Counterexample(identity, n, d, k, r, lhs, rhs)
        return None

    return cells, check


def _suite_tail(n_max: int | None, k_max: int | None, r_max: int | None):
    """Beyond the positivity window the coefficients collapse and stay >= 0.

    This is the claim that makes the finite window of positivity_report
    sufficient for r >= d - 1; smaller r are covered by the nonnegative
    combination argument and need no tail check.
    """
    n_max = 12 if n_max is None else n_max
    cells: list[Cell] = []
    for n in range(1, n_max + 1):
        for d in range(1, n + 1):
            r_top = n if r_max is None else min(r_max, n)
            for r in range(max(0, d - 1), r_top + 1):
                for k in range(r + 1, r + 11):
                    cells.append(("tail_collapse", n, d, k, r))

    def check(cell: Cell) -> Counterexample | None:
        identity, n, d, k, r = cell
        lhs = depth_checks.b_coefficient(VeroneseParams(n, d), k, r)
        rhs = binomial(n + k - r - 1, k)
        if lhs != rhs or lhs < 0:
            return Counterexample(identity, n, d, k, r, lhs, rhs)
        return None

    return cells, check


_SUITES = {
    "recurrence": _suite_recurrence,
    "genfunc": _suite_genfunc,
    "series": _suite_series,
    "lemma32": _suite_lemma32,
    "prop33": _suite_prop33,
    "tail": _suite_tail,
}

SUITE_ORDER = tuple(_SUITES)


def run_suite(
    name: str,
    n_max: int | None = None,
    k_max: int | None = None,
    r_max: int | None = None,
) -> SuiteResult:
    """Run one named suite; bounds default to the suite's declared grid."""
    if name not in _SUITES:
        raise RangeError(
            f"unknown suite {name!r}; expected one of {', '.join(SUITE_ORDER)} or 'all'"
        )
    for label, bound in (("n_max", n_max), ("k_max", k_max), ("r_max", r_max)):
        if bound is not None and bound < 0:
            raise RangeError(f"{label} must be >= 0, got {bound}")
    cells, check = _SUITES[name](n_max, k_max, r_max)
    checks, failures = _run_cells(cells, check)
    return SuiteResult(
        suite=name,
        checks=checks,
        failures=len(failures),
        first_counterexample=failures[0] if failures else None,
    )


def run_suites(
    name: str,
    n_max: int | None = None,
    k_max: int | None = None,
    r_max: int | None = None,
) -> list[SuiteResult]:
    """Run one suite, or every suite in declaration order for 'all'."""
    names: Iterable[str] = SUITE_ORDER if name == "all" else (name,)
    if name != "all" and name not in _SUITES:
        raise RangeError(
            f"unknown suite {name!r}; expected one of {', '.join(SUITE_ORDER)} or 'all'"
        )
    return [run_suite(suite, n_max, k_max, r_max) for suite in names]
