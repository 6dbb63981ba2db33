"""Exact Hilbert series and Hilbert depth of squarefree Veronese ideals."""

__version__ = "0.1.0"

from .binomial import binomial
from .depth import (
    DepthResult,
    PositivityReport,
    b_coefficient,
    check_lemma32_part1,
    check_lemma32_part2,
    check_prop33,
    hdepth_by_formula,
    hdepth_search,
    positivity_report,
)
from .errors import InternalDisagreement, RangeError, TooLarge
from .series import (
    ClosedSeries,
    ClosedTerm,
    CoefficientWindow,
    expand,
    first_negative,
    format_closed_series,
    shift_pole_orders,
    term_coefficient,
)
from .veronese import (
    GenfuncTable,
    VeroneseParams,
    count_by_enumeration,
    count_by_support,
    genfunc_table,
    hilbert_coefficient,
    hilbert_coefficient_recurrence,
    hilbert_series_closed,
)
from .verify import Counterexample, SuiteResult, run_suite, run_suites

__all__ = [
    "__version__",
    "binomial",
    "ClosedTerm",
    "ClosedSeries",
    "CoefficientWindow",
    "term_coefficient",
    "expand",
    "shift_pole_orders",
    "first_negative",
    "format_closed_series",
    "VeroneseParams",
    "GenfuncTable",
    "hilbert_series_closed",
    "hilbert_coefficient",
    "hilbert_coefficient_recurrence",
    "count_by_enumeration",
    "count_by_support",
    "genfunc_table",
    "PositivityReport",
    "DepthResult",
    "b_coefficient",
    "positivity_report",
    "hdepth_search",
    "hdepth_by_formula",
    "check_lemma32_part1",
    "check_lemma32_part2",
    "check_prop33",
    "Counterexample",
    "SuiteResult",
    "run_suite",
    "run_suites",
    "TooLarge",
    "RangeError",
    "InternalDisagreement",
]
