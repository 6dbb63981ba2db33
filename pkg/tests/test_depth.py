"""Positivity window, depth search vs formula, and the collapse identities."""
from __future__ import annotations

import pytest

from hilbertdepth import (
    VeroneseParams,
    b_coefficient,
    binomial,
    check_lemma32_part1,
    check_lemma32_part2,
    check_prop33,
    expand,
    hdepth_by_formula,
    hdepth_search,
    hilbert_series_closed,
    positivity_report,
    shift_pole_orders,
)
from hilbertdepth.errors import RangeError


def test_b_constant_in_r_at_degree_d():
    # Every summand carries C(., 0) = 1 at k = d, so the value is C(5, 2).
    params = VeroneseParams(5, 2)
    for r in range(7):
        assert b_coefficient(params, 2, r) == 10


def test_b_at_r_zero_is_plain_coefficient():
    assert b_coefficient(VeroneseParams(3, 2), 3, 0) == 7


def test_b_negative_witness():
    assert b_coefficient(VeroneseParams(5, 2), 3, 4) == -10


def test_b_boundary_zero():
    assert b_coefficient(VeroneseParams(5, 2), 3, 3) == 0


def test_b_matches_shifted_expansion_grid():
    for n in range(1, 11):
        for d in range(1, n + 1):
            params = VeroneseParams(n, d)
            series = hilbert_series_closed(params)
            for r in range(0, n + 1):
                window = expand(shift_pole_orders(series, r), 14)
                for k in range(15):
                    assert b_coefficient(params, k, r) == window[k], (n, d, k, r)


def test_positivity_boundary_zero_counts_as_positive():
    report = positivity_report(VeroneseParams(5, 2), 3)
    assert report.is_positive
    assert report.first_negative is None
    assert report.checked_window == (2, 3)


def test_positivity_failure_reports_first_negative():
    report = positivity_report(VeroneseParams(5, 2), 4)
    assert not report.is_positive
    assert report.first_negative == (3, -10)
    assert report.checked_window == (2, 4)


def test_positivity_at_zero_always_holds():
    for n in range(1, 13):
        for d in range(1, n + 1):
            assert positivity_report(VeroneseParams(n, d), 0).is_positive


def test_positivity_rejects_out_of_range_r():
    with pytest.raises(RangeError):
        positivity_report(VeroneseParams(4, 2), 5)
    with pytest.raises(RangeError):
        positivity_report(VeroneseParams(4, 2), -1)


def test_positivity_monotone_in_r():
    for n in range(1, 13):
        for d in range(1, n + 1):
            flags = [
                positivity_report(VeroneseParams(n, d), r).is_positive
                for r in range(0, n + 1)
            ]
            assert flags == sorted(flags, reverse=True), (n, d, flags)


@pytest.mark.parametrize(
    "n,d,expected",
    [(5, 2, 3), (6, 1, 3), (7, 2, 3), (1, 1, 1), (7, 7, 7)],
)
def test_depth_frozen(n, d, expected):
    result = hdepth_search(VeroneseParams(n, d))
    assert result.hdepth == expected
    assert result.by_search == result.by_formula == expected


def test_depth_witness_for_five_two():
    result = hdepth_search(VeroneseParams(5, 2))
    assert result.failing_r_witness == (4, 3, -10)


def test_depth_of_principal_monomial_ideal():
    for n in range(1, 11):
        assert hdepth_search(VeroneseParams(n, n)).hdepth == n


def test_depth_of_maximal_ideal():
    for n in range(1, 21):
        assert hdepth_search(VeroneseParams(n, 1)).hdepth == 1 + (n - 1) // 2


def test_depth_result_invariants_grid():
    for n in range(1, 13):
        for d in range(1, n + 1):
            result = hdepth_search(VeroneseParams(n, d))
            assert result.by_search == result.by_formula == result.hdepth
            r_fail, k_fail, value = result.failing_r_witness
            assert r_fail == result.hdepth + 1
            assert value < 0
            assert k_fail >= d


@pytest.mark.parametrize("n,d,expected", [(5, 2, 3), (7, 2, 3), (4, 4, 4), (9, 1, 5)])
def test_formula_frozen(n, d, expected):
    assert hdepth_by_formula(VeroneseParams(n, d)) == expected


def test_formula_of_principal_monomial_ideal():
    for d in range(1, 12):
        assert hdepth_by_formula(VeroneseParams(d, d)) == d


def test_search_equals_formula_wide_grid():
    for n in range(1, 26):
        for d in range(1, n + 1):
            hdepth_search(VeroneseParams(n, d))  # raises on disagreement


@pytest.mark.parametrize(
    "n,d,k,r,p",
    [(6, 2, 3, 2, 1), (6, 2, 3, 2, 2), (5, 3, 4, 3, 3)],
)
def test_lemma32_part1_examples(n, d, k, r, p):
    assert check_lemma32_part1(n, d, k, r, p)


def test_lemma32_part1_rejects_bad_hypotheses():
    with pytest.raises(RangeError):
        check_lemma32_part1(6, 2, 3, 2, 3)  # p > d
    with pytest.raises(RangeError):
        check_lemma32_part1(6, 2, 3, 6, 1)  # r > n - 1
    with pytest.raises(RangeError):
        check_lemma32_part1(6, 2, 1, 2, 1)  # k < d
    with pytest.raises(RangeError):
        check_lemma32_part1(6, 2, 3, -1, 1)  # r < 0


def test_lemma32_part1_grid():
    for n in range(1, 10):
        for d in range(1, n + 1):
            for k in range(d, 10):
                for r in range(0, n):
                    for p in range(1, d + 1):
                        assert check_lemma32_part1(n, d, k, r, p), (n, d, k, r, p)


def test_lemma32_part2_example_sides_negative():
    assert b_coefficient(VeroneseParams(5, 2), 3, 4) == -10
    assert check_lemma32_part2(5, 2, 3, 4)


def test_lemma32_part2_examples():
    assert check_lemma32_part2(4, 2, 3, 3)
    assert check_lemma32_part2(6, 3, 5, 4)


def test_lemma32_part2_collapses_beyond_window():
    # Empty correction sum for k >= r + 1: the coefficient is one binomial.
    for n in range(2, 9):
        for d in range(1, n + 1):
            for r in range(d - 1, n + 1):
                for k in range(max(r + 1, d), r + 6):
                    assert check_lemma32_part2(n, d, k, r)
                    assert b_coefficient(VeroneseParams(n, d), k, r) == binomial(
                        n + k - r - 1, k
                    )


def test_lemma32_part2_grid():
    for n in range(1, 10):
        for d in range(1, n + 1):
            for k in range(d, 10):
                for r in range(max(0, d - 1), n + 3):
                    assert check_lemma32_part2(n, d, k, r), (n, d, k, r)


def test_lemma32_part2_requires_r_at_least_d_minus_one():
    with pytest.raises(RangeError):
        check_lemma32_part2(2, 2, 2, 0)
    # The restriction is not defensive pedantry: below it the two sides
    # genuinely differ (b(2,2,2,0) = 1 against C(3, 2) = 3).
    assert b_coefficient(VeroneseParams(2, 2), 2, 0) == 1
    assert binomial(2 + 2 - 0 - 1, 2) == 3


@pytest.mark.parametrize("n,d", [(5, 2), (12, 3), (3, 3), (30, 7)])
def test_prop33_examples(n, d):
    assert check_prop33(n, d)


def test_prop33_vacuous_for_principal_case():
    for d in range(1, 10):
        assert check_prop33(d, d)


def test_tail_collapse_and_positivity_grid():
    for n in range(1, 13):
        for d in range(1, n + 1):
            params = VeroneseParams(n, d)
            for r in range(max(0, d - 1), n + 1):
                for k in range(r + 1, r + 11):
                    value = b_coefficient(params, k, r)
                    assert value == binomial(n + k - r - 1, k)
                    assert value >= 0


def test_first_failure_is_at_degree_d_plus_one():
    # One power past the depth, the degree-(d+1) coefficient
    # a(d+1) - r*a(d) already goes negative, and the search records it.
    for n in range(1, 13):
        for d in range(1, n + 1):
            params = VeroneseParams(n, d)
            result = hdepth_search(params)
            r_fail, k_fail, value = result.failing_r_witness
            a_d = binomial(n, d)
            a_d1 = d * binomial(n, d) + binomial(n, d + 1)
            assert r_fail * a_d > a_d1  # r exceeds d + C(n,d+1)/C(n,d)
            assert a_d1 - r_fail * a_d < 0
            assert k_fail == d + 1
            assert value == a_d1 - r_fail * a_d


def test_low_compressions_stay_positive_everywhere():
    # For r <= d the compressed series is a nonnegative combination of
    # T^d (1-T)^(-m) with m >= 0; check by direct expansion.
    for n in range(1, 13):
        for d in range(1, n + 1):
            series = hilbert_series_closed(VeroneseParams(n, d))
            for r in range(0, d + 1):
                window = expand(shift_pole_orders(series, r), 25)
                assert all(c >= 0 for c in window.coefficients), (n, d, r)
