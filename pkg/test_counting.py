from fractions import Fraction
from itertools import combinations

import pytest

from wordperiods.core.exceptions import ValidationError
from wordperiods.domain.word import PeriodSet
from wordperiods.services.counting import (
    alpha_n,
    border_count,
    border_one_count,
    counting_method,
    exact_distribution,
    expected_least_period,
    f_count,
    f_count_moebius,
    f_count_recursive,
    h_count,
    lambda_n,
    unbordered_count,
)
from wordperiods.services.fw import g_count
from wordperiods.services.oracle import count_h_set, enumerate_distribution, period_spectrum


@pytest.mark.parametrize("periods, n, expected", [
    ([1], 5, 2),
    ([2], 4, 2),
    ([3], 4, 6),
    ([], 8, 74),
])
def test_f_count_examples(periods, n, expected):
    assert f_count(2, PeriodSet.of(periods, n)) == expected


def test_unbordered_count_examples():
    assert unbordered_count(2, 1) == 2
    assert unbordered_count(2, 2) == 2
    assert unbordered_count(2, 8) == 74
    with pytest.raises(ValidationError):
        unbordered_count(2, 0)


def test_border_one_count_plus_sign():
    assert border_one_count(3, 1) == 0
    assert border_one_count(2, 3) == 2
    assert border_one_count(2, 4) == 6


def test_counting_method_threshold():
    assert counting_method(PeriodSet.of([5], 8)) == "moebius"
    assert counting_method(PeriodSet.of([6], 8)) == "recurrence"
    with pytest.raises(ValidationError):
        f_count_moebius(2, PeriodSet.of([6], 8))


def test_exact_distribution_examples():
    assert exact_distribution(2, 4).counts == {0: 6, 1: 6, 2: 2, 3: 2}
    assert exact_distribution(2, 1).counts == {0: 2}


def test_unary_alphabet():
    table = exact_distribution(1, 5)
    assert table.count(4) == 1
    assert sum(table.counts.values()) == 1


@pytest.mark.parametrize("alphabet, top", [(2, 16), (3, 10)])
def test_matches_enumeration(alphabet, top):
    for n in range(1, top + 1):
        assert exact_distribution(alphabet, n) == enumerate_distribution(alphabet, n)


def test_specialized_recurrences_agree_with_f_count():
    for alphabet in (2, 3):
        for n in range(1, 65):
            assert f_count(alphabet, PeriodSet.of([], n)) == unbordered_count(alphabet, n)
            if n >= 2:
                assert f_count(alphabet, PeriodSet.of([n - 1], n)) == border_one_count(alphabet, n)


@pytest.mark.parametrize("alphabet", [2, 3, 5])
def test_distribution_sums_to_total(alphabet):
    for n in range(1, 41):
        table = exact_distribution(alphabet, n)
        assert sum(table.counts.values()) == alphabet**n
        for r in range(1, n):
            assert table.count(r) <= alphabet ** (n - r)


def test_moebius_and_recurrence_paths_agree():
    for n in range(2, 25):
        for p in range(1, n // 2 + 2):
            periods = PeriodSet.of([p], n)
            assert f_count_moebius(2, periods) == f_count_recursive(2, periods)


def test_h_terms_match_enumeration():
    for n in range(3, 11):
        for m in range(2, n + 1):
            periods = PeriodSet.of([m], n)
            g = g_count(2, periods)
            h_total = 0
            for p in range((m + 1) // 2, m):
                h = count_h_set(2, periods, p)
                assert h_count(2, periods, p) == h
                h_total += h
            # the H-sets partition G minus F
            assert g - h_total == f_count(2, periods)


def test_border_count_range():
    assert border_count(2, 7, 8) == 2
    with pytest.raises(ValidationError):
        border_count(2, 8, 8)
    with pytest.raises(ValidationError):
        border_count(2, -1, 8)


def test_alpha_n():
    assert alpha_n(2, 1) == 0
    assert alpha_n(2, 2) == Fraction(1, 2)
    assert alpha_n(2, 4) == 1
    assert expected_least_period(2, 4) == 3


def test_lambda_n():
    assert lambda_n(2, 0, 8) == Fraction(74, 256)
    assert lambda_n(2, 9, 8) == 0


def test_parallel_distribution_agrees():
    assert exact_distribution(2, 30, jobs=2) == exact_distribution(2, 30)


@pytest.mark.parametrize("alphabet, top", [(2, 10), (3, 7)])
def test_f_count_multiple_periods_matches_enumeration(alphabet, top):
    for n in range(2, top + 1):
        spectrum = period_spectrum(alphabet, n)
        for k in range(1, 4):
            for chosen in combinations(range(1, n), k):
                periods = PeriodSet.of(chosen, n)
                expected = sum(
                    c for found, c in spectrum.items()
                    if set(periods) <= set(found) and found.least == periods.least
                )
                assert f_count(alphabet, periods) == expected, periods
