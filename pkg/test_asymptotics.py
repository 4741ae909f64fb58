from decimal import Decimal
from fractions import Fraction
from itertools import islice

import pytest

from wordperiods.core.exceptions import PrecisionError, SeriesError, ValidationError
from wordperiods.domain.errdecimal import ErrDecimal
from wordperiods.services.asymptotics import (
    SeriesTerm,
    alpha_limit,
    border_tail,
    choose_length,
    finite_n_tail,
    l0_terms,
    l1_terms,
    lambda0_limit,
    lambda1_limit,
    lambda_r_limit,
    sum_alternating,
)
from wordperiods.services.counting import lambda_n


def assert_matches_table(value: ErrDecimal, printed: str) -> None:
    """Rendered to the printed number of places, within one unit of the last one"""
    digits = len(printed.split(".")[1])
    ulp = Decimal(1).scaleb(-digits)
    assert abs(Decimal(value.render(digits)) - Decimal(printed)) <= ulp, (value, printed)


# ========== Series ==========

def test_l1_first_terms():
    terms = [t.term for t in islice(l1_terms(2), 3)]
    assert terms == [Fraction(1, 4), Fraction(-3, 56), 6 * Fraction(120, 7) / 32512]
    assert abs(float(sum(terms)) - 0.19958) < 1e-3


def test_l0_first_terms():
    terms = list(islice(l0_terms(2), 2))
    assert terms[0] == SeriesTerm(1, Fraction(1), Fraction(2), Fraction(1))
    assert terms[1].term == Fraction(-2, 7)


@pytest.mark.parametrize("alphabet", [2, 3, 10])
@pytest.mark.parametrize("series", [l0_terms, l1_terms])
def test_partial_sums_bracket_the_limit(alphabet, series):
    limit, _, _ = sum_alternating(series(alphabet), Fraction(1, 10**400))
    partial = Fraction(0)
    signs = []
    for term in islice(series(alphabet), 6):
        partial += term.term
        signs.append(partial > limit)
    assert all(a != b for a, b in zip(signs, signs[1:]))


def test_sum_alternating_rejects_bad_series():
    same_sign = iter([
        SeriesTerm(1, Fraction(1), Fraction(1), Fraction(1, 2)),
        SeriesTerm(2, Fraction(1), Fraction(1), Fraction(1, 4)),
    ])
    with pytest.raises(SeriesError):
        sum_alternating(same_sign, Fraction(1, 1000))

    growing = iter([
        SeriesTerm(1, Fraction(1), Fraction(1), Fraction(1, 2)),
        SeriesTerm(2, Fraction(1), Fraction(1), Fraction(-1, 4)),
        SeriesTerm(3, Fraction(1), Fraction(1), Fraction(1, 2)),
    ])
    with pytest.raises(SeriesError):
        sum_alternating(growing, Fraction(1, 1000))


def test_series_limits_at_twenty_digits():
    assert_matches_table(lambda0_limit(2, 20), "0.26778684021788911238")
    assert_matches_table(lambda1_limit(2, 20), "0.30042007151830329926")


@pytest.mark.parametrize("alphabet, r0, r1", [
    (3, "0.55698", "0.28270"),
    (4, "0.68775", "0.23024"),
    (5, "0.76006", "0.19034"),
    (10, "0.89000", "0.09890"),
])
def test_series_limits_small_table(alphabet, r0, r1):
    assert_matches_table(lambda0_limit(alphabet, 5), r0)
    assert_matches_table(lambda1_limit(alphabet, 5), r1)


def test_more_digits_never_widen_the_radius():
    short, long = lambda0_limit(2, 20), lambda0_limit(2, 30)
    assert long.err <= short.err
    rounded = Decimal(long.render(30)).quantize(Decimal(1).scaleb(-20))
    assert f"{rounded:f}" == short.render(20)


# ========== Finite-n route ==========

@pytest.mark.parametrize("r, printed", [
    (2, "0.19891874779036456415"),
    (3, "0.11216079483159432642"),
    (5, "0.03044609816129782975"),
    (10, "0.00097577734413168807"),
])
def test_lambda_r_binary(r, printed):
    assert_matches_table(lambda_r_limit(2, r, 20), printed)


@pytest.mark.parametrize("alphabet, r2, r3", [
    (3, "0.10547", "0.03641"),
    (4, "0.06126", "0.01555"),
    (5, "0.03961", "0.00798"),
    (10, "0.00999", "0.00100"),
])
def test_lambda_r_small_table(alphabet, r2, r3):
    assert_matches_table(lambda_r_limit(alphabet, 2, 5), r2)
    assert_matches_table(lambda_r_limit(alphabet, 3, 5), r3)


@pytest.mark.parametrize("alphabet", [2, 3, 10])
def test_series_and_recurrence_agree(alphabet):
    assert lambda0_limit(alphabet, 15).overlaps(lambda_r_limit(alphabet, 0, 15))
    assert lambda1_limit(alphabet, 15).overlaps(lambda_r_limit(alphabet, 1, 15))


@pytest.mark.parametrize("alphabet, printed", [
    (2, "1.64116491178296695613"),
    (3, "0.68587617299708343978"),
    (4, "0.42195659003603599699"),
    (5, "0.30201601806282253073"),
    (10, "0.12233344445364555354"),
    (50, "0.02081648979722449000"),
])
def test_alpha_table(alphabet, printed):
    assert_matches_table(alpha_limit(alphabet, 20), printed)


@pytest.mark.slow
def test_alpha_binary_fifty_digits():
    printed = "1.64116491178296695612774416940082554065953687825771543"
    assert_matches_table(alpha_limit(2, 50), printed[:52])


# ========== Error bounds ==========

def test_consecutive_lengths_converge():
    for n in range(2, 41):
        for r in range(0, n, 3):
            step = abs(lambda_n(2, r, n + 2) - lambda_n(2, r, n))
            assert step <= 2 * Fraction(1, 2 ** (n // 2))


def test_finite_n_tail_covers_distance_to_limit():
    limit = lambda0_limit(2, 20)
    for n in range(4, 41):
        distance = abs(Fraction(limit.value) - lambda_n(2, 0, n))
        assert distance <= finite_n_tail(2, n) + Fraction(limit.err)


def test_border_tail_closed_form():
    direct = sum(Fraction(r, 2**r) for r in range(11, 400))
    assert abs(border_tail(2, 10) - direct) < Fraction(1, 10**100)


def test_choose_length():
    n = choose_length(2, Fraction(1, 10**6))
    assert finite_n_tail(2, n) <= Fraction(1, 10**6)
    assert finite_n_tail(2, n - 1) > Fraction(1, 10**6)
    assert choose_length(2, Fraction(1), minimum=30) == 30


def test_budgets_and_arguments():
    with pytest.raises(PrecisionError):
        lambda_r_limit(2, 5, 20, budget_n=50)
    with pytest.raises(PrecisionError):
        alpha_limit(2, 20, budget_r=10)
    with pytest.raises(PrecisionError):
        alpha_limit(2, 20, budget_n=100)
    with pytest.raises(ValidationError):
        lambda0_limit(1, 5)
    with pytest.raises(ValidationError):
        lambda_r_limit(2, -1, 5)
    with pytest.raises(ValidationError):
        lambda1_limit(2, 0)
