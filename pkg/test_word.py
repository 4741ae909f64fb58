import itertools
import random

import pytest

from wordperiods.core.exceptions import ValidationError
from wordperiods.domain.word import (
    BorderSet,
    PeriodSet,
    Word,
    border_lengths,
    is_unbordered,
    least_period,
    max_border,
    parse_periods,
    period_lengths,
)
from wordperiods.services.oracle import naive_border_lengths


@pytest.mark.parametrize("text, borders", [
    ("alfalfa", (0, 1, 4)),
    ("a", (0,)),
    ("abracadabra", (0, 1, 4)),
])
def test_border_lengths_examples(text, borders):
    assert border_lengths(text).borders == borders


@pytest.mark.parametrize("text, periods", [
    ("entente", (3, 6, 7)),
    ("abracadabra", (7, 10, 11)),
    ("x", (1,)),
])
def test_period_lengths_examples(text, periods):
    assert period_lengths(text).periods == periods


def test_least_period_and_max_border():
    assert max_border("ionization") == 3
    assert least_period("0101") == 2
    assert max_border("0101") == 2
    assert least_period("0010") == 3
    assert max_border("0010") == 1
    assert is_unbordered("0001")
    assert not is_unbordered("0010")


def test_empty_word_rejected():
    with pytest.raises(ValidationError):
        period_lengths("")
    with pytest.raises(ValidationError):
        border_lengths(())


def test_word_from_text_round_trip():
    word = Word.from_text("abracadabra")
    assert word.letters[:4] == (0, 1, 2, 0)
    assert word.alphabet == 5
    assert word.to_text() == "abracadabra"
    assert border_lengths(word).borders == (0, 1, 4)


def test_word_text_uses_original_symbols():
    word = Word.from_text("0010")
    assert word.to_text() == "0010"
    assert word == Word((0, 0, 1, 0), alphabet=2)
    assert Word((0, 0, 1, 0), alphabet=2).to_text() == "aaba"
    with pytest.raises(ValidationError):
        Word((0, 1), alphabet=2, symbols=("x",))


def test_word_rejects_letters_outside_alphabet():
    with pytest.raises(ValidationError):
        Word((0, 2), alphabet=2)


def test_period_set_canonical_form():
    periods = PeriodSet.of([6, 4, 4, 9], 8)
    assert periods.periods == (4, 6, 8)
    assert periods.least == 4
    assert periods.nontrivial == (4, 6)
    assert periods.shifted(4) == PeriodSet(4, (2, 4))
    assert periods.borders() == BorderSet(8, (0, 2, 4))
    assert periods.borders().periods() == periods
    with pytest.raises(ValidationError):
        PeriodSet.of([0, 3], 5)
    with pytest.raises(ValidationError):
        PeriodSet(5, (3,))


def test_parse_periods():
    assert parse_periods("4,6", 7).periods == (4, 6, 7)
    assert parse_periods(" 1 ", 9).periods == (1, 9)
    for bad in ["", "4,x", "-1,3"]:
        with pytest.raises(ValidationError):
            parse_periods(bad, 7)


def test_duality_on_random_words():
    rng = random.Random(1)
    for alphabet in (2, 3):
        for _ in range(300):
            n = rng.randint(1, 14)
            w = [rng.randrange(alphabet) for _ in range(n)]
            borders = border_lengths(w)
            assert set(period_lengths(w)) == {n - r for r in borders}


def test_prefix_period_shift():
    """w with period p < n: q > p is a period of w iff q - p is one of its (n-p)-prefix"""
    rng = random.Random(2)
    checked = 0
    while checked < 400:
        alphabet = rng.choice((2, 3))
        n = rng.randint(2, 14)
        w = [rng.randrange(alphabet) for _ in range(n)]
        periods = period_lengths(w)
        for p in periods.nontrivial:
            u = w[: n - p]
            u_periods = set(period_lengths(u))
            for q in range(p + 1, n + 1):
                assert (q in periods) == (q - p in u_periods)
            checked += 1


def test_failure_function_matches_naive():
    for n in range(1, 13):
        for w in itertools.product((0, 1), repeat=n):
            assert border_lengths(w) == naive_border_lengths(w)
