"""
Exact counts of words by least period.

F_ℓ(P, n) counts words of Σ_ℓ^n having every period in P and least period
min P. It is computed from G_ℓ = ℓ^c(P,n) either by Möbius inversion over
the divisors of min P (when min P <= floor(n/2) + 1) or by subtracting,
for each candidate smaller period p, the words whose least period below
min P is p (the H-terms).

The trivial period n is part of every PeriodSet and never constrains an
H-term, so unbordered words (P = {n}) are an ordinary case.
"""
from __future__ import annotations

import logging
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Literal, NamedTuple

from sympy import divisors, mobius

from wordperiods.core.exceptions import ValidationError
from wordperiods.domain.distribution import DistributionTable
from wordperiods.domain.word import PeriodSet
from wordperiods.repo.memo import MemoRepo
from wordperiods.services.fw import g_count

logger = logging.getLogger(__name__)


class CountKey(NamedTuple):
    alphabet: int
    periods: PeriodSet


_f_memo: MemoRepo[CountKey, int] = MemoRepo("F")


# ========== Strategy ==========

def counting_method(periods: PeriodSet) -> Literal["moebius", "recurrence"]:
    if periods.least <= periods.n // 2 + 1:
        return "moebius"
    return "recurrence"


def f_count(alphabet: int, periods: PeriodSet) -> int:
    """F_ℓ(P, n), memoized on (ℓ, P)"""
    if alphabet < 1:
        raise ValidationError("alphabet size must be >= 1")
    key = CountKey(alphabet, periods)
    cached = _f_memo.get(key)
    if cached is not None:
        return cached
    if counting_method(periods) == "moebius":
        value = f_count_moebius(alphabet, periods)
    else:
        value = f_count_recursive(alphabet, periods)
    return _f_memo.save(key, value)


def f_count_moebius(alphabet: int, periods: PeriodSet) -> int:
    """
    Sum over d | m of μ(m/d) G(P ∪ {d}, n), m = min P.

    Valid when m <= floor(n/2) + 1: then any smaller period p satisfies
    p + m - 1 <= n, so the least period divides m.
    """
    m = periods.least
    if m > periods.n // 2 + 1:
        raise ValidationError(f"Möbius shortcut needs min P <= n/2 + 1, got {m} for n={periods.n}")
    return sum(
        int(mobius(m // d)) * g_count(alphabet, periods.extended(d))
        for d in divisors(m)
    )


def h_count(alphabet: int, periods: PeriodSet, p: int) -> int:
    """Words with periods P and p and no period strictly between p and min P"""
    n = periods.n
    if p < (n + 1) // 2:
        return f_count(alphabet, PeriodSet.of([q - p for q in periods] + [p], n - p))
    return alphabet ** (2 * p - n) * f_count(alphabet, periods.shifted(p))


def f_count_recursive(alphabet: int, periods: PeriodSet) -> int:
    """G(P, n) minus H(P, p, n) for ceil(m/2) <= p < m"""
    m = periods.least
    total = g_count(alphabet, periods)
    for p in range((m + 1) // 2, m):
        total -= h_count(alphabet, periods, p)
    return total


# ========== Specialized recurrences ==========

def unbordered_count(alphabet: int, n: int) -> int:
    """u_n: words of length n whose only border is empty"""
    if n < 1:
        raise ValidationError("length must be >= 1")
    u = [0, alphabet, alphabet * (alphabet - 1)]
    for k in range(3, n + 1):
        if k % 2:
            u.append(alphabet * u[k - 1])
        else:
            u.append(alphabet * u[k - 1] - u[k // 2])
    return u[n]


def border_one_count(alphabet: int, n: int) -> int:
    """
    v_n: words of length n whose longest border has length 1.

    Even lengths use v_n = ℓ v_{n-1} + (ℓ-1) v_{n/2}; the minus sign
    sometimes quoted for this case gives v_4 = 2 for ℓ = 2, but there
    are 6 such words (0010, 0110, 0100, and complements).
    """
    if n < 1:
        raise ValidationError("length must be >= 1")
    v = [0, 0, alphabet]
    for k in range(3, n + 1):
        if k % 2:
            v.append(alphabet * v[k - 1] - v[(k + 1) // 2])
        else:
            v.append(alphabet * v[k - 1] + (alphabet - 1) * v[k // 2])
    return v[n]


def border_count(alphabet: int, r: int, n: int) -> int:
    """Words of Σ_ℓ^n with maximum border length exactly r"""
    if not 0 <= r < n:
        raise ValidationError(f"border length {r} outside [0, {n})")
    if r == 0:
        return unbordered_count(alphabet, n)
    if r == n - 1:
        return alphabet
    if r == 1:
        return border_one_count(alphabet, n)
    return f_count(alphabet, PeriodSet.of([n - r], n))


def _border_count_chunk(alphabet: int, n: int, rs: list[int]) -> dict[int, int]:
    return {r: border_count(alphabet, r, n) for r in rs}


def border_counts(
    alphabet: int,
    n: int,
    rs: Iterable[int],
    *,
    jobs: int = 1,
) -> dict[int, int]:
    """border_count for several r; a process pool evaluates chunks when jobs > 1"""
    rs = list(rs)
    if jobs <= 1 or len(rs) < 2:
        result = _border_count_chunk(alphabet, n, rs)
    else:
        # largest r are the cheapest; interleave so chunks cost about the same
        chunks = [rs[k::jobs] for k in range(jobs) if rs[k::jobs]]
        result = {}
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_border_count_chunk, [alphabet] * len(chunks), [n] * len(chunks), chunks):
                result.update(part)
    logger.debug("border counts alphabet=%d n=%d: %d values, memo size %d", alphabet, n, len(rs), len(_f_memo))
    return {r: result[r] for r in rs}


# ========== Distributions ==========

def exact_distribution(alphabet: int, n: int, *, jobs: int = 1) -> DistributionTable:
    if alphabet < 1 or n < 1:
        raise ValidationError("alphabet size and length must be >= 1")
    counts = border_counts(alphabet, n, range(n), jobs=jobs)
    return DistributionTable(alphabet, n, counts, method="recurrence")


def lambda_n(alphabet: int, r: int, n: int) -> Fraction:
    """λ_ℓ(r, n): probability that a random word has maximum border r"""
    if r >= n:
        return Fraction(0)
    return Fraction(border_count(alphabet, r, n), alphabet**n)


def alpha_n(alphabet: int, n: int, *, jobs: int = 1) -> Fraction:
    """α_ℓ(n): expected maximum border length over Σ_ℓ^n"""
    return exact_distribution(alphabet, n, jobs=jobs).expected_border()


def expected_least_period(alphabet: int, n: int, *, jobs: int = 1) -> Fraction:
    return n - alpha_n(alphabet, n, jobs=jobs)
