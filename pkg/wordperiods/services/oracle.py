"""
Brute-force ground truth.

Enumerates Σ_ℓ^n in lexicographic order with an odometer and tabulates
border and period statistics. The failure function is kept incremental:
when the odometer rolls over at position i only fail[i:] is recomputed.
"""
from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor

from wordperiods.core.exceptions import BudgetExceededError, ValidationError
from wordperiods.core.settings import settings
from wordperiods.domain.distribution import DistributionTable
from wordperiods.domain.word import BorderSet, PeriodSet

logger = logging.getLogger(__name__)


# ========== Enumeration ==========

def _check_budget(alphabet: int, n: int, budget: int | None) -> int:
    if alphabet < 1 or n < 1:
        raise ValidationError("alphabet size and length must be >= 1")
    limit = settings.budget_enum if budget is None else budget
    size = alphabet**n
    if size > limit:
        raise BudgetExceededError(
            f"{alphabet}^{n} = {size} words exceeds the enumeration budget {limit}"
        )
    return size


def _failure_tables(alphabet: int, n: int, start: int, stop: int) -> Iterator[list[int]]:
    """
    Yield the failure function of every word with lexicographic index in
    [start, stop). The same list object is yielded each time.
    """
    word = [0] * n
    index = start
    for i in range(n - 1, -1, -1):
        index, word[i] = divmod(index, alphabet)

    fail = [0] * n
    changed = 1
    for _ in range(start, stop):
        for i in range(max(changed, 1), n):
            k = fail[i - 1]
            while k > 0 and word[i] != word[k]:
                k = fail[k - 1]
            fail[i] = k + 1 if word[i] == word[k] else 0
        yield fail

        # odometer
        i = n - 1
        while i >= 0 and word[i] == alphabet - 1:
            word[i] = 0
            i -= 1
        if i < 0:
            return
        word[i] += 1
        changed = i


def _border_chain(fail: list[int]) -> tuple[int, ...]:
    borders = [0]
    r = fail[-1]
    while r > 0:
        borders.append(r)
        r = fail[r - 1]
    return tuple(borders)


def _max_border_range(alphabet: int, n: int, start: int, stop: int) -> Counter[int]:
    counts: Counter[int] = Counter()
    for fail in _failure_tables(alphabet, n, start, stop):
        counts[fail[-1]] += 1
    return counts


def _spectrum_range(alphabet: int, n: int, start: int, stop: int) -> Counter[tuple[int, ...]]:
    counts: Counter[tuple[int, ...]] = Counter()
    for fail in _failure_tables(alphabet, n, start, stop):
        counts[_border_chain(fail)] += 1
    return counts


def _partition(size: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, size))
    step, rest = divmod(size, parts)
    bounds, start = [], 0
    for k in range(parts):
        stop = start + step + (1 if k < rest else 0)
        bounds.append((start, stop))
        start = stop
    return bounds


def _run(task, alphabet: int, n: int, size: int, jobs: int) -> Counter:
    if jobs <= 1:
        return task(alphabet, n, 0, size)
    ranges = _partition(size, jobs)
    logger.info("Enumerating %d words in %d ranges", size, len(ranges))
    total: Counter = Counter()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(task, alphabet, n, start, stop) for start, stop in ranges]
        for future in futures:
            total.update(future.result())
    return total


# ========== Operations ==========

def naive_border_lengths(w: Sequence) -> BorderSet:
    """Borders by direct prefix/suffix comparison"""
    n = len(w)
    if n == 0:
        raise ValidationError("the empty word has no borders")
    borders = tuple(r for r in range(n) if list(w[:r]) == list(w[n - r:]))
    return BorderSet(n, borders)


def enumerate_distribution(
    alphabet: int,
    n: int,
    *,
    budget: int | None = None,
    jobs: int = 1,
) -> DistributionTable:
    size = _check_budget(alphabet, n, budget)
    logger.info("Oracle distribution for alphabet=%d n=%d (%d words)", alphabet, n, size)
    counts = _run(_max_border_range, alphabet, n, size, jobs)
    return DistributionTable(alphabet, n, dict(sorted(counts.items())), method="oracle")


def period_spectrum(
    alphabet: int,
    n: int,
    *,
    budget: int | None = None,
    jobs: int = 1,
) -> Counter[PeriodSet]:
    """Number of words of Σ_ℓ^n having exactly each period set"""
    size = _check_budget(alphabet, n, budget)
    by_borders = _run(_spectrum_range, alphabet, n, size, jobs)
    return Counter({
        PeriodSet(n, tuple(sorted(n - r for r in borders))): count
        for borders, count in by_borders.items()
    })


def count_with_periods(
    alphabet: int,
    periods: PeriodSet,
    *,
    budget: int | None = None,
) -> int:
    """|G_ℓ(P, n)|: words having every p in P as a period"""
    wanted = set(periods)
    spectrum = period_spectrum(alphabet, periods.n, budget=budget)
    return sum(c for found, c in spectrum.items() if wanted.issubset(found.periods))


def count_least_period(alphabet: int, p: int, n: int, *, budget: int | None = None) -> int:
    """|F_ℓ({p, n}, n)|: words whose least period is exactly p"""
    if not 1 <= p <= n:
        raise ValidationError(f"period {p} outside [1, {n}]")
    table = enumerate_distribution(alphabet, n, budget=budget)
    return table.count(n - p)


def count_h_set(
    alphabet: int,
    periods: PeriodSet,
    p: int,
    *,
    budget: int | None = None,
) -> int:
    """Words with periods P and p but no period strictly between p and min P"""
    m = periods.least
    wanted = set(periods) | {p}
    spectrum = period_spectrum(alphabet, periods.n, budget=budget)
    return sum(
        c for found, c in spectrum.items()
        if wanted.issubset(found.periods) and not any(p < q < m for q in found.periods)
    )
