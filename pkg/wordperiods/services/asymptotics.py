"""
Limits of the border-length distribution as n -> infinity.

Two independent routes:

* series: λ_ℓ(0) = 1 - L_0(1/ℓ) and λ_ℓ(1) = 1/ℓ - L_1(1/ℓ), where the
  generating functions satisfy functional equations relating L(x) to
  L(x^2/ℓ). Evaluating them at x = ℓ^-(2^i - 1) gives
  L(x_i) = b_i - c_i L(x_{i+1}), which unrolls into an alternating series.
* finite n: λ_ℓ(r, n) is exact from the counting recurrences, and
  |λ_ℓ(r, n+1) - λ_ℓ(r, n)| <= ℓ^-floor(n/2).

All terms are exact Fractions; the result becomes an ErrDecimal at the end.
"""
from __future__ import annotations

import logging
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from fractions import Fraction

from wordperiods.core.exceptions import PrecisionError, SeriesError, ValidationError
from wordperiods.core.settings import settings
from wordperiods.domain.errdecimal import ErrDecimal
from wordperiods.services.counting import border_counts, lambda_n

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class SeriesTerm:
    """term = (-1)^(index+1) * b * prod_{i < index} c_i"""
    index: int
    b: Fraction
    c: Fraction
    term: Fraction


# ========== Helpers ==========

def _check_alphabet(alphabet: int) -> None:
    if alphabet < 2:
        raise ValidationError("limits need an alphabet of at least 2 letters")


def _tolerance(digits: int, guard: int | None) -> Fraction:
    """Target error radius: half a unit in the last of digits + guard places"""
    if digits < 1:
        raise ValidationError("digits must be >= 1")
    guard = settings.guard_digits if guard is None else guard
    return Fraction(1, 2 * 10 ** (digits + guard))


def _finish(value: Fraction, err: Fraction, digits: int, guard: int | None) -> ErrDecimal:
    guard = settings.guard_digits if guard is None else guard
    return ErrDecimal.from_fraction(value, err, digits + guard + 2)


def finite_n_tail(alphabet: int, n: int) -> Fraction:
    """
    Bound on |λ_ℓ(r) - λ_ℓ(r, n)| for every r < n.

    Summing the per-step bound ℓ^-floor(k/2) over k >= n, each exponent
    appears at most twice: 2 * sum_{j >= floor(n/2)} ℓ^-j = 2ℓ/(ℓ-1) ℓ^-floor(n/2).
    """
    return Fraction(2 * alphabet, (alphabet - 1) * alphabet ** (n // 2))


def border_tail(alphabet: int, cutoff: int) -> Fraction:
    """
    sum_{r > R} r ℓ^-r = x^(R+1) ((R+1) - R x) / (1-x)^2 with x = 1/ℓ.

    Bounds sum_{r > R} r λ_ℓ(r) since λ_ℓ(r, n) <= ℓ^-r.
    """
    x = Fraction(1, alphabet)
    return x ** (cutoff + 1) * ((cutoff + 1) - cutoff * x) / (1 - x) ** 2


def choose_length(alphabet: int, tolerance: Fraction, minimum: int = 1) -> int:
    """Smallest n >= minimum with finite_n_tail(ℓ, n) <= tolerance"""
    n = max(minimum, 1)
    while finite_n_tail(alphabet, n) > tolerance:
        n += 1
    return n


# ========== Series ==========

def _expand(b: Callable[[int], Fraction], c: Callable[[int], Fraction]) -> Iterator[SeriesTerm]:
    index, product, sign = 1, Fraction(1), 1
    while True:
        b_i, c_i = b(index), c(index)
        yield SeriesTerm(index, b_i, c_i, sign * b_i * product)
        product *= c_i
        sign = -sign
        index += 1


def l0_terms(alphabet: int) -> Iterator[SeriesTerm]:
    """L_0(1/ℓ): b_i = 1/(ℓ^(2^i-1) - 1), c_i = 1 + b_i"""
    _check_alphabet(alphabet)

    def b(i: int) -> Fraction:
        return Fraction(1, alphabet ** (2**i - 1) - 1)

    return _expand(b, lambda i: 1 + b(i))


def l1_terms(alphabet: int) -> Iterator[SeriesTerm]:
    """
    L_1(1/ℓ): b_i = 1/(ℓ^(2^i) (ℓ^(2^i-1) - 1)),
    c_i = ℓ^(2^i-1) (ℓ^(2^i) - ℓ + 1) / (ℓ^(2^i-1) - 1).
    """
    _check_alphabet(alphabet)

    def b(i: int) -> Fraction:
        return Fraction(1, alphabet ** (2**i) * (alphabet ** (2**i - 1) - 1))

    def c(i: int) -> Fraction:
        k = alphabet ** (2**i - 1)
        return Fraction(k * (alphabet ** (2**i) - alphabet + 1), k - 1)

    return _expand(b, c)


def sum_alternating(terms: Iterator[SeriesTerm], tolerance: Fraction) -> tuple[Fraction, Fraction, int]:
    """
    Partial sum up to the first term whose successor is <= tolerance.

    The remainder after N terms is (-1)^N prod_{i<=N} c_i L(x_{N+1}) and
    0 <= L(x) <= b-value at x, so it is bounded by the first omitted term.
    Returns (partial sum, remainder bound, terms used).
    """
    total = Fraction(0)
    previous: SeriesTerm | None = None
    for term in terms:
        if previous is not None:
            if term.term * previous.term >= 0:
                raise SeriesError(f"term {term.index} does not alternate in sign")
            if previous.index > 1 and abs(term.term) >= abs(previous.term):
                raise SeriesError(f"term {term.index} does not decrease")
            if abs(term.term) <= tolerance:
                logger.debug("series converged after %d terms", previous.index)
                return total, abs(term.term), previous.index
        total += term.term
        previous = term
    raise SeriesError("series ended unexpectedly")  # pragma: no cover


def lambda0_limit(alphabet: int, digits: int = 20, *, guard: int | None = None) -> ErrDecimal:
    """λ_ℓ(0) = 1 - L_0(1/ℓ): limiting probability of being unbordered"""
    tolerance = _tolerance(digits, guard)
    l0, remainder, _ = sum_alternating(l0_terms(alphabet), tolerance / 2)
    return _finish(1 - l0, remainder, digits, guard)


def lambda1_limit(alphabet: int, digits: int = 20, *, guard: int | None = None) -> ErrDecimal:
    """λ_ℓ(1) = 1/ℓ - L_1(1/ℓ): limiting probability of longest border 1"""
    tolerance = _tolerance(digits, guard)
    l1, remainder, _ = sum_alternating(l1_terms(alphabet), tolerance / 2)
    return _finish(Fraction(1, alphabet) - l1, remainder, digits, guard)


# ========== Finite-n route ==========

def lambda_r_limit(
    alphabet: int,
    r: int,
    digits: int = 20,
    *,
    guard: int | None = None,
    budget_n: int | None = None,
) -> ErrDecimal:
    """λ_ℓ(r) from the exact λ_ℓ(r, n*) with n* large enough for the tail bound"""
    _check_alphabet(alphabet)
    if r < 0:
        raise ValidationError("border length must be >= 0")
    budget_n = settings.budget_n if budget_n is None else budget_n
    tolerance = _tolerance(digits, guard)

    n = choose_length(alphabet, tolerance / 2, minimum=r + 1)
    if n > budget_n:
        raise PrecisionError(
            f"{digits} digits of λ_{alphabet}({r}) need n = {n} > budget {budget_n}"
        )
    logger.debug("lambda_r_limit alphabet=%d r=%d: n* = %d", alphabet, r, n)
    return _finish(lambda_n(alphabet, r, n), finite_n_tail(alphabet, n), digits, guard)


def alpha_limit(
    alphabet: int,
    digits: int = 20,
    *,
    guard: int | None = None,
    budget_n: int | None = None,
    budget_r: int | None = None,
    jobs: int = 1,
) -> ErrDecimal:
    """
    α_ℓ = sum_r r λ_ℓ(r), evaluated as sum_{r <= R} r λ_ℓ(r, n*).

    Error: sum_{r <= R} r * finite_n_tail(n*) for the finite length plus
    border_tail(R) for the omitted r > R.
    """
    _check_alphabet(alphabet)
    budget_n = settings.budget_n if budget_n is None else budget_n
    budget_r = settings.budget_r if budget_r is None else budget_r
    tolerance = _tolerance(digits, guard)

    cutoff = 1
    while border_tail(alphabet, cutoff) > tolerance / 4:
        cutoff += 1
    if cutoff > budget_r:
        raise PrecisionError(f"{digits} digits of α_{alphabet} need R = {cutoff} > budget {budget_r}")

    weight = cutoff * (cutoff + 1) // 2
    n = choose_length(alphabet, tolerance / (4 * weight), minimum=cutoff + 1)
    if n > budget_n:
        raise PrecisionError(f"{digits} digits of α_{alphabet} need n = {n} > budget {budget_n}")
    logger.debug("alpha_limit alphabet=%d: R = %d, n* = %d", alphabet, cutoff, n)

    counts = border_counts(alphabet, n, range(1, cutoff + 1), jobs=jobs)
    value = Fraction(sum(r * c for r, c in counts.items()), alphabet**n)
    err = weight * finite_n_tail(alphabet, n) + border_tail(alphabet, cutoff)
    return _finish(value, err, digits, guard)

