"""
Decimal values with a rigorous absolute error radius.

An ErrDecimal (value, err) asserts |true - value| <= err. Values are built
from exact Fractions; err is always rounded up.
"""
from __future__ import annotations

import decimal
import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

from wordperiods.core.exceptions import PrecisionError, ValidationError

# Sums of our values and radii are exact at this precision.
DECIMAL_HIGH_PREC_CONTEXT = decimal.Context(prec=2000, rounding=decimal.ROUND_HALF_EVEN)
DECIMAL_ERR_CONTEXT = decimal.Context(prec=2000, rounding=decimal.ROUND_CEILING)

# radii keep this many more fractional places than their value
ERR_EXTRA_PLACES = 5


def fraction_to_decimal(q: Fraction, places: int) -> Decimal:
    """Nearest decimal with `places` fractional digits (ties to even)"""
    scaled = round(q * 10**places)
    return Decimal(scaled).scaleb(-places, DECIMAL_HIGH_PREC_CONTEXT)


def fraction_ceiling(q: Fraction, places: int) -> Decimal:
    """Smallest decimal with `places` fractional digits that is >= q"""
    return Decimal(math.ceil(q * 10**places)).scaleb(-places, DECIMAL_HIGH_PREC_CONTEXT)


@dataclass(frozen=True, slots=True)
class ErrDecimal:
    value: Decimal
    err: Decimal

    def __post_init__(self) -> None:
        if not isinstance(self.value, Decimal) or not isinstance(self.err, Decimal):
            raise TypeError("ErrDecimal value and err must be Decimal")
        if self.err < 0:
            raise ValidationError("error radius cannot be negative")

    @staticmethod
    def from_fraction(q: Fraction, err: Fraction, places: int) -> ErrDecimal:
        """Round q to `places` decimals and widen err by half a unit there"""
        value = fraction_to_decimal(q, places)
        total = err if Fraction(value) == q else err + Fraction(1, 2 * 10**places)
        return ErrDecimal(value, fraction_ceiling(total, places + ERR_EXTRA_PLACES))

    @staticmethod
    def exact(q: Fraction | int, places: int = 0) -> ErrDecimal:
        return ErrDecimal.from_fraction(Fraction(q), Fraction(0), places)

    # ----- arithmetic -----

    def __add__(self, other: ErrDecimal) -> ErrDecimal:
        with decimal.localcontext(DECIMAL_HIGH_PREC_CONTEXT):
            value = self.value + other.value
        with decimal.localcontext(DECIMAL_ERR_CONTEXT):
            err = self.err + other.err
        return ErrDecimal(value, err)

    def __neg__(self) -> ErrDecimal:
        return ErrDecimal(-self.value, self.err)

    def __sub__(self, other: ErrDecimal) -> ErrDecimal:
        return self + (-other)

    # ----- queries -----

    def contains(self, x: Fraction | Decimal | int) -> bool:
        return abs(Fraction(self.value) - Fraction(x)) <= Fraction(self.err)

    def overlaps(self, other: ErrDecimal) -> bool:
        """True when both enclosures can describe the same number"""
        diff = abs(Fraction(self.value) - Fraction(other.value))
        return diff <= Fraction(self.err) + Fraction(other.err)

    def max_digits(self) -> int:
        """Largest D for which render(D) is permitted"""
        if self.err == 0:
            return -self.value.as_tuple().exponent
        d = 0
        while self.err < Decimal(1).scaleb(-(d + 1)) / 2:
            d += 1
        return d

    def render(self, digits: int) -> str:
        """Round half-even to `digits` decimals; only if err < 10^-digits / 2"""
        if self.err >= Decimal(1).scaleb(-digits) / 2:
            raise PrecisionError(
                f"error radius {self.err:.3E} too large to print {digits} digits"
            )
        with decimal.localcontext(DECIMAL_HIGH_PREC_CONTEXT):
            rounded = self.value.quantize(Decimal(1).scaleb(-digits), rounding=decimal.ROUND_HALF_EVEN)
        return f"{rounded:f}"

    def __str__(self) -> str:
        return f"{self.value} ± {self.err:.3E}"
