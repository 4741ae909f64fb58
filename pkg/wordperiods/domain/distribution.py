from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from wordperiods.core.exceptions import ValidationError

Method = Literal["oracle", "recurrence", "moebius", "series"]


@dataclass(frozen=True)
class DistributionTable:
    """
    Number of words in Σ_ℓ^n by maximum border length r (least period n - r).

    Produced both by exhaustive enumeration and by the recurrences;
    two tables are equal when their counts are.
    """
    alphabet: int
    n: int
    counts: dict[int, int]
    method: Method = field(default="recurrence", compare=False)

    def __post_init__(self) -> None:
        if self.alphabet < 1 or self.n < 1:
            raise ValidationError("alphabet size and length must be >= 1")
        if any(not 0 <= r < self.n for r in self.counts):
            raise ValidationError("border lengths must lie in [0, n)")
        if sum(self.counts.values()) != self.total:
            raise ValidationError(
                f"counts sum to {sum(self.counts.values())}, expected {self.total}"
            )

    @property
    def total(self) -> int:
        return self.alphabet**self.n

    def count(self, r: int) -> int:
        return self.counts.get(r, 0)

    def probability(self, r: int) -> Fraction:
        """λ_ℓ(r, n)"""
        return Fraction(self.count(r), self.total)

    def expected_border(self) -> Fraction:
        """α_ℓ(n)"""
        return Fraction(sum(r * c for r, c in self.counts.items()), self.total)

    def by_period(self) -> dict[int, int]:
        """Same table keyed by least period p = n - r"""
        return {self.n - r: c for r, c in sorted(self.counts.items(), reverse=True)}

    def rows(self) -> list[tuple[int, int]]:
        """(r, count) for every r in [0, n), zero rows included"""
        return [(r, self.count(r)) for r in range(self.n)]
