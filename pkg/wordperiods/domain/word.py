"""
Word Domain Layer
Words over an integer alphabet, their borders and periods.

Conventions: every word of length n has the trivial period n and the
empty border, so PeriodSet always contains n and BorderSet always contains 0.
"""
from __future__ import annotations

import string
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from wordperiods.core.exceptions import ValidationError

LETTERS = string.ascii_lowercase + string.ascii_uppercase


# ========== Value Objects ==========

@dataclass(frozen=True, slots=True)
class Word(Sequence):
    """A word as a tuple of letter indices in [0, alphabet)"""
    letters: tuple[int, ...]
    alphabet: int
    symbols: tuple[str, ...] | None = field(default=None, compare=False)  # index -> original character

    def __post_init__(self) -> None:
        if self.alphabet < 1:
            raise ValidationError("alphabet size must be >= 1")
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.symbols is not None and any(i >= len(self.symbols) for i in self.letters):
            raise ValidationError("every letter index needs a symbol")
        for letter in self.letters:
            if not 0 <= letter < self.alphabet:
                raise ValidationError(
                    f"letter index {letter} outside alphabet of size {self.alphabet}"
                )

    @staticmethod
    def from_text(text: str, alphabet: int | None = None) -> Word:
        """Index letters by first occurrence: 'abracadabra' -> 0,1,2,0,3,..."""
        index: dict[str, int] = {}
        letters = tuple(index.setdefault(ch, len(index)) for ch in text)
        return Word(
            letters,
            alphabet if alphabet is not None else max(len(index), 1),
            symbols=tuple(index),
        )

    def to_text(self) -> str:
        if self.symbols is not None:
            return "".join(self.symbols[i] for i in self.letters)
        if self.alphabet > len(LETTERS):
            return ",".join(str(i) for i in self.letters)
        return "".join(LETTERS[i] for i in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True, slots=True)
class PeriodSet:
    """
    Claimed periods of a word of length n, sorted, always containing n.

    Use PeriodSet.of() to canonicalize arbitrary input; the constructor
    only accepts canonical data.
    """
    n: int
    periods: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValidationError("word length must be >= 1")
        if not self.periods or self.periods[-1] != self.n:
            raise ValidationError(f"period set must contain the length {self.n}")
        if self.periods[0] < 1:
            raise ValidationError("periods must be positive")
        if any(a >= b for a, b in zip(self.periods, self.periods[1:])):
            raise ValidationError("periods must be strictly increasing")

    @staticmethod
    def of(periods: Iterable[int], n: int) -> PeriodSet:
        """Canonical form: drop members above n (trivial), add n, sort"""
        members = set(periods)
        if any(p < 1 for p in members):
            raise ValidationError(f"periods must be positive, got {sorted(members)}")
        if n < 1:
            raise ValidationError("word length must be >= 1")
        members = {p for p in members if p <= n}
        members.add(n)
        return PeriodSet(n, tuple(sorted(members)))

    @property
    def least(self) -> int:
        return self.periods[0]

    @property
    def nontrivial(self) -> tuple[int, ...]:
        return self.periods[:-1]

    def shifted(self, p: int) -> PeriodSet:
        """P - p on the prefix of length n - p; nonpositive residues vanish"""
        return PeriodSet.of((q - p for q in self.periods if q > p), self.n - p)

    def extended(self, *extra: int) -> PeriodSet:
        return PeriodSet.of((*self.periods, *extra), self.n)

    def borders(self) -> BorderSet:
        return BorderSet(self.n, tuple(sorted(self.n - p for p in self.periods)))

    def __iter__(self):
        return iter(self.periods)

    def __contains__(self, p: object) -> bool:
        return p in self.periods

    def __len__(self) -> int:
        return len(self.periods)

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.periods)) + "}"


@dataclass(frozen=True, slots=True)
class BorderSet:
    """Border lengths of a word of length n, sorted, always containing 0"""
    n: int
    borders: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.borders or self.borders[0] != 0:
            raise ValidationError("border set must contain 0")
        if self.borders[-1] >= self.n:
            raise ValidationError("borders must be shorter than the word")

    def periods(self) -> PeriodSet:
        return PeriodSet(self.n, tuple(sorted(self.n - r for r in self.borders)))

    def __iter__(self):
        return iter(self.borders)

    def __contains__(self, r: object) -> bool:
        return r in self.borders

    def __len__(self) -> int:
        return len(self.borders)


def parse_periods(text: str, n: int) -> PeriodSet:
    """Parse a comma separated period list such as '4,6'"""
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ValidationError(f"Malformed period list: {text!r}")
    if not values:
        raise ValidationError("Empty period list")
    return PeriodSet.of(values, n)


# ========== Operations ==========

def failure_function(w: Sequence) -> list[int]:
    """fail[i] = length of the longest proper border of w[:i+1]"""
    fail = [0] * len(w)
    k = 0
    for i in range(1, len(w)):
        while k > 0 and w[i] != w[k]:
            k = fail[k - 1]
        if w[i] == w[k]:
            k += 1
        fail[i] = k
    return fail


def _require_nonempty(w: Sequence) -> int:
    n = len(w)
    if n == 0:
        raise ValidationError("the empty word has no periods or borders")
    return n


def border_lengths(w: Sequence) -> BorderSet:
    n = _require_nonempty(w)
    fail = failure_function(w)
    borders = [0]
    r = fail[-1]
    while r > 0:
        borders.append(r)
        r = fail[r - 1]
    return BorderSet(n, tuple(sorted(borders)))


def period_lengths(w: Sequence) -> PeriodSet:
    return border_lengths(w).periods()


def max_border(w: Sequence) -> int:
    _require_nonempty(w)
    return failure_function(w)[-1]


def least_period(w: Sequence) -> int:
    return len(w) - max_border(w)


def is_unbordered(w: Sequence) -> bool:
    return max_border(w) == 0
