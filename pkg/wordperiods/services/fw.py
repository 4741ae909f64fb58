"""
FW-words: the word of length n with periods P over the largest alphabet.

c(P, n), the size of that alphabet, is computed by a recursion on min P
and independently by closing the positional identifications i ~ i + p
under union-find.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from wordperiods.core.exceptions import ValidationError
from wordperiods.domain.word import LETTERS, PeriodSet
from wordperiods.repo.memo import MemoRepo

logger = logging.getLogger(__name__)

_c_memo: MemoRepo[PeriodSet, int] = MemoRepo("c")


# ========== Value Objects ==========

@dataclass(frozen=True, slots=True)
class FWWord:
    """Class label per position; labels numbered by first occurrence"""
    n: int
    classes: tuple[int, ...]
    c: int

    def __post_init__(self) -> None:
        if len(self.classes) != self.n:
            raise ValidationError("one class label per position required")
        seen = -1
        for label in self.classes:
            if label > seen + 1:
                raise ValidationError("class labels must be numbered by first occurrence")
            seen = max(seen, label)
        if seen + 1 != self.c:
            raise ValidationError("labels must cover exactly [0, c)")

    def to_text(self) -> str:
        if self.c > len(LETTERS):
            return ",".join(map(str, self.classes))
        return "".join(LETTERS[i] for i in self.classes)


class DisjointSet:
    """Union by size with path compression over {0, .., size - 1}"""

    def __init__(self, size: int):
        assert size >= 0
        self._parent = list(range(size))
        self._size = [1] * size

    def find(self, x: int) -> int:
        root = x
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[x] != root:
            self._parent[x], x = root, self._parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        x_root, y_root = self.find(x), self.find(y)
        if x_root == y_root:
            return
        if self._size[x_root] < self._size[y_root]:
            x_root, y_root = y_root, x_root
        self._parent[y_root] = x_root
        self._size[x_root] += self._size[y_root]


# ========== Operations ==========

def c_recursive(periods: PeriodSet) -> int:
    """
    c(P, n) with m = min P and Q = (P - m) minus {0} plus {m} on length n - m:

        1                 if m = 1
        n                 if m >= n
        c(Q, n - m)       if 2m <= n
        c(Q, n - m) + 2m - n   if m < n < 2m

    Members of Q above n - m are trivial periods of the shorter word and
    are dropped by PeriodSet.of. The tail recursion runs as a loop.
    """
    cached = _c_memo.get(periods)
    if cached is not None:
        return cached

    extra = 0
    current = periods
    while True:
        m, n = current.least, current.n
        if m == 1:
            result = extra + 1
            break
        if m >= n:
            result = extra + n
            break
        if n < 2 * m:
            extra += 2 * m - n
        current = PeriodSet.of([q - m for q in current.periods if q > m] + [m], n - m)

    return _c_memo.save(periods, result)


def fw_word(periods: PeriodSet) -> FWWord:
    n = periods.n
    ds = DisjointSet(n)
    for p in periods.nontrivial:
        for i in range(n - p):
            ds.union(i, i + p)

    labels: dict[int, int] = {}
    classes = tuple(labels.setdefault(ds.find(i), len(labels)) for i in range(n))
    return FWWord(n=n, classes=classes, c=len(labels))


def g_count(alphabet: int, periods: PeriodSet) -> int:
    """Words over `alphabet` letters having every p in P as a period: ℓ^c(P,n)"""
    if alphabet < 1:
        raise ValidationError("alphabet size must be >= 1")
    return alphabet ** c_recursive(periods)
