"""
Memo tables for the recursive counters.

A MemoRepo is a write-once map: the first value saved for a key wins and
later saves of the same key return it. Lookups and saves are safe from
several threads.
"""
from __future__ import annotations

import threading
from typing import Generic, Hashable, TypeVar

K = TypeVar("K", bound=Hashable)
V = TypeVar("V")


class MemoRepo(Generic[K, V]):
    def __init__(self, name: str):
        self.name = name
        self._data: dict[K, V] = {}
        self._lock = threading.Lock()

    def get(self, key: K) -> V | None:
        return self._data.get(key)

    def save(self, key: K, value: V) -> V:
        with self._lock:
            return self._data.setdefault(key, value)

    def clear(self) -> None:
        with self._lock:
            self._data.clear()

    def __contains__(self, key: object) -> bool:
        return key in self._data

    def __len__(self) -> int:
        return len(self._data)
