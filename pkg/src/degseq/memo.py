"""Thread-safe memo table shared by the exact counter and lazy functions."""

from __future__ import annotations

import threading
from collections import OrderedDict
from dataclasses import dataclass
from typing import Any, Callable, Hashable

from .errors import ConfigurationError


@dataclass
class CacheInfo:
    hits: int
    misses: int
    size: int
    evictions: int = 0
    max_entries: int | None = None

    def as_dict(self) -> dict[str, int | None]:
        return {
            "hits": self.hits,
            "misses": self.misses,
            "size": self.size,
            "evictions": self.evictions,
            "max_entries": self.max_entries,
        }


class MemoTable:
    """Dictionary guarded by a lock; concurrent writers of the same key store equal values.

    With ``max_entries`` the table keeps at most that many entries and drops the
    least recently used one first. ``None`` leaves it unbounded.
    """

    _MISSING = object()

    def __init__(self, max_entries: int | None = None) -> None:
        if max_entries is not None and max_entries < 1:
            raise ConfigurationError(
                "memo tables need room for at least one entry", context={"max_entries": max_entries}
            )
        self.max_entries = max_entries
        self._values: OrderedDict[Hashable, Any] = OrderedDict()
        self._lock = threading.Lock()
        self._hits = 0
        self._misses = 0
        self._evictions = 0

    def get(self, key: Hashable) -> Any:
        with self._lock:
            value = self._values.get(key, self._MISSING)
            if value is self._MISSING:
                self._misses += 1
            else:
                self._hits += 1
                if self.max_entries is not None:
                    self._values.move_to_end(key)
            return value

    def put(self, key: Hashable, value: Any) -> Any:
        with self._lock:
            self._values[key] = value
            if self.max_entries is not None:
                self._values.move_to_end(key)
                while len(self._values) > self.max_entries:
                    self._values.popitem(last=False)
                    self._evictions += 1
        return value

    def get_or_compute(self, key: Hashable, compute: Callable[[], Any]) -> Any:
        value = self.get(key)
        if value is self._MISSING:
            value = self.put(key, compute())
        return value

    def missing(self, value: Any) -> bool:
        return value is self._MISSING

    def clear(self) -> None:
        with self._lock:
            self._values.clear()
            self._hits = self._misses = self._evictions = 0

    def __len__(self) -> int:
        return len(self._values)

    def info(self) -> CacheInfo:
        with self._lock:
            return CacheInfo(
                hits=self._hits,
                misses=self._misses,
                size=len(self._values),
                evictions=self._evictions,
                max_entries=self.max_entries,
            )


__all__ = ["CacheInfo", "MemoTable"]
