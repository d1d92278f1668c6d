"""Lazily evaluated, memoised edge and ratio functions with declared domains."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterator, Union

from ..core.graphical import l1_distance
from ..core.sequence import DegreeSequence, ParityClass
from ..errors import DomainError, DomainExhaustedError
from ..memo import MemoTable

Value = Union[Fraction, float, int]
Evaluator = Callable[[int, int, DegreeSequence], Value]


class ArithmeticMode(str, enum.Enum):
    EXACT = "exact"
    FLOAT = "float"


@dataclass(frozen=True)
class OperatorConfig:
    k0: int = 4
    mode: ArithmeticMode = ArithmeticMode.FLOAT
    radius: int | None = None

    def __post_init__(self) -> None:
        if self.k0 < 1:
            raise DomainError("k0 must be at least 1", context={"k0": self.k0})
        object.__setattr__(self, "mode", ArithmeticMode(self.mode))

    @property
    def shrink(self) -> int:
        """L1 radius lost by one application of the combined operator."""

        return 2 * self.k0 + 2

    def scalar(self, value: int | Fraction | float) -> Value:
        if self.mode is ArithmeticMode.EXACT and not isinstance(value, float):
            return Fraction(value)
        return float(value)

    def as_dict(self) -> dict[str, Any]:
        return {"k0": self.k0, "mode": self.mode.value, "radius": self.radius}


@dataclass(frozen=True)
class Domain:
    """Sequences within L1 ``radius`` of ``root`` whose entries are at least ``floor``.

    ``root=None`` or ``radius=None`` declares the whole non-negative orthant.
    """

    root: DegreeSequence | None = None
    radius: int | None = None
    floor: int = 0

    def contains(self, d: DegreeSequence) -> bool:
        if self.floor and min(d.degrees) < self.floor:
            return False
        if self.root is None or self.radius is None:
            return True
        if d.n != self.root.n:
            return False
        return l1_distance(d, self.root) <= self.radius

    def shrink(self, by: int) -> "Domain":
        if self.radius is None:
            return self
        if self.radius - by < 0:
            raise DomainExhaustedError(
                "domain radius exhausted",
                context={"radius": self.radius, "required": by},
            )
        return Domain(self.root, self.radius - by, self.floor)

    def as_dict(self) -> dict[str, Any]:
        return {
            "root": None if self.root is None else list(self.root.degrees),
            "radius": self.radius,
            "floor": self.floor,
        }


def _shell(root: tuple[int, ...], distance: int, floor: int) -> Iterator[tuple[int, ...]]:
    """Vectors at exactly L1 ``distance`` from ``root`` with entries >= ``floor``."""

    last = len(root) - 1
    prefix: list[int] = []

    def _walk(index: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if index == last:
            for delta in ((0,) if remaining == 0 else (-remaining, remaining)):
                if root[index] + delta >= floor:
                    yield tuple(prefix) + (root[index] + delta,)
            return
        for size in range(remaining + 1):
            for delta in ((0,) if size == 0 else (-size, size)):
                value = root[index] + delta
                if value < floor:
                    continue
                prefix.append(value)
                yield from _walk(index + 1, remaining - size)
                prefix.pop()

    yield from _walk(0, distance)


@dataclass(frozen=True)
class DomainLadder:
    """Ω⁽⁰⁾ = ball of ``radius`` around ``root``; Ω⁽ˢ⁾ keeps points whose s-balls stay inside."""

    root: DegreeSequence
    radius: int

    def level(self, s: int) -> Domain:
        if s > self.radius:
            raise DomainExhaustedError(
                "ladder too small for the requested level",
                context={"radius": self.radius, "required_radius": s},
            )
        return Domain(self.root, self.radius - s, s if s >= 1 else 0)

    def contains(self, d: DegreeSequence, s: int = 0) -> bool:
        return s <= self.radius and self.level(s).contains(d)

    def points(
        self, s: int, *, parity: ParityClass | None = ParityClass.EVEN, limit: int | None = None
    ) -> Iterator[DegreeSequence]:
        """Enumerate Ω⁽ˢ⁾ nearest-first; empty when ``s`` exceeds the radius."""

        if s > self.radius:
            return
        floor = s if s >= 1 else 0
        produced = 0
        for distance in range(self.radius - s + 1):
            for degrees in _shell(self.root.degrees, distance, floor):
                if parity is not None and ParityClass.of(sum(degrees)) != parity:
                    continue
                yield DegreeSequence(degrees)
                produced += 1
                if limit is not None and produced >= limit:
                    return


class _MemoisedFunction:
    kind = "function"

    def __init__(
        self,
        evaluator: Evaluator,
        domain: Domain | None = None,
        *,
        name: str = "f",
        exchangeable: bool = False,
    ) -> None:
        self._evaluator = evaluator
        self.domain = domain or Domain()
        self.name = name
        self.exchangeable = exchangeable
        self._memo = MemoTable()

    def _lookup(self, first: int, second: int, d: DegreeSequence) -> Value:
        key = (first, second, d.degrees)
        cached = self._memo.get(key)
        if not self._memo.missing(cached):
            return cached
        if not self.domain.contains(d):
            raise DomainError(
                f"{self.kind} {self.name} evaluated outside its domain",
                context={"degrees": list(d.degrees), "domain": self.domain.as_dict()},
            )
        return self._memo.put(key, self._evaluator(first, second, d))

    def cache_size(self) -> int:
        return len(self._memo)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name={self.name!r}, domain={self.domain.as_dict()})"


class EdgeFunction(_MemoisedFunction):
    """p_av(d) for ordered pairs (a, v)."""

    kind = "edge function"

    def __call__(self, a: int, v: int, d: DegreeSequence) -> Value:
        return self._lookup(a, v, d)

    def scaled(self, factor: Value, *, name: str | None = None) -> "EdgeFunction":
        return EdgeFunction(
            lambda a, v, d: self(a, v, d) * factor,
            self.domain,
            name=name or f"{factor}*{self.name}",
            exchangeable=self.exchangeable,
        )


class RatioFunction(_MemoisedFunction):
    """r_ab(d) for ordered pairs (a, b); r_aa = 1."""

    kind = "ratio function"

    def __call__(self, a: int, b: int, d: DegreeSequence) -> Value:
        if a == b:
            return 1
        return self._lookup(a, b, d)


__all__ = [
    "ArithmeticMode",
    "Domain",
    "DomainLadder",
    "EdgeFunction",
    "Evaluator",
    "OperatorConfig",
    "RatioFunction",
    "Value",
]
