"""Allowable-pair constraints (forbidden and forced edges)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from ..errors import SequenceError
from .sequence import DegreeSequence

Pair = tuple[int, int]


def normalise_pair(a: int, b: int) -> Pair:
    if a == b:
        raise SequenceError("a pair needs distinct endpoints", context={"pair": [a, b]})
    return (a, b) if a < b else (b, a)


def parse_pair(text: str) -> Pair:
    """Parse a 1-based ``"a-b"`` token into a 0-based pair."""

    try:
        left, right = text.split("-", 1)
        a, b = int(left) - 1, int(right) - 1
    except ValueError as exc:
        raise SequenceError(f"pairs must look like 'a-b' (received {text!r})") from exc
    if a < 0 or b < 0:
        raise SequenceError(f"vertices are numbered from 1 (received {text!r})")
    return normalise_pair(a, b)


@dataclass(frozen=True)
class PairConstraint:
    """Forbidden and forced vertex pairs on ``[n]``.

    The allowable set is every 2-subset minus ``forbidden``; forced pairs are
    allowable pairs every counted realisation must contain.
    """

    n: int
    forbidden: frozenset[Pair] = field(default_factory=frozenset)
    forced: frozenset[Pair] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        forbidden = frozenset(normalise_pair(*pair) for pair in self.forbidden)
        forced = frozenset(normalise_pair(*pair) for pair in self.forced)
        for pair in forbidden | forced:
            if pair[1] >= self.n:
                raise SequenceError("pair endpoint out of range", context={"pair": list(pair), "n": self.n})
        overlap = forbidden & forced
        if overlap:
            raise SequenceError(
                "a pair cannot be both forbidden and forced",
                context={"pairs": sorted(list(pair) for pair in overlap)},
            )
        object.__setattr__(self, "forbidden", forbidden)
        object.__setattr__(self, "forced", forced)

    @classmethod
    def complete(cls, n: int) -> "PairConstraint":
        return cls(n)

    @property
    def is_complete(self) -> bool:
        return not self.forbidden and not self.forced

    def allows(self, a: int, b: int) -> bool:
        return a != b and normalise_pair(a, b) not in self.forbidden

    def allowable(self, a: int) -> frozenset[int]:
        """The projection of the allowable set onto pairs at ``a``."""

        return frozenset(v for v in range(self.n) if v != a and self.allows(a, v))

    def allowable_pairs(self) -> list[Pair]:
        return [(a, b) for a in range(self.n) for b in range(a + 1, self.n) if (a, b) not in self.forbidden]

    def with_forbidden(self, pairs: Iterable[Pair]) -> "PairConstraint":
        return PairConstraint(self.n, self.forbidden | {normalise_pair(*p) for p in pairs}, self.forced)

    def with_forced(self, pairs: Iterable[Pair]) -> "PairConstraint":
        return PairConstraint(self.n, self.forbidden, self.forced | {normalise_pair(*p) for p in pairs})

    def reduce_forced(self, d: DegreeSequence) -> tuple[tuple[int, ...], frozenset[Pair]] | None:
        """Remove forced edges from ``d``.

        Returns the residual degrees and the forbidden set with the forced pairs
        added, or ``None`` when a residual degree would be negative.
        """

        residual = list(d.degrees)
        for a, b in self.forced:
            residual[a] -= 1
            residual[b] -= 1
        if residual and min(residual) < 0:
            return None
        return tuple(residual), self.forbidden | self.forced

    def fingerprint(self) -> tuple[tuple[Pair, ...], tuple[Pair, ...]]:
        return tuple(sorted(self.forbidden)), tuple(sorted(self.forced))

    def as_dict(self) -> dict[str, object]:
        return {
            "n": self.n,
            "forbidden": [[a + 1, b + 1] for a, b in sorted(self.forbidden)],
            "forced": [[a + 1, b + 1] for a, b in sorted(self.forced)],
        }


__all__ = ["Pair", "PairConstraint", "normalise_pair", "parse_pair"]
