"""Max-log-ratio distance between edge functions over a ladder level."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Iterable

from ..core.constraints import PairConstraint
from ..core.sequence import DegreeSequence, ParityClass
from ..logging_config import get_logger
from .functions import DomainLadder, EdgeFunction

LOGGER = get_logger(__name__)


@dataclass
class ChiMeasurement:
    value: float
    level: int
    points: int
    pairs_evaluated: int
    truncated: bool
    worst: dict[str, Any] | None = field(default=None)

    @property
    def empty(self) -> bool:
        return self.points == 0

    def as_dict(self) -> dict[str, Any]:
        return {
            "value": self.value,
            "level": self.level,
            "points": self.points,
            "pairs_evaluated": self.pairs_evaluated,
            "truncated": self.truncated,
            "worst": self.worst,
        }


def representative_pairs(d: DegreeSequence) -> list[tuple[int, int]]:
    """One ordered pair (c, w), c != w, per pair of occurring degree values."""

    by_degree: dict[int, list[int]] = {}
    for vertex, degree in enumerate(d.degrees):
        by_degree.setdefault(degree, []).append(vertex)
    pairs: list[tuple[int, int]] = []
    for first in sorted(by_degree):
        for second in sorted(by_degree):
            c = by_degree[first][0]
            candidates = [w for w in by_degree[second] if w != c]
            if candidates:
                pairs.append((c, candidates[0]))
    return pairs


def _pairs_for(
    d: DegreeSequence, constraint: PairConstraint | None, compressed: bool
) -> Iterable[tuple[int, int]]:
    if compressed:
        return representative_pairs(d)
    constraint = constraint or PairConstraint.complete(d.n)
    return [(c, w) for c in range(d.n) for w in sorted(constraint.allowable(c))]


def measure_chi(
    p1: EdgeFunction,
    p2: EdgeFunction,
    ladder: DomainLadder,
    s: int,
    *,
    constraint: PairConstraint | None = None,
    parity: ParityClass | None = None,
    limit: int | None = None,
) -> ChiMeasurement:
    """χ⁽ˢ⁾(p1, p2) = max |log(p1_cw(d)/p2_cw(d))| over allowable (c, w) and d in Ω⁽ˢ⁾.

    Both functions vanishing counts as agreement; exactly one vanishing or a sign
    mismatch gives ``inf``. An empty level measures 0 with ``points == 0``.
    ``parity`` restricts the visited points to one parity class. With ``limit``
    only the nearest points are visited.
    """

    compressed = (
        p1.exchangeable and p2.exchangeable and (constraint is None or constraint.is_complete)
    )
    worst = 0.0
    worst_at: dict[str, Any] | None = None
    points = pairs_evaluated = 0
    fetch = None if limit is None else limit + 1
    for d in ladder.points(s, parity=parity, limit=fetch):
        if limit is not None and points >= limit:
            LOGGER.info("chi truncated", extra={"level": s, "limit": limit})
            return ChiMeasurement(worst, s, points, pairs_evaluated, True, worst_at)
        points += 1
        for c, w in _pairs_for(d, constraint, compressed):
            pairs_evaluated += 1
            x, y = p1(c, w, d), p2(c, w, d)
            if x == 0 and y == 0:
                continue
            if x * y <= 0:
                where = {"c": c, "w": w, "degrees": list(d.degrees)}
                return ChiMeasurement(math.inf, s, points, pairs_evaluated, False, where)
            gap = abs(math.log(x / y))
            if gap > worst:
                worst = gap
                worst_at = {"c": c, "w": w, "degrees": list(d.degrees)}
    return ChiMeasurement(worst, s, points, pairs_evaluated, False, worst_at)


def chi_distance(
    p1: EdgeFunction,
    p2: EdgeFunction,
    ladder: DomainLadder,
    s: int,
    *,
    constraint: PairConstraint | None = None,
    parity: ParityClass | None = None,
    limit: int | None = None,
) -> float:
    return measure_chi(p1, p2, ladder, s, constraint=constraint, parity=parity, limit=limit).value


__all__ = ["ChiMeasurement", "chi_distance", "measure_chi", "representative_pairs"]
