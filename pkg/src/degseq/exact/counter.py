"""Memoised exact counting of labelled simple graphs with a given degree sequence."""

from __future__ import annotations

import itertools
from math import comb
from typing import Iterator

from ..core.constraints import Pair, PairConstraint
from ..core.graphical import erdos_gallai_slacks
from ..core.sequence import DegreeSequence
from ..errors import CapacityError, SequenceError
from ..logging_config import get_logger
from ..memo import CacheInfo, MemoTable

LOGGER = get_logger(__name__)

DEFAULT_MAX_VERTICES = 16

# (labelled vertices still in a forbidden pair, their residuals)
Distinguished = tuple[tuple[int, int], ...]
# classes[i] = number of exchangeable vertices with residual i + 1
Classes = tuple[int, ...]
MemoKey = tuple[Distinguished, Classes, frozenset[Pair]]


def _canonical(
    distinguished: list[tuple[int, int]] | Distinguished,
    classes: list[int] | Classes,
    forbidden: frozenset[Pair],
) -> MemoKey:
    """Canonical state: finished vertices dropped, unconstrained vertices pooled by residual."""

    alive = {vertex for vertex, residual in distinguished if residual > 0}
    forbidden = frozenset(pair for pair in forbidden if pair[0] in alive and pair[1] in alive)
    constrained = {vertex for pair in forbidden for vertex in pair}
    pooled = list(classes)
    kept: list[tuple[int, int]] = []
    for vertex, residual in distinguished:
        if residual <= 0:
            continue
        if vertex in constrained:
            kept.append((vertex, residual))
            continue
        while len(pooled) < residual:
            pooled.append(0)
        pooled[residual - 1] += 1
    while pooled and pooled[-1] == 0:
        pooled.pop()
    return tuple(sorted(kept)), tuple(pooled), forbidden


def _choose_from_classes(classes: Classes | list[int], k: int) -> Iterator[tuple[int, Classes]]:
    """Yield ``(ways, new_classes)`` for every way of picking ``k`` pooled vertices.

    Picked vertices lose one unit of residual degree.
    """

    size = len(classes)
    below = [0] * (size + 1)
    for index in range(size):
        below[index + 1] = below[index] + classes[index]
    picks = [0] * size

    def _walk(index: int, remaining: int) -> Iterator[tuple[int, Classes]]:
        if index < 0:
            if remaining == 0:
                ways = 1
                updated = list(classes)
                for position, taken in enumerate(picks):
                    if taken:
                        ways *= comb(classes[position], taken)
                        updated[position] -= taken
                        if position > 0:
                            updated[position - 1] += taken
                yield ways, tuple(updated)
            return
        upper = min(classes[index], remaining)
        for taken in range(upper, -1, -1):
            if remaining - taken > below[index]:
                break
            picks[index] = taken
            yield from _walk(index - 1, remaining - taken)
        picks[index] = 0

    if k == 0:
        yield 1, tuple(classes)
        return
    yield from _walk(size - 1, k)


class GraphCounter:
    """Counts realisations N(d) under a :class:`PairConstraint`.

    Constrained vertices are eliminated first, then the pooled vertex of
    highest residual degree. Memo keys merge vertices that no remaining
    constraint distinguishes, so the table is shared across queries.
    """

    def __init__(self, max_vertices: int = DEFAULT_MAX_VERTICES, memo: MemoTable | None = None) -> None:
        self.max_vertices = max_vertices
        self._memo = memo if memo is not None else MemoTable()

    def cache_info(self) -> CacheInfo:
        return self._memo.info()

    def count(self, d: DegreeSequence, constraint: PairConstraint | None = None) -> int:
        constraint = constraint or PairConstraint.complete(d.n)
        if constraint.n != d.n:
            raise SequenceError(
                "constraint and sequence disagree on n", context={"n": d.n, "constraint_n": constraint.n}
            )
        if d.n > self.max_vertices:
            raise CapacityError(
                f"exact counting is capped at {self.max_vertices} vertices",
                context={"n": d.n, "max_vertices": self.max_vertices},
            )
        reduced = constraint.reduce_forced(d)
        if reduced is None:
            return 0
        residual, forbidden = reduced
        constrained = {vertex for pair in forbidden for vertex in pair}
        distinguished = [(vertex, residual[vertex]) for vertex in sorted(constrained)]
        classes: list[int] = []
        for vertex, value in enumerate(residual):
            if vertex in constrained or value == 0:
                continue
            while len(classes) < value:
                classes.append(0)
            classes[value - 1] += 1
        key = _canonical(distinguished, classes, forbidden)
        result = self._count(key)
        LOGGER.debug(
            "Counted realisations",
            extra={"degrees": list(d.degrees), "cache": self._memo.info().as_dict()},
        )
        return result

    def _count(self, key: MemoKey) -> int:
        cached = self._memo.get(key)
        if not self._memo.missing(cached):
            return cached
        return self._memo.put(key, self._expand(key))

    def _expand(self, key: MemoKey) -> int:
        distinguished, classes, forbidden = key
        residuals = [residual for _, residual in distinguished]
        for index, size in enumerate(classes):
            residuals.extend([index + 1] * size)
        if not residuals:
            return 1
        if sum(residuals) % 2 or max(residuals) >= len(residuals):
            return 0
        if min(erdos_gallai_slacks(tuple(residuals))) < 0:
            return 0

        total = 0
        if distinguished:
            (vertex, need), rest = distinguished[0], list(distinguished[1:])
            eligible = [
                index
                for index, (other, _) in enumerate(rest)
                if (min(vertex, other), max(vertex, other)) not in forbidden
            ]
            pooled = sum(classes)
            for labelled in range(0, min(need, len(eligible)) + 1):
                from_pool = need - labelled
                if from_pool > pooled:
                    continue
                for chosen in itertools.combinations(eligible, labelled):
                    updated = list(rest)
                    for index in chosen:
                        other, residual = updated[index]
                        updated[index] = (other, residual - 1)
                    for ways, new_classes in _choose_from_classes(classes, from_pool):
                        total += ways * self._count(_canonical(updated, new_classes, forbidden))
            return total

        need = len(classes)
        remaining = list(classes)
        remaining[need - 1] -= 1
        for ways, new_classes in _choose_from_classes(remaining, need):
            total += ways * self._count(_canonical((), new_classes, frozenset()))
        return total


__all__ = ["DEFAULT_MAX_VERTICES", "GraphCounter", "MemoKey"]
