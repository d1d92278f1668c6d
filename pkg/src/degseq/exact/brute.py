"""Naive enumeration over every edge subset, used as an oracle for the counter."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

import numpy as np

from ..core.constraints import PairConstraint
from ..core.sequence import DegreeSequence
from ..errors import CapacityError

BRUTE_FORCE_MAX_VERTICES = 7
_CHUNK_BITS = 16


def _incidence(n: int, pairs: list[tuple[int, int]]) -> np.ndarray:
    matrix = np.zeros((len(pairs), n), dtype=np.uint8)
    for row, (a, b) in enumerate(pairs):
        matrix[row, a] = 1
        matrix[row, b] = 1
    return matrix


def _degree_rows(n: int, pairs: list[tuple[int, int]]):
    """Yield degree matrices for consecutive blocks of edge subsets of ``pairs``."""

    if n > BRUTE_FORCE_MAX_VERTICES:
        raise CapacityError(
            "brute-force enumeration is limited",
            context={"n": n, "max_vertices": BRUTE_FORCE_MAX_VERTICES},
        )
    incidence = _incidence(n, pairs)
    width = len(pairs)
    shifts = np.arange(width, dtype=np.uint32)
    total = 1 << width
    block = 1 << min(_CHUNK_BITS, width)
    for start in range(0, total, block):
        masks = np.arange(start, min(start + block, total), dtype=np.uint32)
        bits = ((masks[:, None] >> shifts) & 1).astype(np.uint8)
        yield bits @ incidence


@lru_cache(maxsize=None)
def degree_census(n: int) -> Counter:
    """Map every degree sequence on ``n`` vertices to its number of realisations."""

    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    census: Counter = Counter()
    for rows in _degree_rows(n, pairs):
        unique, counts = np.unique(rows, axis=0, return_counts=True)
        for row, count in zip(unique, counts):
            census[tuple(int(x) for x in row)] += int(count)
    return census


def brute_force_count(d: DegreeSequence, constraint: PairConstraint | None = None) -> int:
    constraint = constraint or PairConstraint.complete(d.n)
    if constraint.is_complete:
        return degree_census(d.n).get(d.degrees, 0)
    reduced = constraint.reduce_forced(d)
    if reduced is None:
        return 0
    residual, blocked = reduced
    free_pairs = [pair for pair in constraint.allowable_pairs() if pair not in blocked]
    target = np.asarray(residual, dtype=np.uint8)
    if not free_pairs:
        return int(not any(residual))
    return int(
        sum(int(np.all(rows == target, axis=1).sum()) for rows in _degree_rows(d.n, free_pairs))
    )


__all__ = ["BRUTE_FORCE_MAX_VERTICES", "brute_force_count", "degree_census"]
