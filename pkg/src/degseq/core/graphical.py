"""Graphicality tests and L1 ball predicates."""

from __future__ import annotations

import itertools
from typing import Literal

from ..config.loader import BUILTIN_DEFAULTS
from ..errors import SequenceError
from .sequence import DegreeSequence, ParityClass

GraphicalMode = Literal["erdos_gallai", "koren"]

# Fallback for callers without a loaded configuration (exact.koren_exhaustive_limit).
KOREN_EXHAUSTIVE_LIMIT = int(BUILTIN_DEFAULTS["exact"]["koren_exhaustive_limit"])


def _in_range(d: DegreeSequence) -> bool:
    return d.max_degree < d.n


def erdos_gallai_slacks(degrees: tuple[int, ...]) -> list[int]:
    """Return ``k(k-1) + sum min(d_i, k) - sum_{i<=k} d_i`` for k = 1..n (sorted input)."""

    ordered = sorted(degrees, reverse=True)
    slacks: list[int] = []
    head = 0
    for k in range(1, len(ordered) + 1):
        head += ordered[k - 1]
        tail = sum(min(value, k) for value in ordered[k:])
        slacks.append(k * (k - 1) + tail - head)
    return slacks


def erdos_gallai(d: DegreeSequence) -> bool:
    if d.total % 2 or not _in_range(d):
        return False
    return min(erdos_gallai_slacks(d.degrees)) >= 0


def realisation_gap(d: DegreeSequence) -> int:
    """Minimum slack over the Erdős–Gallai inequalities (negative iff one fails)."""

    return min(erdos_gallai_slacks(d.degrees))


def _koren_violated(degrees: tuple[int, ...], S: set[int], T: set[int]) -> bool:
    n = len(degrees)
    s, t = len(S), len(T)
    lhs = sum(degrees[i] for i in S) - sum(degrees[j] for j in T)
    return lhs > s * (n - 1 - t)


def koren(d: DegreeSequence, *, exhaustive_limit: int = KOREN_EXHAUSTIVE_LIMIT) -> bool:
    """Disjoint-sets form: sum_S d - sum_T d <= s(n-1-t) whenever S, T are disjoint, not both empty.

    Every (S, T) is enumerated up to ``exhaustive_limit`` vertices. Above it, for
    each size s only the extreme choice is checked: S the s largest degrees and T
    the vertices outside S whose degree is below s.
    """

    if d.total % 2 or not _in_range(d):
        return False
    degrees = d.degrees
    n = d.n
    if n <= exhaustive_limit:
        for labels in itertools.product((0, 1, 2), repeat=n):
            S = {i for i, label in enumerate(labels) if label == 1}
            T = {i for i, label in enumerate(labels) if label == 2}
            if (S or T) and _koren_violated(degrees, S, T):
                return False
        return True
    order = sorted(range(n), key=lambda i: degrees[i], reverse=True)
    for s in range(0, n + 1):
        S = set(order[:s])
        T = {j for j in order[s:] if degrees[j] < s}
        if (S or T) and _koren_violated(degrees, S, T):
            return False
    return True


def is_graphical(
    d: DegreeSequence,
    *,
    mode: GraphicalMode = "erdos_gallai",
    exhaustive_limit: int = KOREN_EXHAUSTIVE_LIMIT,
) -> bool:
    """True iff a simple graph on ``[n]`` realises ``d``."""

    if mode == "koren":
        return koren(d, exhaustive_limit=exhaustive_limit)
    if mode != "erdos_gallai":
        raise SequenceError(f"unknown graphicality mode {mode!r}")
    return erdos_gallai(d)


def l1_distance(d1: DegreeSequence, d2: DegreeSequence) -> int:
    if d1.n != d2.n:
        raise SequenceError("sequences differ in length", context={"lengths": [d1.n, d2.n]})
    return sum(abs(x - y) for x, y in zip(d1.degrees, d2.degrees))


def ball_member(d: DegreeSequence, root: DegreeSequence, r: int, parity: ParityClass | None) -> bool:
    """Membership of the L1 ball of radius ``r`` around ``root`` with the given parity."""

    if l1_distance(d, root) > r:
        return False
    return parity is None or d.parity == parity


__all__ = [
    "GraphicalMode",
    "KOREN_EXHAUSTIVE_LIMIT",
    "ball_member",
    "erdos_gallai",
    "erdos_gallai_slacks",
    "is_graphical",
    "koren",
    "l1_distance",
    "realisation_gap",
]
