"""Exact probabilities and count ratios built on :class:`GraphCounter`."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from ..core.constraints import Pair, PairConstraint, normalise_pair
from ..core.sequence import DegreeSequence
from ..errors import SequenceError, UndefinedProbabilityError
from .counter import GraphCounter

ExactCount = int
ExactProb = Fraction


def _check_vertex(d: DegreeSequence, *vertices: int) -> None:
    for vertex in vertices:
        if not 0 <= vertex < d.n:
            raise SequenceError("vertex out of range", context={"vertex": vertex, "n": d.n})


def lowered(d: DegreeSequence, *vertices: int) -> DegreeSequence | None:
    """``d - e_a - e_b - ...`` or ``None`` when an entry would go negative."""

    values = list(d.degrees)
    for vertex in vertices:
        values[vertex] -= 1
        if values[vertex] < 0:
            return None
    return DegreeSequence(tuple(values))


def switching_bound(d: DegreeSequence) -> Fraction | float:
    """Upper bound Δ²/(dn(1 - Δ(Δ+2)/dn)) on every edge probability; ``inf`` when vacuous."""

    delta = d.max_degree
    denominator = d.total - delta * (delta + 2)
    if denominator <= 0:
        return math.inf
    return Fraction(delta * delta, denominator)


class ExactOracle:
    """Exact counts, edge probabilities and ratios for small ``n``."""

    def __init__(self, counter: GraphCounter | None = None) -> None:
        self.counter = counter or GraphCounter()

    def _constraint(self, d: DegreeSequence, constraint: PairConstraint | None) -> PairConstraint:
        return constraint or PairConstraint.complete(d.n)

    def count(self, d: DegreeSequence | None, constraint: PairConstraint | None = None) -> ExactCount:
        """N(d); ``None`` stands for a sequence with a negative entry and counts 0."""

        if d is None:
            return 0
        return self.counter.count(d, self._constraint(d, constraint))

    def count_with(
        self, d: DegreeSequence | None, edges: Iterable[Pair], constraint: PairConstraint | None = None
    ) -> ExactCount:
        """N_E(d): realisations containing every edge of ``edges``."""

        if d is None:
            return 0
        constraint = self._constraint(d, constraint)
        pairs = {normalise_pair(*pair) for pair in edges}
        if pairs & constraint.forbidden:
            return 0
        return self.counter.count(d, constraint.with_forced(pairs))

    def count_avoiding(
        self, d: DegreeSequence | None, edges: Iterable[Pair], constraint: PairConstraint | None = None
    ) -> ExactCount:
        """Realisations containing none of ``edges``."""

        if d is None:
            return 0
        constraint = self._constraint(d, constraint)
        pairs = {normalise_pair(*pair) for pair in edges}
        if pairs & constraint.forced:
            return 0
        return self.counter.count(d, constraint.with_forbidden(pairs))

    def _require_realisable(self, d: DegreeSequence, constraint: PairConstraint) -> int:
        total = self.counter.count(d, constraint)
        if total == 0:
            raise UndefinedProbabilityError(
                "probability is undefined: the sequence has no realisation",
                context={"degrees": list(d.degrees)},
            )
        return total

    def edge_prob(
        self, d: DegreeSequence, a: int, v: int, constraint: PairConstraint | None = None
    ) -> ExactProb:
        """P_av(d) = N_av(d)/N(d)."""

        _check_vertex(d, a, v)
        constraint = self._constraint(d, constraint)
        total = self._require_realisable(d, constraint)
        if a == v or not constraint.allows(a, v):
            return Fraction(0)
        return Fraction(self.count_with(d, [(a, v)], constraint), total)

    def path_prob(
        self, d: DegreeSequence, a: int, v: int, b: int, constraint: PairConstraint | None = None
    ) -> ExactProb:
        """P_avb(d): probability that both av and bv are edges."""

        _check_vertex(d, a, v, b)
        if a == b:
            return self.edge_prob(d, a, v, constraint)
        constraint = self._constraint(d, constraint)
        total = self._require_realisable(d, constraint)
        if v in (a, b) or not (constraint.allows(a, v) and constraint.allows(b, v)):
            return Fraction(0)
        return Fraction(self.count_with(d, [(a, v), (b, v)], constraint), total)

    def ratio(
        self, d: DegreeSequence, a: int, b: int, constraint: PairConstraint | None = None
    ) -> Fraction:
        """R_ab(d) = N(d - e_a)/N(d - e_b)."""

        _check_vertex(d, a, b)
        constraint = self._constraint(d, constraint)
        denominator = self.count(lowered(d, b), constraint)
        if denominator == 0:
            raise UndefinedProbabilityError(
                "ratio is undefined: N(d - e_b) = 0",
                context={"degrees": list(d.degrees), "b": b},
            )
        return Fraction(self.count(lowered(d, a), constraint), denominator)

    def removal_identity_check(
        self, d: DegreeSequence, a: int, v: int, constraint: PairConstraint | None = None
    ) -> bool:
        """N_av(d) = N(d - e_a - e_v) - N_av(d - e_a - e_v)."""

        _check_vertex(d, a, v)
        constraint = self._constraint(d, constraint)
        if a == v or not constraint.allows(a, v):
            return True
        shadow = lowered(d, a, v)
        left = self.count_with(d, [(a, v)], constraint)
        right = self.count(shadow, constraint) - self.count_with(shadow, [(a, v)], constraint)
        return left == right

    def positive_neighbours(
        self, d: DegreeSequence, a: int, constraint: PairConstraint | None = None
    ) -> frozenset[int]:
        """Allowable partners ``v`` of ``a`` with N_av(d) > 0."""

        constraint = self._constraint(d, constraint)
        return frozenset(
            v for v in constraint.allowable(a) if self.count_with(d, [(a, v)], constraint) > 0
        )


__all__ = ["ExactCount", "ExactOracle", "ExactProb", "lowered", "switching_bound"]
