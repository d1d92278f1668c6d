from __future__ import annotations

import math
from fractions import Fraction

import pytest

from degseq.core.sequence import DegreeSequence, ParityClass
from degseq.operators.functions import DomainLadder, EdgeFunction
from degseq.operators.metric import chi_distance, measure_chi, representative_pairs
from degseq.operators.seeds import constant_edge_function


@pytest.fixture
def ladder() -> DomainLadder:
    return DomainLadder(DegreeSequence((2, 2, 2)), 0)


def test_representative_pairs_cover_degree_classes() -> None:
    assert representative_pairs(DegreeSequence((3, 2, 2))) == [(1, 2), (1, 0), (0, 1)]


def test_chi_of_scaled_constants(ladder: DomainLadder) -> None:
    half, quarter = constant_edge_function(Fraction(1, 2)), constant_edge_function(Fraction(1, 4))

    assert chi_distance(half, quarter, ladder, 0, parity=None) == pytest.approx(math.log(2))
    assert chi_distance(half, half, ladder, 0, parity=None) == 0


def test_chi_zero_conventions(ladder: DomainLadder) -> None:
    zero, half = constant_edge_function(0), constant_edge_function(Fraction(1, 2))

    assert chi_distance(zero, zero, ladder, 0, parity=None) == 0
    measured = measure_chi(zero, half, ladder, 0, parity=None)
    assert math.isinf(measured.value)
    assert measured.worst is not None


def test_non_exchangeable_functions_visit_every_pair(ladder: DomainLadder) -> None:
    p1 = EdgeFunction(lambda a, v, d: Fraction(1, 2))
    p2 = EdgeFunction(lambda a, v, d: Fraction(1, 2) if a else Fraction(1, 3))

    measured = measure_chi(p1, p2, ladder, 0, parity=None)

    assert measured.pairs_evaluated == 6
    assert measured.value == pytest.approx(math.log(Fraction(3, 2)))
    assert measured.worst["c"] == 0


def test_chi_truncates_at_point_limit() -> None:
    ladder = DomainLadder(DegreeSequence((2, 2, 2)), 2)
    half = constant_edge_function(Fraction(1, 2))

    measured = measure_chi(half, half, ladder, 0, limit=3)

    assert measured.points == 3
    assert measured.truncated


def test_chi_visits_every_parity_unless_asked() -> None:
    ladder = DomainLadder(DegreeSequence((2, 2, 2)), 1)
    half = constant_edge_function(Fraction(1, 2))

    assert measure_chi(half, half, ladder, 0).points == 7
    assert measure_chi(half, half, ladder, 0, parity=ParityClass.EVEN).points == 1


def test_empty_level_measures_zero() -> None:
    ladder = DomainLadder(DegreeSequence((1, 1, 1, 1)), 2)
    half, quarter = constant_edge_function(Fraction(1, 2)), constant_edge_function(Fraction(1, 4))

    measured = measure_chi(half, quarter, ladder, 2)

    assert measured.empty
    assert measured.value == 0
