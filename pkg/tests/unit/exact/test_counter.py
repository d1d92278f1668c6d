from __future__ import annotations

import pytest

from degseq.core.constraints import PairConstraint
from degseq.core.sequence import DegreeSequence
from degseq.errors import CapacityError, SequenceError
from degseq.exact.brute import brute_force_count, degree_census
from degseq.exact.counter import GraphCounter


@pytest.mark.parametrize(
    ("n", "expected"),
    [(6, 70), (8, 19355), (10, 11180820), (12, 11555272575)],
)
def test_cubic_counts(counter: GraphCounter, regular, n: int, expected: int) -> None:
    assert counter.count(regular(n, 3)) == expected


def test_cubic_count_at_capacity_edge(counter: GraphCounter, regular) -> None:
    assert counter.count(regular(14, 3)) == 19506631814670


@pytest.mark.parametrize(
    ("n", "expected"),
    [(3, 1), (4, 3), (5, 12), (6, 70), (7, 465), (8, 3507), (9, 30016), (10, 286884)],
)
def test_two_regular_counts(counter: GraphCounter, regular, n: int, expected: int) -> None:
    assert counter.count(regular(n, 2)) == expected


def test_perfect_matchings(counter: GraphCounter, regular) -> None:
    assert counter.count(regular(4, 1)) == 3
    assert counter.count(regular(6, 1)) == 15


def test_counter_matches_census(counter: GraphCounter) -> None:
    for n in range(1, 6):
        for degrees, expected in degree_census(n).items():
            assert counter.count(DegreeSequence(degrees)) == expected


def test_sequences_missing_from_census_count_zero(counter: GraphCounter) -> None:
    assert counter.count(DegreeSequence((1, 1, 1))) == 0
    assert counter.count(DegreeSequence((3, 1, 1))) == 0
    assert counter.count(DegreeSequence((5, 1, 1, 1))) == 0


def test_constraints_match_brute_force(counter: GraphCounter) -> None:
    d = DegreeSequence((2, 2, 2, 2, 2))
    forbid = PairConstraint(5, frozenset({(0, 1)}))
    force = PairConstraint(5, forced=frozenset({(0, 1), (2, 3)}))
    mixed = PairConstraint(5, frozenset({(0, 2)}), frozenset({(0, 1)}))

    for constraint in (forbid, force, mixed):
        assert counter.count(d, constraint) == brute_force_count(d, constraint)


def test_capacity_and_shape_errors() -> None:
    counter = GraphCounter(max_vertices=4)

    with pytest.raises(CapacityError):
        counter.count(DegreeSequence((1,) * 6))
    with pytest.raises(SequenceError):
        counter.count(DegreeSequence((1, 1)), PairConstraint(3))


def test_memo_is_shared_between_queries(counter: GraphCounter, regular) -> None:
    counter.count(regular(8, 3))
    first = counter.cache_info()
    counter.count(regular(8, 3))
    second = counter.cache_info()

    assert second.size == first.size
    assert second.hits > first.hits
