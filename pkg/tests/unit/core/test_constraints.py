from __future__ import annotations

import pytest

from degseq.core.constraints import PairConstraint, parse_pair
from degseq.core.sequence import DegreeSequence
from degseq.errors import SequenceError


def test_parse_pair_is_one_based_and_normalised() -> None:
    assert parse_pair("3-1") == (0, 2)
    with pytest.raises(SequenceError):
        parse_pair("0-2")
    with pytest.raises(SequenceError):
        parse_pair("2-2")


def test_forbidden_and_forced_overlap_is_rejected() -> None:
    with pytest.raises(SequenceError):
        PairConstraint(4, frozenset({(0, 1)}), frozenset({(1, 0)}))


def test_endpoint_out_of_range() -> None:
    with pytest.raises(SequenceError):
        PairConstraint(3, frozenset({(0, 3)}))


def test_allowable_projection() -> None:
    constraint = PairConstraint(4, frozenset({(0, 1)}))

    assert constraint.allowable(0) == frozenset({2, 3})
    assert not constraint.allows(1, 0)
    assert len(constraint.allowable_pairs()) == 5


def test_reduce_forced() -> None:
    constraint = PairConstraint(3, forced=frozenset({(0, 1)}))

    residual, blocked = constraint.reduce_forced(DegreeSequence((1, 2, 1)))
    assert residual == (0, 1, 1)
    assert (0, 1) in blocked
    assert constraint.reduce_forced(DegreeSequence((0, 1, 1))) is None


def test_as_dict_echoes_one_based_pairs() -> None:
    constraint = PairConstraint(3, frozenset({(1, 2)}))

    assert constraint.as_dict() == {"n": 3, "forbidden": [[2, 3]], "forced": []}
