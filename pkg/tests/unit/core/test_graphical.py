from __future__ import annotations

import itertools

import pytest

from degseq.core.graphical import (
    ball_member,
    erdos_gallai,
    is_graphical,
    koren,
    l1_distance,
    realisation_gap,
)
from degseq.core.sequence import DegreeSequence, ParityClass
from degseq.errors import SequenceError


@pytest.mark.parametrize(
    ("degrees", "expected"),
    [
        ((1, 1, 1), False),
        ((3, 3, 3, 3), True),
        ((3, 3, 1, 1), False),
        ((2, 2, 2), True),
        ((4, 1, 1, 1, 1), True),
        ((0,), True),
        ((3, 1, 1), False),
    ],
)
def test_known_sequences(degrees: tuple[int, ...], expected: bool) -> None:
    d = DegreeSequence(degrees)

    assert erdos_gallai(d) is expected
    assert koren(d) is expected


def test_modes_agree_exhaustively_for_small_n() -> None:
    for n in range(1, 6):
        for degrees in itertools.product(range(n), repeat=n):
            d = DegreeSequence(degrees)
            assert is_graphical(d) == is_graphical(d, mode="koren")


def test_reduced_koren_matches_erdos_gallai_above_limit() -> None:
    for degrees in [(5,) * 12, (11,) + (1,) * 11, (6, 6, 6, 6, 6, 6, 1, 1, 1, 1, 1, 1), (7,) * 8 + (0,) * 4]:
        d = DegreeSequence(degrees)
        assert koren(d, exhaustive_limit=4) == erdos_gallai(d)


def test_unknown_mode() -> None:
    with pytest.raises(SequenceError):
        is_graphical(DegreeSequence((1, 1)), mode="havel")  # type: ignore[arg-type]


def test_realisation_gap_sign() -> None:
    assert realisation_gap(DegreeSequence((3, 3, 3, 3))) >= 0
    assert realisation_gap(DegreeSequence((3, 3, 1, 1))) < 0


def test_ball_membership() -> None:
    root = DegreeSequence((2, 2, 2))
    near = DegreeSequence((3, 2, 1))

    assert l1_distance(root, near) == 2
    assert ball_member(near, root, 2, ParityClass.EVEN)
    assert not ball_member(near, root, 2, ParityClass.ODD)
    assert not ball_member(near, root, 1, None)
    with pytest.raises(SequenceError):
        l1_distance(root, DegreeSequence((1, 1)))
