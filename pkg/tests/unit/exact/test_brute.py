from __future__ import annotations

from math import comb

import pytest

from degseq.core.sequence import DegreeSequence
from degseq.errors import CapacityError
from degseq.exact.brute import brute_force_count, degree_census


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_census_accounts_for_every_graph(n: int) -> None:
    assert sum(degree_census(n).values()) == 2 ** comb(n, 2)


def test_brute_force_known_values() -> None:
    assert brute_force_count(DegreeSequence((2, 2, 2, 2))) == 3
    assert brute_force_count(DegreeSequence((1, 1, 1))) == 0


def test_brute_force_capacity() -> None:
    with pytest.raises(CapacityError):
        brute_force_count(DegreeSequence((1,) * 8))
