from __future__ import annotations

from fractions import Fraction

import pytest

from degseq.asymptotics.edges import (
    Variant,
    pgr,
    pi_rho,
    pi_value,
    rgr,
    rho_value,
    sparse_edge_prob,
    sparse_path_prob,
    sparse_ratio,
    sparse_ratio_refined,
)
from degseq.core.sequence import DegreeSequence
from degseq.errors import PreconditionError


def test_pi_substitution_example() -> None:
    value = pi_value(Variant.CORRECTED, 0.1, -0.1, 0.05, 10, 10, 200)

    assert value == pytest.approx(0.0495 * (1 + 0.0005 / 0.95))


@pytest.mark.parametrize("variant", list(Variant))
def test_balanced_degrees_reduce_to_density(variant: Variant) -> None:
    mu, n = 0.1, 100
    result = pi_rho(variant, 0.0, 0.0, mu, 4.0, mu * (n - 1), n)

    assert result.pi == pytest.approx(mu)
    assert result.rho == pytest.approx(1.0)


def test_variant_preconditions() -> None:
    with pytest.raises(PreconditionError):
        pi_value("simple", 0.0, 0.0, 1.0, 0.0, 5.0, 6)
    with pytest.raises(PreconditionError):
        rho_value("corrected", -1.0, 0.0, 0.1, 0.0, 5.0, 60)


def test_regular_pgr_and_rgr(regular) -> None:
    d = regular(10, 3)

    assert pgr(d, 0, 1, exact=True) == Fraction(1, 3)
    assert pgr(d, 0, 0) == 0.0
    assert rgr(d, 0, 1, exact=True) == 1


def test_pgr_rows_sum_close_to_degrees() -> None:
    d = DegreeSequence((4,) * 10 + (3,) * 10)

    for a in (0, 15):
        total = sum(pgr(d, a, v) for v in range(d.n))
        assert total == pytest.approx(d[a], rel=0.02)


def test_pgr_needs_interior_mean() -> None:
    with pytest.raises(PreconditionError):
        pgr(DegreeSequence((0, 0, 0)), 0, 1)


def test_sparse_formulas() -> None:
    d = DegreeSequence((3, 2, 2, 1))

    assert sparse_edge_prob(d, 0, 1) == pytest.approx(6 / 8)
    assert sparse_path_prob(d, 0, 1, 2) == pytest.approx(3 * 2 * 1 * 2 / 64)
    assert sparse_path_prob(d, 0, 0, 2) == 0.0
    assert sparse_ratio(d, 1, 2) == pytest.approx(1.0)
    assert sparse_ratio_refined(d, 1, 2) == pytest.approx(1.0)
    with pytest.raises(PreconditionError):
        sparse_ratio(DegreeSequence((1, 0)), 0, 1)
