from __future__ import annotations

from fractions import Fraction

import pytest

from degseq.errors import ModelError, PreconditionError
from degseq.models.experiments import (
    d1_marginal,
    exact_vs_formula,
    marginal_check,
    permutation_count,
    sigma_concentration,
    sorted_classes,
    variance_d1,
)
from degseq.models.samplers import ModelSpec


def test_sorted_classes_and_permutations() -> None:
    assert list(sorted_classes(3, 2)) == [(2, 0, 0), (1, 1, 0)]
    assert permutation_count((2, 2, 1, 1)) == 6
    assert permutation_count((3, 3, 3)) == 1


def test_exact_table_is_a_probability_law(oracle) -> None:
    table = exact_vs_formula(4, 3, oracle)

    assert table.total == 1
    by_class = {row.degrees: row for row in table.rows}
    assert set(by_class) == {(3, 1, 1, 1), (2, 2, 1, 1), (2, 2, 2, 0)}
    assert by_class[(2, 2, 1, 1)].exact_prob == Fraction(12, 20)
    assert by_class[(2, 2, 1, 1)].count == 2
    assert table.as_dict()["total"] == "1/1"


def test_near_regular_filter(oracle) -> None:
    table = exact_vs_formula(4, 3, oracle)

    assert {row.degrees for row in table.near_regular(0.5)} == {(2, 2, 1, 1)}


def test_exact_table_preconditions() -> None:
    with pytest.raises(PreconditionError):
        exact_vs_formula(11, 3)
    with pytest.raises(PreconditionError):
        exact_vs_formula(4, 7)


@pytest.mark.parametrize("kind", ["gnm", "bm"])
def test_variance_matches_hypergeometric_law(kind: str) -> None:
    assert variance_d1(kind, 10, 12) == pytest.approx(d1_marginal(kind, 10, 12).var())


def test_variance_of_small_gnm() -> None:
    assert variance_d1("gnm", 4, 3) == pytest.approx(0.45)
    with pytest.raises(ModelError):
        variance_d1("gnp", 4, 3)


def test_sigma_concentration_report() -> None:
    report = sigma_concentration(ModelSpec("gnm", 10, m=15, seed=3), 300, 0.5)

    assert report.samples == 300
    assert 0 <= report.frequency <= 1
    assert report.threshold == pytest.approx(0.5 * 3 + 0.1)
    assert report.variance_d1 == pytest.approx(variance_d1("gnm", 10, 15))


def test_marginal_check_against_law() -> None:
    result = marginal_check(ModelSpec("bm", 6, m=5, seed=8), 5000)

    assert 0 <= result.ks_pvalue <= 1
    assert result.tv < 0.1
    with pytest.raises(ModelError):
        marginal_check(ModelSpec("bm", 6, m=5), 0)
