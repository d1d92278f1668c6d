from __future__ import annotations

import math

import pytest

from degseq.core.sequence import DegreeSequence
from degseq.errors import DomainExhaustedError
from degseq.operators.fixed_point import MEASURE_MARGIN, iterate_fixed_point, required_radius
from degseq.operators.functions import Domain, DomainLadder, OperatorConfig
from degseq.operators.seeds import pgr_edge_function


def test_required_radius() -> None:
    assert required_radius(3, OperatorConfig(k0=2)) == 18 + MEASURE_MARGIN
    assert required_radius(0, OperatorConfig(k0=2)) == 0


def test_ladder_too_small() -> None:
    root = DegreeSequence((6,) * 12)
    cfg = OperatorConfig(k0=1)

    with pytest.raises(DomainExhaustedError):
        iterate_fixed_point(pgr_edge_function(), 2, cfg, DomainLadder(root, 3))


def test_unbounded_seed_without_ladder() -> None:
    with pytest.raises(DomainExhaustedError):
        iterate_fixed_point(pgr_edge_function(), 1, OperatorConfig(k0=1))


def test_iteration_records_steps_and_contraction() -> None:
    root = DegreeSequence((6,) * 12)
    cfg = OperatorConfig(k0=1)
    ladder = DomainLadder(root, required_radius(1, cfg))
    p0 = pgr_edge_function(Domain(root, ladder.radius))

    final, report = iterate_fixed_point(
        p0, 1, cfg, ladder, p0_prime=p0.scaled(1.01), max_points=3
    )

    assert report.steps_completed == 1
    assert report.initial_chi_pair == pytest.approx(math.log(1.01))
    record = report.records[0]
    assert record.level == cfg.shrink
    assert record.points == 3
    assert record.truncated
    assert math.isfinite(record.chi_step)
    assert record.contraction_ratio is not None
    assert final.name == "C(Pgr)"
    assert report.as_dict()["steps"][0]["step"] == 1


def test_deepest_level_is_a_neighbourhood() -> None:
    root = DegreeSequence((6,) * 12)
    cfg = OperatorConfig(k0=1)
    ladder = DomainLadder(root, required_radius(1, cfg))
    p0 = pgr_edge_function(Domain(root, ladder.radius))

    _, report = iterate_fixed_point(p0, 1, cfg, ladder, max_points=5)

    assert report.records[0].points > 1
    assert ladder.level(cfg.shrink).radius == MEASURE_MARGIN


def test_empty_level_is_an_error() -> None:
    root = DegreeSequence((2,) * 12)
    cfg = OperatorConfig(k0=1)
    ladder = DomainLadder(root, required_radius(1, cfg))

    with pytest.raises(DomainExhaustedError, match="holds no points"):
        iterate_fixed_point(pgr_edge_function(Domain(root, ladder.radius)), 1, cfg, ladder)


def test_zero_steps_returns_the_start() -> None:
    root = DegreeSequence((6,) * 12)
    p0 = pgr_edge_function(Domain(root, 0))

    final, report = iterate_fixed_point(p0, 0, OperatorConfig(k0=1), DomainLadder(root, 0))

    assert final is p0
    assert report.steps_completed == 0
    assert report.as_dict()["steps"] == []
