from __future__ import annotations

import pytest

from degseq.acceptance import CheckContext, available_checks, describe_checks, run_check
from degseq.cli.common import CommandContext
from degseq.cli.experiment import check_context
from degseq.config.loader import load_config, load_defaults
from degseq.errors import ConfigurationError, DomainExhaustedError


def test_registry_lists_every_check() -> None:
    names = available_checks()

    assert names == sorted(names)
    assert {"oracle_brute_force", "graphicality", "removal_switching", "determinism"} <= set(names)
    described = describe_checks()
    assert set(described) == set(names)
    assert described["graphicality"]["defaults"] == {"max_n": 7, "max_degree": 4}


def test_oracle_matches_enumeration(oracle) -> None:
    result = run_check("oracle_brute_force", CheckContext(oracle=oracle), {"max_n": 4, "max_degree": 3})

    assert result.passed
    assert result.details["mismatches"] == 0
    assert result.details["params"] == {"max_n": 4, "max_degree": 3}


def test_graphicality_tests_agree(oracle) -> None:
    result = run_check("graphicality", CheckContext(oracle=oracle), {"max_n": 5, "max_degree": 4})

    assert result.passed, result.details["examples"]
    assert result.details["compared"] > 0


def test_removal_identity_and_switching_bound(oracle) -> None:
    result = run_check("removal_switching", CheckContext(oracle=oracle), {"max_n": 5, "max_degree": 3})

    assert result.passed, result.details["examples"]
    assert result.details["identity_checked"] > 0


def test_determinism_at_small_scale() -> None:
    context = CheckContext(seed=3, chunk_size=64, bootstrap_rounds=5)

    result = run_check("determinism", context, {"n": 8, "m": 10, "samples": 300, "thread_counts": [1, 3]})

    assert result.passed
    assert set(result.details["digests"]) == {"1", "3"}


def test_result_payload() -> None:
    payload = run_check("graphicality", params={"max_n": 3, "max_degree": 2}).as_dict()

    assert payload["name"] == "graphicality"
    assert payload["soft_failed"] is False
    assert set(payload) == {"name", "passed", "soft_failed", "details"}


def test_unknown_check_and_parameters() -> None:
    with pytest.raises(ConfigurationError):
        run_check("no_such_check")
    with pytest.raises(ConfigurationError) as excinfo:
        run_check("graphicality", params={"max_vertices": 3})
    assert excinfo.value.context["unknown"] == ["max_vertices"]


def test_context_falls_back_to_builtin_tolerances() -> None:
    context = CheckContext(tolerances={})

    assert context.tolerance("model_tv") > 0


def test_contraction_measures_on_the_shrunken_level() -> None:
    result = run_check("contraction", params={"n": 16, "high": 8, "low": 8, "k0": 1, "points": 3})

    for key in ("root", "halved"):
        measured = result.details[key]
        assert measured["after_domain"] == "level"
        assert measured["after_level"] == 4
        assert measured["after_radius"] == 2
        assert measured["points_before"] == 3
        assert measured["points_after"] == 3
        assert measured["ratio"] is not None


def test_contraction_falls_back_to_the_root_neighbourhood() -> None:
    result = run_check("contraction", params={"n": 16, "high": 4, "low": 4, "k0": 2, "points": 3})

    for key in ("root", "halved"):
        measured = result.details[key]
        assert measured["after_domain"] == "root_neighbourhood"
        assert measured["points_after"] == 3
        assert measured["ratio"] is not None


def test_contraction_without_points_is_an_error() -> None:
    with pytest.raises(DomainExhaustedError):
        run_check("contraction", params={"n": 16, "high": 0, "low": 0, "k0": 1})



def test_graphicality_uses_the_configured_koren_limit(oracle) -> None:
    context = CheckContext(oracle=oracle, koren_exhaustive_limit=0)

    result = run_check("graphicality", context, {"max_n": 6, "max_degree": 4})

    assert result.passed, result.details["examples"]
    assert result.details["koren_exhaustive_limit"] == 0


def test_check_context_reads_koren_limit_from_config() -> None:
    config = load_config(overrides={"exact": {"koren_exhaustive_limit": 3}}, env={})

    context = check_context(CommandContext(config=config, defaults=load_defaults({})))

    assert context.koren_exhaustive_limit == 3
