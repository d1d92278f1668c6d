"""Configuration precedence and validation tests for the layered loader."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from degseq.config.loader import BUILTIN_DEFAULTS, ConfigurationError, get_setting, load_config, load_defaults

from tests.helpers_config import write_defaults


def test_cli_overrides_have_highest_precedence(tmp_path: Path) -> None:
    defaults = write_defaults(tmp_path)
    settings = tmp_path / "settings.yaml"
    settings.write_text("runtime:\n  threads: 2\nmodels:\n  seed: 11\n", encoding="utf-8")

    config = load_config(
        defaults_path=defaults,
        env={"DEGSEQ_THREADS": "3", "DEGSEQ_K0": "2"},
        override_path=settings,
        overrides={"models": {"seed": 99}},
    )

    assert config["models"]["seed"] == 99
    assert config["runtime"]["threads"] == 2
    assert config["operators"]["k0"] == 2
    assert config["models"]["chunk_size"] == 2048


def test_environment_overrides_defaults(tmp_path: Path) -> None:
    config = load_config(
        defaults_path=write_defaults(tmp_path),
        env={"DEGSEQ_OUTPUT_FORMAT": "CSV", "DEGSEQ_EXACT_CAP": "12"},
        override_path=tmp_path / "settings.yaml",
    )

    assert config["runtime"]["output_format"] == "csv"
    assert get_setting(config, "exact.max_vertices") == 12
    assert get_setting(config, "exact.missing", "fallback") == "fallback"


def test_settings_file_from_environment(tmp_path: Path) -> None:
    settings = tmp_path / "local.json"
    settings.write_text(json.dumps({"operators": {"arithmetic": "exact"}}), encoding="utf-8")

    config = load_config(defaults_path=write_defaults(tmp_path), env={"DEGSEQ_SETTINGS_FILE": str(settings)})

    assert config["operators"]["arithmetic"] == "exact"


def test_missing_required_values_raise(tmp_path: Path) -> None:
    defaults = write_defaults(tmp_path, missing_seed=True)

    with pytest.raises(ConfigurationError) as excinfo:
        load_config(defaults_path=defaults, env={}, override_path=tmp_path / "settings.yaml")

    assert "models.seed" in str(excinfo.value)


@pytest.mark.parametrize(
    "overrides",
    [
        {"operators": {"arithmetic": "decimal"}},
        {"runtime": {"threads": -1}},
        {"models": {"seed": True}},
        {"tolerances": {"model_tv": "small"}},
    ],
)
def test_invalid_values_raise(tmp_path: Path, overrides: dict) -> None:
    with pytest.raises(ConfigurationError):
        load_config(
            defaults_path=write_defaults(tmp_path),
            env={},
            override_path=tmp_path / "settings.yaml",
            overrides=overrides,
        )


def test_non_integer_environment_value(tmp_path: Path) -> None:
    with pytest.raises(ConfigurationError):
        load_config(defaults_path=write_defaults(tmp_path), env={"DEGSEQ_SEED": "seven"})


def test_unsupported_settings_format(tmp_path: Path) -> None:
    settings = tmp_path / "settings.toml"
    settings.write_text("[models]\nseed = 1\n", encoding="utf-8")

    with pytest.raises(ConfigurationError):
        load_config(defaults_path=write_defaults(tmp_path), env={}, override_path=settings)


def test_missing_defaults_file(tmp_path: Path) -> None:
    with pytest.raises(ConfigurationError):
        load_config(defaults_path=tmp_path / "absent.yml", env={})


def test_repository_defaults_match_builtin() -> None:
    config = load_config(env={})

    for section, values in BUILTIN_DEFAULTS.items():
        assert config[section] == values


def test_load_defaults_resolves_directories(tmp_path: Path) -> None:
    defaults = load_defaults({"DEGSEQ_ROOT": str(tmp_path), "DEGSEQ_REPORTS_DIR": str(tmp_path / "out")})

    assert defaults.project_root == tmp_path.resolve()
    assert defaults.reports_dir == (tmp_path / "out").resolve()
    assert defaults.recipes_dir == (tmp_path / "config" / "recipes").resolve()
    assert defaults.as_dict()["settings_path"].endswith("settings.yaml")
