"""Layered configuration shared by the CLI and the experiment runner."""

from __future__ import annotations

import copy
import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Mapping, MutableMapping, Sequence

import yaml

from ..errors import ConfigurationError

__all__ = [
    "BUILTIN_DEFAULTS",
    "ConfigurationError",
    "Defaults",
    "get_setting",
    "load_config",
    "load_defaults",
]

REPO_ROOT = Path(__file__).resolve().parents[3]
DEFAULT_CONFIG_PATH = REPO_ROOT / "config" / "defaults.yml"
DEFAULT_OVERRIDE_PATH = REPO_ROOT / "config" / "settings.yaml"

# Used when the package runs outside a checkout and config/defaults.yml is absent.
BUILTIN_DEFAULTS: Dict[str, Any] = {
    "exact": {"max_vertices": 16, "koren_exhaustive_limit": 10, "memo_entries": 2_000_000},
    "operators": {"k0": 4, "arithmetic": "float", "max_points": 64},
    "models": {"seed": 7, "chunk_size": 2048, "bootstrap_rounds": 200},
    "runtime": {"threads": 0, "output_format": "json"},
    "tolerances": {
        "regular_trend_final": 0.10,
        "edge_formula": 0.05,
        "formula_table_low": 0.75,
        "formula_table_high": 1.35,
        "contraction": 0.5,
        "envelope_multiple": 5.0,
        "model_tv": 0.05,
        "concentration": 0.001,
    },
}


@dataclass(frozen=True)
class Defaults:
    """Filesystem defaults used by the CLI."""

    project_root: Path
    reports_dir: Path
    recipes_dir: Path
    settings_path: Path

    def as_dict(self) -> dict[str, str]:
        return {
            "project_root": str(self.project_root),
            "reports_dir": str(self.reports_dir),
            "recipes_dir": str(self.recipes_dir),
            "settings_path": str(self.settings_path),
        }


def _env(env: Mapping[str, str], key: str, default: str) -> str:
    value = env.get(key)
    return value if value else default


def _load_settings_file(path: Path) -> Dict[str, Any]:
    if not path.exists():
        return {}
    suffix = path.suffix.lower()
    if suffix in {".yaml", ".yml"}:
        with path.open("r", encoding="utf-8") as handle:
            return yaml.safe_load(handle) or {}
    if suffix == ".json":
        return json.loads(path.read_text(encoding="utf-8"))
    raise ConfigurationError(f"Unsupported configuration format: {path}")


def load_defaults(env: Mapping[str, str] | None = None) -> Defaults:
    """Compute default directories; every path is resolved to an absolute location."""

    env = env if env is not None else os.environ
    project_root = Path(_env(env, "DEGSEQ_ROOT", str(REPO_ROOT))).resolve()
    reports_dir = Path(_env(env, "DEGSEQ_REPORTS_DIR", str(project_root / "reports"))).resolve()
    recipes_dir = Path(
        _env(env, "DEGSEQ_RECIPES_DIR", str(project_root / "config" / "recipes"))
    ).resolve()
    settings_path = Path(
        _env(env, "DEGSEQ_SETTINGS_FILE", str(project_root / "config" / "settings.yaml"))
    ).resolve()
    return Defaults(
        project_root=project_root,
        reports_dir=reports_dir,
        recipes_dir=recipes_dir,
        settings_path=settings_path,
    )


_ENVIRONMENT_PATHS: dict[str, Sequence[str]] = {
    "DEGSEQ_THREADS": ("runtime", "threads"),
    "DEGSEQ_OUTPUT_FORMAT": ("runtime", "output_format"),
    "DEGSEQ_SEED": ("models", "seed"),
    "DEGSEQ_EXACT_CAP": ("exact", "max_vertices"),
    "DEGSEQ_K0": ("operators", "k0"),
}

_INT_ENV_KEYS = {"DEGSEQ_THREADS", "DEGSEQ_SEED", "DEGSEQ_EXACT_CAP", "DEGSEQ_K0"}


_REQUIRED_PATHS: dict[tuple[str, ...], type] = {
    ("exact", "max_vertices"): int,
    ("exact", "koren_exhaustive_limit"): int,
    ("exact", "memo_entries"): int,
    ("operators", "k0"): int,
    ("operators", "arithmetic"): str,
    ("operators", "max_points"): int,
    ("models", "seed"): int,
    ("models", "chunk_size"): int,
    ("models", "bootstrap_rounds"): int,
    ("runtime", "threads"): int,
    ("runtime", "output_format"): str,
}

_CHOICES: dict[tuple[str, ...], frozenset[str]] = {
    ("operators", "arithmetic"): frozenset({"exact", "float"}),
    ("runtime", "output_format"): frozenset({"json", "csv"}),
}

_MINIMUMS: dict[tuple[str, ...], int] = {
    ("exact", "max_vertices"): 1,
    ("exact", "koren_exhaustive_limit"): 0,
    ("exact", "memo_entries"): 0,
    ("operators", "k0"): 1,
    ("operators", "max_points"): 1,
    ("models", "seed"): 0,
    ("models", "chunk_size"): 1,
    ("models", "bootstrap_rounds"): 0,
    ("runtime", "threads"): 0,
}


def _ensure_mapping(value: Any) -> MutableMapping[str, Any]:
    if not isinstance(value, Mapping):
        raise ConfigurationError("Configuration data must be a mapping at every level.")
    return dict(value)


def _deep_merge(base: Mapping[str, Any], override: Mapping[str, Any]) -> Dict[str, Any]:
    result: Dict[str, Any] = dict(base)
    for key, value in override.items():
        if isinstance(value, Mapping) and isinstance(result.get(key), Mapping):
            result[key] = _deep_merge(_ensure_mapping(result[key]), value)
        else:
            result[key] = value
    return result


def _set_path(config: MutableMapping[str, Any], path: Sequence[str], value: Any) -> None:
    cursor: MutableMapping[str, Any] = config
    for segment in path[:-1]:
        existing = cursor.get(segment)
        if not isinstance(existing, Mapping):
            existing = {}
        cursor[segment] = dict(existing)
        cursor = cursor[segment]  # type: ignore[assignment]
    cursor[path[-1]] = value


def _get_path(config: Mapping[str, Any], path: Sequence[str]) -> Any:
    cursor: Any = config
    for segment in path:
        if not isinstance(cursor, Mapping):
            return None
        cursor = cursor.get(segment)
    return cursor


def get_setting(config: Mapping[str, Any], dotted: str, default: Any = None) -> Any:
    """Look up ``"section.key"`` in a loaded configuration."""

    value = _get_path(config, tuple(dotted.split(".")))
    return default if value is None else value


def _parse_env_value(key: str, value: str) -> Any:
    if key in _INT_ENV_KEYS:
        try:
            return int(value)
        except (TypeError, ValueError):
            raise ConfigurationError(f"Environment variable {key} must be an integer.")
    return value.strip().lower()


def _apply_environment_overrides(config: MutableMapping[str, Any], env: Mapping[str, str]) -> None:
    for env_key, path in _ENVIRONMENT_PATHS.items():
        if not env.get(env_key):
            continue
        _set_path(config, path, _parse_env_value(env_key, env[env_key]))


def _validate_schema(config: Mapping[str, Any]) -> None:
    missing: list[str] = []
    for path, expected_type in _REQUIRED_PATHS.items():
        dotted = ".".join(path)
        value = _get_path(config, path)
        if value in (None, ""):
            missing.append(dotted)
            continue
        if isinstance(value, bool) or not isinstance(value, expected_type):
            raise ConfigurationError(
                f"Configuration value {dotted} must be of type {expected_type.__name__}."
            )
        choices = _CHOICES.get(path)
        if choices is not None and value not in choices:
            raise ConfigurationError(
                f"Configuration value {dotted} must be one of {', '.join(sorted(choices))}."
            )
        minimum = _MINIMUMS.get(path)
        if minimum is not None and value < minimum:
            raise ConfigurationError(f"Configuration value {dotted} must be at least {minimum}.")
    if missing:
        raise ConfigurationError("Missing required configuration values: " + ", ".join(sorted(missing)))
    tolerances = config.get("tolerances", {})
    if not isinstance(tolerances, Mapping):
        raise ConfigurationError("Configuration value tolerances must be a mapping.")
    for key, value in tolerances.items():
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigurationError(f"Tolerance {key} must be numeric.")


def load_config(
    path: str | os.PathLike | None = None,
    *,
    overrides: Mapping[str, Any] | None = None,
    env: Mapping[str, str] | None = None,
    defaults_path: Path | None = None,
    override_path: Path | None = None,
) -> Dict[str, Any]:
    """Load the layered configuration: overrides > settings file > environment > defaults."""

    env_map = env if env is not None else os.environ
    if path is not None and override_path is None:
        override_path = Path(path)
    if override_path is None and env_map.get("DEGSEQ_SETTINGS_FILE"):
        override_path = Path(env_map["DEGSEQ_SETTINGS_FILE"])

    defaults_file = defaults_path or DEFAULT_CONFIG_PATH
    if defaults_file.exists():
        with defaults_file.open("r", encoding="utf-8") as handle:
            raw_defaults = yaml.safe_load(handle) or {}
    elif defaults_path is not None:
        raise ConfigurationError(f"Defaults file not found: {defaults_file}")
    else:
        raw_defaults = BUILTIN_DEFAULTS
    if not isinstance(raw_defaults, Mapping):
        raise ConfigurationError("defaults.yml must contain a mapping at the top level")

    config: MutableMapping[str, Any] = dict(copy.deepcopy(raw_defaults))
    _apply_environment_overrides(config, env_map)

    override_file = override_path or DEFAULT_OVERRIDE_PATH
    if override_file and Path(override_file).exists():
        file_overrides = _load_settings_file(Path(override_file))
        if file_overrides:
            config = _deep_merge(config, _ensure_mapping(file_overrides))

    if overrides:
        config = _deep_merge(config, overrides)

    _validate_schema(config)
    return dict(config)
