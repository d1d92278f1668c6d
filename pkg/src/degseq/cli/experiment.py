"""``experiment`` (recipe runner) and ``check`` (acceptance checks) subcommands."""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Mapping, Sequence

import yaml

from ..acceptance import CheckContext, available_checks, describe_checks, run_check
from ..core.graphical import KOREN_EXHAUSTIVE_LIMIT
from ..errors import DegSeqError, UsageError
from ..export import ReportExporter, write_manifest
from ..logging_config import get_logger
from ..models.samplers import DEFAULT_CHUNK_SIZE
from .common import CommandContext, CommandOutput
from .report import Report

LOGGER = get_logger(__name__)

Executor = Callable[[Sequence[str], CommandContext], Report]


def register_experiment_parsers(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    experiment = subparsers.add_parser("experiment", parents=[common], help="Run a recipe of subcommands")
    experiment.add_argument("--recipe", required=True, help="YAML recipe file")
    experiment.add_argument("--out-dir", help="Directory for reports and the manifest (default: reports/<recipe>)")
    experiment.set_defaults(handler=run_experiment)

    check = subparsers.add_parser("check", parents=[common], help="Run one named acceptance check")
    check.add_argument("--name", help="Check name (see --list)")
    check.add_argument("--param", action="append", default=[], help="Override a check parameter: key=value")
    check.add_argument("--list", action="store_true", help="List the available checks")
    check.add_argument("--strict", action="store_true", help="Exit with status 1 when the check fails")
    check.set_defaults(handler=run_check_command)


@dataclass
class RecipeRun:
    name: str
    argv: list[str]


@dataclass
class Recipe:
    name: str
    seed: int | None = None
    fmt: str = "json"
    runs: list[RecipeRun] = field(default_factory=list)
    problems: list[dict[str, Any]] = field(default_factory=list)


def load_recipe(path: Path | str) -> Recipe:
    """Parse a recipe; malformed entries become recorded problems rather than aborting."""

    source = Path(path)
    if not source.exists():
        raise UsageError(f"recipe not found: {source}")
    raw = yaml.safe_load(source.read_text(encoding="utf-8")) or {}
    if not isinstance(raw, Mapping):
        raise UsageError("a recipe must be a mapping", context={"recipe": str(source)})
    fmt = str(raw.get("format", "json"))
    if fmt not in ("json", "csv"):
        raise UsageError("recipe format must be json or csv", context={"format": fmt})
    seed = raw.get("seed")
    if seed is not None and (isinstance(seed, bool) or not isinstance(seed, int)):
        raise UsageError("recipe seed must be an integer", context={"seed": seed})
    recipe = Recipe(name=str(raw.get("name", source.stem)), seed=seed, fmt=fmt)
    seen: set[str] = set()
    for index, entry in enumerate(raw.get("runs") or []):
        name = entry.get("name") if isinstance(entry, Mapping) else None
        argv = entry.get("argv") if isinstance(entry, Mapping) else None
        label = str(name or f"run-{index + 1}")
        if not isinstance(argv, list) or not argv or not all(isinstance(token, (str, int, float)) for token in argv):
            recipe.problems.append({"name": label, "status": "error", "error": "argv must be a non-empty list"})
            continue
        if label in seen:
            recipe.problems.append({"name": label, "status": "error", "error": "duplicate run name"})
            continue
        seen.add(label)
        recipe.runs.append(RecipeRun(name=label, argv=[str(token) for token in argv]))
    return recipe


def run_recipe(
    recipe: Recipe, out_dir: Path, execute: Executor, ctx: CommandContext
) -> tuple[Path, list[dict[str, Any]]]:
    """Execute every run; failures are recorded and the remaining runs continue."""

    exporter = ReportExporter(out_dir)
    entries: list[dict[str, Any]] = list(recipe.problems)
    seed = recipe.seed if recipe.seed is not None else ctx.effective_seed
    for run in recipe.runs:
        argv = list(run.argv)
        entry: dict[str, Any] = {"name": run.name, "argv": argv}
        if argv[0] == "experiment":
            entry.update(status="error", error="recipes cannot nest experiments")
            entries.append(entry)
            continue
        if "--seed" not in argv:
            argv += ["--seed", str(seed)]
        try:
            report = execute(argv, ctx)
        except DegSeqError as exc:
            LOGGER.warning("Recipe run failed", extra={"run": run.name, "error": str(exc)})
            entry.update(status="error", error=exc.as_dict())
            entries.append(entry)
            continue
        except SystemExit as exc:
            entry.update(status="error", error=f"run exited with status {exc.code}")
            entries.append(entry)
            continue
        path = exporter.export(report, run.name, recipe.fmt)
        entry.update(status="ok", command=report.command, path=path.name)
        if "passed" in report.result:
            entry["passed"] = report.result["passed"]
        entries.append(entry)
    manifest = write_manifest(out_dir, entries, recipe=recipe.name)
    return manifest, entries


def run_experiment(args: argparse.Namespace, ctx: CommandContext) -> CommandOutput:
    from .app import execute

    recipe = load_recipe(args.recipe)
    out_dir = Path(args.out_dir) if args.out_dir else ctx.defaults.reports_dir / recipe.name
    manifest, entries = run_recipe(recipe, out_dir, execute, ctx)
    failed = sum(1 for entry in entries if entry.get("status") != "ok")
    result = {
        "recipe": recipe.name,
        "out_dir": str(out_dir),
        "manifest": str(manifest),
        "runs": len(entries),
        "failed": failed,
    }
    return CommandOutput(result, rows=entries, exit_code=1 if failed else 0)


def _parse_params(tokens: Sequence[str]) -> dict[str, Any]:
    params: dict[str, Any] = {}
    for token in tokens:
        if "=" not in token:
            raise UsageError(f"check parameters must look like key=value (received {token!r})")
        key, raw = token.split("=", 1)
        params[key.strip()] = yaml.safe_load(raw)
    return params


def check_context(ctx: CommandContext) -> CheckContext:
    return CheckContext(
        oracle=ctx.oracle,
        tolerances=dict(ctx.setting("tolerances", {}) or {}),
        seed=ctx.effective_seed,
        threads=ctx.effective_threads,
        chunk_size=int(ctx.setting("models.chunk_size", DEFAULT_CHUNK_SIZE)),
        bootstrap_rounds=int(ctx.setting("models.bootstrap_rounds", 200)),
        koren_exhaustive_limit=int(ctx.setting("exact.koren_exhaustive_limit", KOREN_EXHAUSTIVE_LIMIT)),
    )


def run_check_command(args: argparse.Namespace, ctx: CommandContext) -> CommandOutput:
    if args.list:
        described = describe_checks()
        return CommandOutput(
            {"checks": described},
            rows=[{"name": name, **details} for name, details in described.items()],
        )
    if not args.name:
        raise UsageError("check needs --name or --list", context={"available": available_checks()})
    result = run_check(args.name, check_context(ctx), _parse_params(args.param))
    return CommandOutput(result.as_dict(), exit_code=1 if args.strict and not result.passed else 0)


__all__ = [
    "Recipe",
    "RecipeRun",
    "check_context",
    "load_recipe",
    "register_experiment_parsers",
    "run_check_command",
    "run_experiment",
    "run_recipe",
]
