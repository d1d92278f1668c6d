"""degseq CLI dispatcher for subcommands such as ``degseq count``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import replace
from pathlib import Path
from typing import Any, Iterable, Mapping, NoReturn, Optional, Sequence

try:  # pragma: no cover - optional dependency
    from dotenv import load_dotenv
except ImportError:  # pragma: no cover - optional dependency
    load_dotenv = None

from .. import __version__
from ..config.loader import Defaults, _deep_merge, load_config, load_defaults
from ..errors import CapacityError, DegSeqError, SingularityError, UndefinedProbabilityError, UsageError
from ..logging_config import configure_logging, get_logger
from .asymptotic import register_asym_parser
from .common import CommandContext, non_negative_int
from .counting import register_counting_parsers
from .experiment import register_experiment_parsers
from .fixpoint import register_fixpoint_parser
from .report import Provenance, Report, jsonable
from .sampling import register_sampling_parsers

LOGGER = get_logger(__name__)

EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_SINGULARITY = 4


class JsonArgumentParser(argparse.ArgumentParser):
    """Parser whose errors surface as :class:`UsageError` instead of exiting."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(message, context={"prog": self.prog})


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), help="Report format (default: runtime.output_format)")
    common.add_argument("--threads", type=non_negative_int, help="Worker threads; 0 uses the hardware count")
    common.add_argument("--seed", type=int, help="Seed for every random stream (default: models.seed)")
    common.add_argument("--config", help="YAML settings file layered over the defaults")
    common.add_argument("--out-file", help="Write the report here instead of stdout")
    common.add_argument(
        "--log-level",
        help="Logging verbosity (DEBUG, INFO, WARNING, ERROR, CRITICAL)",
    )
    return common


def build_parser(defaults: Defaults | None = None) -> argparse.ArgumentParser:
    defaults = defaults or load_defaults()
    parser = JsonArgumentParser(prog="degseq", description="Exact and asymptotic degree-sequence enumeration")
    parser.add_argument("--version", action="version", version=f"degseq {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_parser()
    register_counting_parsers(subparsers, common)
    register_asym_parser(subparsers, common)
    register_fixpoint_parser(subparsers, common)
    register_sampling_parsers(subparsers, common)
    register_experiment_parsers(subparsers, common)
    return parser


def _candidate_dotenv_paths(source_path: Path) -> list[Path]:
    """Return potential ``.env`` locations ordered by precedence."""

    candidates: list[Path] = []
    for parent in source_path.resolve().parents:
        if (parent / "pyproject.toml").exists() or (parent / ".git").exists():
            candidates.append(parent / ".env")
            break
    candidates.append(Path.cwd() / ".env")
    return candidates


def _load_local_dotenv() -> Optional[Path]:
    """Best-effort loading of a project-level ``.env`` file."""

    if load_dotenv is None:
        return None
    for candidate in _candidate_dotenv_paths(Path(__file__)):
        if candidate.is_file():
            load_dotenv(dotenv_path=candidate, override=False)
            return candidate
    return None


def _config_overrides(args: argparse.Namespace) -> dict[str, Any]:
    runtime: dict[str, Any] = {}
    if args.threads is not None:
        runtime["threads"] = args.threads
    if args.format is not None:
        runtime["output_format"] = args.format
    overrides: dict[str, Any] = {"runtime": runtime} if runtime else {}
    if args.seed is not None:
        overrides["models"] = {"seed": args.seed}
    return overrides


def _dispatch(args: argparse.Namespace, ctx: CommandContext) -> tuple[Report, int]:
    started = time.perf_counter()
    output = args.handler(args, ctx)
    provenance = Provenance(
        seed=ctx.effective_seed,
        config=ctx.config,
        wall_time_s=time.perf_counter() - started,
    )
    report = Report(command=args.command, result=output.result, provenance=provenance, rows=output.rows)
    return report, output.exit_code


def _child_context(args: argparse.Namespace, ctx: CommandContext) -> CommandContext:
    overrides = _config_overrides(args)
    if args.config:
        config: Mapping[str, Any] = load_config(args.config, overrides=overrides)
    elif overrides:
        config = _deep_merge(ctx.config, overrides)
    else:
        config = ctx.config
    return replace(
        ctx,
        config=config,
        threads=args.threads if args.threads is not None else ctx.threads,
        seed=args.seed if args.seed is not None else ctx.seed,
    )


def execute(argv: Sequence[str], ctx: CommandContext) -> Report:
    """Run one subcommand inside an existing context; used by recipes."""

    args = build_parser(ctx.defaults).parse_args(list(argv))
    report, _ = _dispatch(args, _child_context(args, ctx))
    return report


def _exit_code(exc: DegSeqError) -> int:
    if isinstance(exc, UsageError):
        return EXIT_USAGE
    if isinstance(exc, CapacityError):
        return EXIT_CAPACITY
    if isinstance(exc, (SingularityError, UndefinedProbabilityError)):
        return EXIT_SINGULARITY
    return 1


def _emit_error(exc: DegSeqError) -> int:
    print(json.dumps(jsonable(exc.as_dict()), sort_keys=True), file=sys.stderr)
    return _exit_code(exc)


def main(
    argv: Iterable[str] | None = None,
    *,
    defaults: Defaults | None = None,
    env: Mapping[str, str] | None = None,
) -> int:
    _load_local_dotenv()
    defaults = defaults or load_defaults(env)
    parser = build_parser(defaults)
    try:
        args = parser.parse_args(None if argv is None else list(argv))
    except UsageError as exc:
        return _emit_error(exc)

    configure_logging(args.log_level)
    LOGGER.debug("Parsed arguments", extra={"command": args.command})

    try:
        config = load_config(args.config, overrides=_config_overrides(args), env=env)
        ctx = CommandContext(config=config, defaults=defaults, threads=args.threads, seed=args.seed)
        report, exit_code = _dispatch(args, ctx)
    except DegSeqError as exc:
        LOGGER.error("Command failed", extra={"command": args.command, "error": str(exc)})
        return _emit_error(exc)

    fmt = args.format or str(ctx.setting("runtime.output_format", "json"))
    rendered = report.render(fmt)
    if args.out_file:
        target = Path(args.out_file)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(rendered, encoding="utf-8")
        LOGGER.info("Report written", extra={"path": str(target)})
    else:
        sys.stdout.write(rendered)
    return exit_code


__all__ = ["JsonArgumentParser", "build_parser", "execute", "main"]


if __name__ == "__main__":  # pragma: no cover - CLI entry point
    sys.exit(main())
