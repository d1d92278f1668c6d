"""Exact subcommands: ``count``, ``prob``, ``pathprob``, ``ratio`` and ``graphical``."""

from __future__ import annotations

import argparse

from ..core.graphical import KOREN_EXHAUSTIVE_LIMIT, erdos_gallai, koren, realisation_gap
from ..exact.queries import switching_bound
from ..logging_config import get_logger
from .common import (
    CommandContext,
    CommandOutput,
    add_constraint_arguments,
    add_sequence_arguments,
    build_constraint,
    check_vertices,
    fraction_fields,
    pair_arg,
    resolve_sequence,
    triple_arg,
)

LOGGER = get_logger(__name__)


def register_counting_parsers(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    count = subparsers.add_parser("count", parents=[common], help="Number of labelled realisations N(d)")
    add_sequence_arguments(count)
    add_constraint_arguments(count)
    count.set_defaults(handler=run_count)

    prob = subparsers.add_parser("prob", parents=[common], help="Edge probability P_av(d)")
    add_sequence_arguments(prob)
    add_constraint_arguments(prob)
    prob.add_argument("--pair", required=True, type=pair_arg, help="Vertices a,v (1-based)")
    prob.set_defaults(handler=run_prob)

    pathprob = subparsers.add_parser("pathprob", parents=[common], help="Two-path probability P_avb(d)")
    add_sequence_arguments(pathprob)
    add_constraint_arguments(pathprob)
    pathprob.add_argument("--path", required=True, type=triple_arg, help="Vertices a,v,b (1-based)")
    pathprob.set_defaults(handler=run_pathprob)

    ratio = subparsers.add_parser("ratio", parents=[common], help="Count ratio N(d-e_a)/N(d-e_b)")
    add_sequence_arguments(ratio)
    add_constraint_arguments(ratio)
    ratio.add_argument("--pair", required=True, type=pair_arg, help="Vertices a,b (1-based)")
    ratio.set_defaults(handler=run_ratio)

    graphical = subparsers.add_parser("graphical", parents=[common], help="Graphicality tests")
    add_sequence_arguments(graphical)
    graphical.add_argument(
        "--mode",
        choices=("erdos_gallai", "koren"),
        default="erdos_gallai",
        help="Which test decides the reported verdict",
    )
    graphical.set_defaults(handler=run_graphical)


def _constraint_echo(constraint) -> dict | None:
    return None if constraint is None else constraint.as_dict()


def run_count(args: argparse.Namespace, ctx: CommandContext) -> CommandOutput:
    d = resolve_sequence(args)
    constraint = build_constraint(args, d.n)
    total = ctx.oracle.count(d, constraint)
    LOGGER.info("Count complete", extra={"n": d.n, "cache": ctx.oracle.counter.cache_info().as_dict()})
    return CommandOutput(
        {"count": str(total), "degrees": list(d.degrees), "constraint": _constraint_echo(constraint)}
    )


def run_prob(args: argparse.Namespace, ctx: CommandContext) -> CommandOutput:
    d = resolve_sequence(args)
    a, v = args.pair
    check_vertices(d, a, v)
    constraint = build_constraint(args, d.n)
    prob = ctx.oracle.edge_prob(d, a, v, constraint)
    bound = switching_bound(d)
    return CommandOutput(
        {
            "prob": fraction_fields(prob),
            "pair": [a + 1, v + 1],
            "degrees": list(d.degrees),
            "switching_bound": bound if isinstance(bound, float) else fraction_fields(bound),
            "constraint": _constraint_echo(constraint),
        }
    )


def run_pathprob(args: argparse.Namespace, ctx: CommandContext) -> CommandOutput:
    d = resolve_sequence(args)
    a, v, b = args.path
    check_vertices(d, a, v, b)
    constraint = build_constraint(args, d.n)
    prob = ctx.oracle.path_prob(d, a, v, b, constraint)
    return CommandOutput(
        {
            "prob": fraction_fields(prob),
            "path": [a + 1, v + 1, b + 1],
            "degrees": list(d.degrees),
            "constraint": _constraint_echo(constraint),
        }
    )


def run_ratio(args: argparse.Namespace, ctx: CommandContext) -> CommandOutput:
    d = resolve_sequence(args)
    a, b = args.pair
    check_vertices(d, a, b)
    constraint = build_constraint(args, d.n)
    ratio = ctx.oracle.ratio(d, a, b, constraint)
    return CommandOutput(
        {
            "ratio": fraction_fields(ratio),
            "pair": [a + 1, b + 1],
            "degrees": list(d.degrees),
            "parity": d.parity.value,
            "constraint": _constraint_echo(constraint),
        }
    )


def run_graphical(args: argparse.Namespace, ctx: CommandContext) -> CommandOutput:
    d = resolve_sequence(args)
    limit = int(ctx.setting("exact.koren_exhaustive_limit", KOREN_EXHAUSTIVE_LIMIT))
    eg = erdos_gallai(d)
    ko = koren(d, exhaustive_limit=limit)
    return CommandOutput(
        {
            "graphical": eg if args.mode == "erdos_gallai" else ko,
            "erdos_gallai": eg,
            "koren": ko,
            "koren_exhaustive_limit": limit,
            "realisation_gap": realisation_gap(d),
            "degrees": list(d.degrees),
            "stats": d.stats().as_floats(),
        }
    )


__all__ = ["register_counting_parsers", "run_count", "run_graphical", "run_pathprob", "run_prob", "run_ratio"]
