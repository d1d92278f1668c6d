"""``fixpoint`` subcommand: iterate C and report the per-step distances."""

from __future__ import annotations

import argparse
from fractions import Fraction

from ..asymptotics.edges import Variant
from ..core.sequence import DegreeSequence, ParityClass
from ..errors import CapacityError
from ..operators.fixed_point import iterate_fixed_point, required_radius
from ..operators.functions import ArithmeticMode, Domain, DomainLadder, EdgeFunction, OperatorConfig
from ..operators.seeds import exact_edge_function, pgr_edge_function, pi_edge_function
from .common import CommandContext, CommandOutput, non_negative_int, positive_int, sequence_arg

INITIAL_FUNCTIONS = ("pgr", "pi", "exact")


def register_fixpoint_parser(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    fixpoint = subparsers.add_parser(
        "fixpoint", parents=[common], help="Iterate the combined operator from a starting function"
    )
    fixpoint.add_argument("--root", required=True, type=sequence_arg, help="Root sequence of the domain")
    fixpoint.add_argument("--k0", type=positive_int, help="Two-path truncation depth")
    fixpoint.add_argument("--steps", type=non_negative_int, default=1)
    fixpoint.add_argument("--init", choices=INITIAL_FUNCTIONS, default="pgr")
    fixpoint.add_argument("--variant", choices=[variant.value for variant in Variant], default=Variant.CORRECTED.value)
    fixpoint.add_argument(
        "--radius", type=non_negative_int, help="Ladder radius (default: exactly what the steps need)"
    )
    fixpoint.add_argument("--perturb", type=float, help="Also iterate the start scaled by this factor")
    fixpoint.add_argument("--mode", choices=[mode.value for mode in ArithmeticMode], help="Arithmetic mode")
    fixpoint.add_argument("--parity", choices=("even", "odd", "any"), default="even")
    fixpoint.add_argument("--max-points", type=positive_int, help="Visit at most this many points per level")
    fixpoint.set_defaults(handler=run_fixpoint)


def _initial(init: str, variant: str, domain: Domain, mode: ArithmeticMode, ctx: CommandContext) -> EdgeFunction:
    if init == "exact":
        cap = int(ctx.setting("exact.max_vertices", 16))
        if domain.root is not None and domain.root.n > cap:
            raise CapacityError("exact start needs a small root", context={"n": domain.root.n, "max_vertices": cap})
        return exact_edge_function(ctx.oracle, None, domain)
    if init == "pi":
        return pi_edge_function(variant, domain)
    return pgr_edge_function(domain, exact=mode is ArithmeticMode.EXACT)


def run_fixpoint(args: argparse.Namespace, ctx: CommandContext) -> CommandOutput:
    root: DegreeSequence = args.root
    cfg = OperatorConfig(
        k0=args.k0 if args.k0 is not None else int(ctx.setting("operators.k0", 4)),
        mode=args.mode or ctx.setting("operators.arithmetic", "float"),
    )
    radius = args.radius if args.radius is not None else required_radius(args.steps, cfg)
    ladder = DomainLadder(root, radius)
    domain = Domain(root, radius)
    p0 = _initial(args.init, args.variant, domain, cfg.mode, ctx)
    p0_prime = None
    if args.perturb:
        factor = Fraction(str(args.perturb)) if cfg.mode is ArithmeticMode.EXACT else float(args.perturb)
        p0_prime = p0.scaled(factor)
    parity = None if args.parity == "any" else ParityClass(args.parity)
    max_points = args.max_points or int(ctx.setting("operators.max_points", 64))
    _, report = iterate_fixed_point(
        p0, args.steps, cfg, ladder, p0_prime=p0_prime, parity=parity, max_points=max_points
    )
    result = {
        "root": list(root.degrees),
        "init": args.init,
        "config": cfg.as_dict(),
        "perturb": args.perturb,
        **report.as_dict(),
    }
    return CommandOutput(result, rows=report.rows())


__all__ = ["INITIAL_FUNCTIONS", "register_fixpoint_parser", "run_fixpoint"]
