"""``asym`` subcommand: closed-form counts, probabilities and ratios."""

from __future__ import annotations

import argparse
import math
from fractions import Fraction
from typing import Any

from ..asymptotics.edges import (
    Variant,
    edge_prob_formula,
    pgr,
    pi_value,
    rgr,
    rho_value,
    sparse_edge_prob,
    sparse_path_prob,
    sparse_ratio,
    sparse_ratio_refined,
)
from ..asymptotics.envelope import error_envelope
from ..asymptotics.formulas import (
    FormulaResult,
    binom_model_prob,
    conj_ratio,
    conjectured_count,
    correction_exponent,
    h_formula,
    regular_count_formula,
)
from ..core.sequence import DegreeSequence
from ..errors import PreconditionError, SequenceError
from .common import (
    CommandContext,
    CommandOutput,
    add_sequence_arguments,
    check_vertices,
    non_negative_int,
    pair_arg,
    positive_int,
    resolve_sequence,
    triple_arg,
)

FORMULAS = (
    "binom",
    "h",
    "conj",
    "conj_ratio",
    "regular",
    "pgr",
    "rgr",
    "pi",
    "rho",
    "edge",
    "sparse",
    "sparse_ratio",
)


def register_asym_parser(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    asym = subparsers.add_parser("asym", parents=[common], help="Evaluate an asymptotic formula")
    asym.add_argument("--formula", required=True, choices=FORMULAS)
    add_sequence_arguments(asym, required=False)
    asym.add_argument("--pair", type=pair_arg, help="Vertices a,b (1-based)")
    asym.add_argument("--path", type=triple_arg, help="Vertices a,v,b (1-based) for the sparse two-path estimate")
    asym.add_argument("--n", type=positive_int, help="Vertex count (regular, or raw pi/rho parameters)")
    asym.add_argument("--d", type=non_negative_int, help="Common degree for --formula regular")
    asym.add_argument("--variant", choices=[variant.value for variant in Variant], default=Variant.CORRECTED.value)
    asym.add_argument("--exact", action="store_true", help="Also report the exact rational where available")
    asym.add_argument("--refined", action="store_true", help="Use the refined sparse ratio")
    asym.add_argument("--k0", type=positive_int, help="Truncation depth for the error envelope")
    asym.add_argument("--alpha", type=float, help="Spread exponent: eps = d^(alpha - 1)")
    for name in ("eps-a", "eps-b", "mu", "sigma2", "mean"):
        asym.add_argument(f"--{name}", type=float, help="Raw parameter for pi/rho without a sequence")
    asym.set_defaults(handler=run_asym)


def _from_value(value: float | Fraction) -> dict[str, Any]:
    number = float(value)
    payload: dict[str, Any] = {"value": number, "log_value": math.log(number) if number > 0 else None}
    if isinstance(value, Fraction):
        payload["exact"] = f"{value.numerator}/{value.denominator}"
    return payload


def _from_result(result: FormulaResult) -> dict[str, Any]:
    return result.as_dict()


def _require_pair(args: argparse.Namespace, d: DegreeSequence) -> tuple[int, int]:
    if args.pair is None:
        raise SequenceError(f"--formula {args.formula} needs --pair")
    check_vertices(d, *args.pair)
    return args.pair


def _raw_pi_rho(args: argparse.Namespace) -> dict[str, Any]:
    names = ("eps_a", "eps_b", "mu", "sigma2", "mean", "n")
    missing = [name for name in names if getattr(args, name) is None]
    if missing:
        raise SequenceError(
            "provide --seq with --pair, or every raw parameter",
            context={"missing": ["--" + name.replace("_", "-") for name in missing]},
        )
    evaluate = pi_value if args.formula == "pi" else rho_value
    value = evaluate(args.variant, args.eps_a, args.eps_b, args.mu, args.sigma2, args.mean, args.n)
    return {"formula": args.formula, "variant": args.variant, **_from_value(value),
            "parameters": {name: getattr(args, name) for name in names}}


def _sequence_formula(args: argparse.Namespace, d: DegreeSequence) -> dict[str, Any]:
    formula = args.formula
    if formula == "binom":
        return _from_result(binom_model_prob(d, exact=args.exact))
    if formula == "h":
        return {**_from_result(h_formula(d)), "correction_exponent": correction_exponent(d)}
    if formula == "conj":
        return _from_result(conjectured_count(d))
    if formula == "conj_ratio":
        a, b = _require_pair(args, d)
        return _from_value(conj_ratio(d, a, b))
    if formula == "pgr":
        a, v = _require_pair(args, d)
        return _from_value(pgr(d, a, v, exact=args.exact))
    if formula == "edge":
        a, v = _require_pair(args, d)
        return _from_value(edge_prob_formula(d, a, v, exact=args.exact))
    if formula == "rgr":
        a, b = _require_pair(args, d)
        return _from_value(rgr(d, a, b, exact=args.exact))
    if formula in ("pi", "rho"):
        a, b = _require_pair(args, d)
        stats = d.stats()
        eps = stats.eps
        mean, mu, sigma2 = float(stats.mean), float(stats.mu), float(stats.sigma2)
        evaluate = pi_value if formula == "pi" else rho_value
        return {"variant": args.variant,
                **_from_value(evaluate(args.variant, float(eps[a]), float(eps[b]), mu, sigma2, mean, d.n))}
    if formula == "sparse":
        if args.path is not None:
            check_vertices(d, *args.path)
            return _from_value(sparse_path_prob(d, *args.path))
        a, v = _require_pair(args, d)
        return _from_value(sparse_edge_prob(d, a, v))
    a, b = _require_pair(args, d)
    return _from_value(sparse_ratio_refined(d, a, b) if args.refined else sparse_ratio(d, a, b))


def run_asym(args: argparse.Namespace, ctx: CommandContext) -> CommandOutput:
    if args.formula == "regular":
        if args.n is None or args.d is None:
            raise SequenceError("--formula regular needs --n and --d")
        result = _from_result(regular_count_formula(args.n, args.d))
        return CommandOutput({"formula": "regular", "n": args.n, "d": args.d, **result})

    if args.seq is None and args.seq_file is None:
        if args.formula in ("pi", "rho"):
            return CommandOutput(_raw_pi_rho(args))
        raise SequenceError(f"--formula {args.formula} needs --seq or --seq-file")

    d = resolve_sequence(args)
    payload: dict[str, Any] = {"formula": args.formula, "degrees": list(d.degrees)}
    payload.update(_sequence_formula(args, d))
    if args.pair is not None:
        payload["pair"] = [args.pair[0] + 1, args.pair[1] + 1]
    k0 = args.k0 if args.k0 is not None else int(ctx.setting("operators.k0", 4))
    try:
        payload["envelope"] = error_envelope(d, k0, alpha=args.alpha).as_dict()
    except PreconditionError:
        payload["envelope"] = None
    return CommandOutput(payload)


__all__ = ["FORMULAS", "register_asym_parser", "run_asym"]
