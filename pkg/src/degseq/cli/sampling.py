"""Random-model subcommands: ``sample``, ``compare``, ``concentration`` and ``table``."""

from __future__ import annotations

import argparse
from typing import Any

import numpy as np

from ..asymptotics.formulas import normalising_constant
from ..core.sequence import DegreeSequence
from ..errors import ModelError
from ..export import write_jsonl
from ..models.compare import Statistic, compare
from ..models.experiments import exact_vs_formula, sigma_concentration, variance_d1
from ..models.samplers import ModelKind, ModelSample, ModelSpec, sample_matrix
from .common import CommandContext, CommandOutput, non_negative_int, positive_int

_MODEL_CHOICES = [kind.value for kind in ModelKind]
INLINE_SAMPLE_LIMIT = 1000


def _add_model_parameters(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", required=True, type=positive_int, help="Number of vertices")
    parser.add_argument("--m", type=non_negative_int, help="Edge count for gnm/bm")
    parser.add_argument("--p", type=float, help="Edge probability for gnp/bp/ep/ep_prime/bhatp")


def register_sampling_parsers(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    sample_parser = subparsers.add_parser("sample", parents=[common], help="Draw degree sequences from a model")
    sample_parser.add_argument("--model", required=True, choices=_MODEL_CHOICES)
    _add_model_parameters(sample_parser)
    sample_parser.add_argument("--count", type=positive_int, default=1)
    sample_parser.add_argument("--out", help="Write one JSON object per line to this path")
    sample_parser.set_defaults(handler=run_sample)

    compare_parser = subparsers.add_parser("compare", parents=[common], help="Distance between two models")
    compare_parser.add_argument("--model-a", required=True, choices=_MODEL_CHOICES)
    compare_parser.add_argument("--model-b", required=True, choices=_MODEL_CHOICES)
    _add_model_parameters(compare_parser)
    compare_parser.add_argument("--statistic", choices=[stat.value for stat in Statistic], default="median")
    compare_parser.add_argument("--k", type=non_negative_int, help="Degree counted by the nk statistic")
    compare_parser.add_argument("--samples", type=positive_int, default=10_000)
    compare_parser.add_argument("--bootstrap-rounds", type=non_negative_int)
    compare_parser.set_defaults(handler=run_compare)

    concentration = subparsers.add_parser(
        "concentration", parents=[common], help="Tail frequency of the degree variance"
    )
    concentration.add_argument("--model", required=True, choices=[ModelKind.GNM.value, ModelKind.BM.value])
    _add_model_parameters(concentration)
    concentration.add_argument("--alpha", type=float, default=0.5)
    concentration.add_argument("--samples", type=positive_int, default=10_000)
    concentration.set_defaults(handler=run_concentration)

    table = subparsers.add_parser("table", parents=[common], help="Exact G(n, m) degree law against the formula")
    table.add_argument("--n", required=True, type=positive_int)
    table.add_argument("--m", required=True, type=non_negative_int)
    table.add_argument(
        "--normaliser", action="store_true", help="Also sum the formula over all sequences with this sum"
    )
    table.set_defaults(handler=run_table)


def _spec(kind: str, args: argparse.Namespace, seed: int) -> ModelSpec:
    model = ModelKind(kind)
    if model.uses_m:
        if args.m is None:
            raise ModelError(f"model {model.value} needs --m")
        return ModelSpec(model, args.n, m=args.m, seed=seed)
    if args.p is None:
        raise ModelError(f"model {model.value} needs --p")
    return ModelSpec(model, args.n, p=args.p, seed=seed)


def _chunk_size(ctx: CommandContext) -> int:
    return int(ctx.setting("models.chunk_size", 2048))


def run_sample(args: argparse.Namespace, ctx: CommandContext) -> CommandOutput:
    spec = _spec(args.model, args, ctx.effective_seed)
    threads, chunk_size = ctx.effective_threads, _chunk_size(ctx)
    result: dict[str, Any] = {"model": spec.as_dict(), "draws": args.count, "out": args.out}
    if args.out:
        matrix = sample_matrix(spec, args.count, threads=threads, chunk_size=chunk_size)
        written = write_jsonl(
            args.out,
            (
                ModelSample(DegreeSequence(tuple(int(x) for x in row)), spec, index).as_dict()
                for index, row in enumerate(matrix)
            ),
        )
        result["written"] = written
        rows: list[dict[str, Any]] | None = None
    else:
        if args.count > INLINE_SAMPLE_LIMIT:
            raise ModelError(
                "large sample batches need --out", context={"count": args.count, "limit": INLINE_SAMPLE_LIMIT}
            )
        matrix = sample_matrix(spec, args.count, threads=threads, chunk_size=chunk_size)
        rows = [{"index": index, "degrees": [int(x) for x in row]} for index, row in enumerate(matrix)]
        result["samples"] = [row["degrees"] for row in rows]
    sums = matrix.sum(axis=1)
    result["summary"] = {
        "mean_degree": float(matrix.mean()),
        "mean_d1": float(matrix[:, 0].mean()),
        "var_d1": float(matrix[:, 0].var()),
        "min_sum": int(sums.min()),
        "max_sum": int(sums.max()),
        "all_even": bool(np.all(sums % 2 == 0)),
    }
    return CommandOutput(result, rows=rows)


def run_compare(args: argparse.Namespace, ctx: CommandContext) -> CommandOutput:
    seed = ctx.effective_seed
    rounds = args.bootstrap_rounds
    if rounds is None:
        rounds = int(ctx.setting("models.bootstrap_rounds", 200))
    report = compare(
        _spec(args.model_a, args, seed),
        _spec(args.model_b, args, seed + 1),
        args.statistic,
        args.samples,
        k=args.k,
        threads=ctx.effective_threads,
        chunk_size=_chunk_size(ctx),
        bootstrap_rounds=rounds,
    )
    return CommandOutput(report.as_dict(), rows=report.rows())


def run_concentration(args: argparse.Namespace, ctx: CommandContext) -> CommandOutput:
    spec = _spec(args.model, args, ctx.effective_seed)
    report = sigma_concentration(
        spec, args.samples, args.alpha, threads=ctx.effective_threads, chunk_size=_chunk_size(ctx)
    )
    return CommandOutput(report.as_dict())


def run_table(args: argparse.Namespace, ctx: CommandContext) -> CommandOutput:
    table = exact_vs_formula(args.n, args.m, ctx.oracle)
    payload = table.as_dict()
    payload["variance_d1"] = variance_d1(ModelKind.GNM, args.n, args.m) if args.n > 1 else 0.0
    if args.normaliser:
        payload["normalising_constant"] = normalising_constant(args.n, args.m)
    return CommandOutput(payload, rows=[row.as_dict() for row in table.rows])


__all__ = [
    "INLINE_SAMPLE_LIMIT",
    "register_sampling_parsers",
    "run_compare",
    "run_concentration",
    "run_sample",
    "run_table",
]
