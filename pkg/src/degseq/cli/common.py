"""Shared plumbing for subcommands: context, argument types and outputs."""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping

from ..config.loader import Defaults, get_setting
from ..core.constraints import Pair, PairConstraint, parse_pair
from ..core.sequence import DegreeSequence
from ..errors import DegSeqError, SequenceError
from ..exact.counter import GraphCounter
from ..exact.queries import ExactOracle
from ..memo import MemoTable


@dataclass
class CommandContext:
    """Resolved configuration handed to every subcommand handler."""

    config: Mapping[str, Any]
    defaults: Defaults
    threads: int | None = None
    seed: int | None = None
    _oracle: ExactOracle | None = field(default=None, repr=False)

    def setting(self, dotted: str, default: Any = None) -> Any:
        return get_setting(self.config, dotted, default)

    @property
    def oracle(self) -> ExactOracle:
        if self._oracle is None:
            entries = int(self.setting("exact.memo_entries", 0))
            counter = GraphCounter(
                max_vertices=int(self.setting("exact.max_vertices", 16)),
                memo=MemoTable(max_entries=entries or None),
            )
            self._oracle = ExactOracle(counter)
        return self._oracle

    @property
    def effective_seed(self) -> int:
        return self.seed if self.seed is not None else int(self.setting("models.seed", 7))

    @property
    def effective_threads(self) -> int | None:
        threads = self.threads if self.threads is not None else int(self.setting("runtime.threads", 0))
        return threads or None


@dataclass
class CommandOutput:
    result: dict[str, Any]
    rows: list[dict[str, Any]] | None = None
    exit_code: int = 0


Handler = Callable[[argparse.Namespace, CommandContext], CommandOutput]


def _argument_type(parse: Callable[[str], Any]) -> Callable[[str], Any]:
    def convert(text: str) -> Any:
        try:
            return parse(text)
        except DegSeqError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from exc

    return convert


def _vertex_pair(text: str) -> Pair:
    """``"a,b"`` or ``"a-b"`` with 1-based vertices; order is kept."""

    tokens = text.replace("-", ",").split(",")
    try:
        a, b = (int(token) - 1 for token in tokens)
    except ValueError as exc:
        raise SequenceError(f"pairs must look like 'a,b' (received {text!r})") from exc
    if a < 0 or b < 0:
        raise SequenceError(f"vertices are numbered from 1 (received {text!r})")
    return a, b


def _vertex_triple(text: str) -> tuple[int, int, int]:
    tokens = text.replace("-", ",").split(",")
    try:
        a, v, b = (int(token) - 1 for token in tokens)
    except ValueError as exc:
        raise SequenceError(f"triples must look like 'a,v,b' (received {text!r})") from exc
    if min(a, v, b) < 0:
        raise SequenceError(f"vertices are numbered from 1 (received {text!r})")
    return a, v, b


sequence_arg = _argument_type(DegreeSequence.parse)
pair_arg = _argument_type(_vertex_pair)
triple_arg = _argument_type(_vertex_triple)
edge_arg = _argument_type(parse_pair)


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer (received {text!r})") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer (received {value})")
    return value


def non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer (received {text!r})") from exc
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer (received {value})")
    return value


def resolve_sequence(args: argparse.Namespace) -> DegreeSequence:
    if getattr(args, "seq_file", None):
        return DegreeSequence.from_file(args.seq_file)
    if getattr(args, "seq", None) is None:
        raise SequenceError("provide --seq or --seq-file")
    return args.seq


def add_sequence_arguments(parser: argparse.ArgumentParser, *, required: bool = True) -> None:
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("--seq", type=sequence_arg, help="Comma-separated degrees, e.g. 3,3,3,3")
    group.add_argument("--seq-file", help="File with one degree per line")


def add_constraint_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--forbid", action="append", default=[], type=edge_arg, help="Forbidden pair a-b (1-based, repeatable)"
    )
    parser.add_argument(
        "--force", action="append", default=[], type=edge_arg, help="Forced pair a-b (1-based, repeatable)"
    )


def build_constraint(args: argparse.Namespace, n: int) -> PairConstraint | None:
    forbidden: Iterable[Pair] = getattr(args, "forbid", []) or []
    forced: Iterable[Pair] = getattr(args, "force", []) or []
    if not forbidden and not forced:
        return None
    return PairConstraint(n, frozenset(forbidden), frozenset(forced))


def check_vertices(d: DegreeSequence, *vertices: int) -> None:
    for vertex in vertices:
        if not 0 <= vertex < d.n:
            raise SequenceError("vertex out of range", context={"vertex": vertex + 1, "n": d.n})


def fraction_fields(value: Any) -> dict[str, Any]:
    """Exact rational as a string plus its float value."""

    return {"exact": f"{value.numerator}/{value.denominator}", "value": float(value)}


__all__ = [
    "CommandContext",
    "CommandOutput",
    "Handler",
    "add_constraint_arguments",
    "add_sequence_arguments",
    "build_constraint",
    "check_vertices",
    "fraction_fields",
    "non_negative_int",
    "pair_arg",
    "positive_int",
    "resolve_sequence",
    "sequence_arg",
    "triple_arg",
]
