"""Experiments pairing the exact oracle and the samplers with the closed-form predictions."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Any, Iterator

import numpy as np
from scipy import stats as sps

from ..asymptotics.formulas import binom_model_prob, h_formula
from ..core.graphical import erdos_gallai
from ..core.sequence import DegreeSequence
from ..errors import ModelError, PreconditionError
from ..exact.queries import ExactOracle
from ..logging_config import get_logger
from .samplers import DEFAULT_CHUNK_SIZE, ModelKind, ModelSpec, sample_matrix

LOGGER = get_logger(__name__)

EXPERIMENT_MAX_VERTICES = 10


def _fraction_text(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def sorted_classes(n: int, total: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing n-tuples with entries in [0, n-1] summing to ``total``."""

    def _walk(remaining: int, slots: int, cap: int) -> Iterator[tuple[int, ...]]:
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        for first in range(min(cap, remaining), -1, -1):
            if first * slots < remaining:
                break
            for tail in _walk(remaining - first, slots - 1, first):
                yield (first,) + tail

    yield from _walk(total, n, n - 1)


def permutation_count(degrees: tuple[int, ...]) -> int:
    """Number of distinct labelled sequences in the class of ``degrees``."""

    out = factorial(len(degrees))
    for multiplicity in Counter(degrees).values():
        out //= factorial(multiplicity)
    return out


@dataclass(frozen=True)
class FormulaRow:
    degrees: tuple[int, ...]
    permutations: int
    count: int
    exact_prob: Fraction
    binomial_prob: Fraction
    formula_prob: float | None
    ratio: float | None

    def as_dict(self) -> dict[str, Any]:
        return {
            "degrees": list(self.degrees),
            "permutations": self.permutations,
            "count": str(self.count),
            "exact_prob": _fraction_text(self.exact_prob),
            "exact_prob_float": float(self.exact_prob),
            "binomial_prob": float(self.binomial_prob),
            "formula_prob": self.formula_prob,
            "ratio": self.ratio,
        }


@dataclass
class FormulaTable:
    n: int
    m: int
    rows: list[FormulaRow] = field(default_factory=list)

    @property
    def total(self) -> Fraction:
        return sum((row.exact_prob for row in self.rows), Fraction(0))

    def near_regular(self, spread: int = 1) -> list[FormulaRow]:
        """Rows whose entries all lie within ``spread`` of the mean degree 2m/n."""

        mean = Fraction(2 * self.m, self.n)
        return [row for row in self.rows if all(abs(x - mean) <= spread for x in row.degrees)]

    def as_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "m": self.m,
            "total": _fraction_text(self.total),
            "rows": [row.as_dict() for row in self.rows],
        }


def exact_vs_formula(n: int, m: int, oracle: ExactOracle | None = None) -> FormulaTable:
    """Exact degree-sequence law of G(n, m) next to the binomial formula with its correction.

    One row per permutation class; probabilities are exact rationals summing to 1.
    """

    if not 1 <= n <= EXPERIMENT_MAX_VERTICES:
        raise PreconditionError(
            "the exact table is limited to small n", context={"n": n, "max_vertices": EXPERIMENT_MAX_VERTICES}
        )
    pairs = n * (n - 1) // 2
    if not 0 <= m <= pairs:
        raise PreconditionError("m must lie in [0, n(n-1)/2]", context={"n": n, "m": m})
    oracle = oracle or ExactOracle()
    graphs = comb(pairs, m)
    table = FormulaTable(n=n, m=m)
    for degrees in sorted_classes(n, 2 * m):
        seq = DegreeSequence(degrees)
        if not erdos_gallai(seq):
            continue
        count = oracle.count(seq)
        if count == 0:
            continue
        perms = permutation_count(degrees)
        exact_prob = Fraction(count * perms, graphs)
        binomial = binom_model_prob(seq, exact=True).exact or Fraction(0)
        try:
            formula = h_formula(seq).value
        except PreconditionError:
            formula = None
        formula_prob = formula * perms if formula is not None else None
        ratio = float(exact_prob) / formula_prob if formula_prob else None
        table.rows.append(
            FormulaRow(
                degrees=degrees,
                permutations=perms,
                count=count,
                exact_prob=exact_prob,
                binomial_prob=binomial * perms,
                formula_prob=formula_prob,
                ratio=ratio,
            )
        )
    LOGGER.info("Built exact-vs-formula table", extra={"n": n, "m": m, "classes": len(table.rows)})
    return table


def _require_edge_count_model(kind: ModelKind | str) -> ModelKind:
    kind = ModelKind(kind)
    if kind not in (ModelKind.GNM, ModelKind.BM):
        raise ModelError("only gnm and bm have a fixed edge count", context={"kind": kind.value})
    return kind


def d1_marginal(kind: ModelKind | str, n: int, m: int):
    """Exact law of the first degree: hypergeometric in both fixed-m models."""

    kind = _require_edge_count_model(kind)
    if n < 2:
        raise ModelError("the marginal needs at least two vertices", context={"n": n})
    if kind is ModelKind.GNM:
        return sps.hypergeom(M=n * (n - 1) // 2, n=n - 1, N=m)
    return sps.hypergeom(M=n * (n - 1), n=n - 1, N=2 * m)


def bm_marginal(n: int, m: int):
    return d1_marginal(ModelKind.BM, n, m)


def variance_d1(kind: ModelKind | str, n: int, m: int) -> float:
    kind = _require_edge_count_model(kind)
    if n < 2:
        return 0.0
    if kind is ModelKind.GNM:
        population, hits, draws = n * (n - 1) // 2, n - 1, m
    else:
        population, hits, draws = n * (n - 1), n - 1, 2 * m
    if population <= 1:
        return 0.0
    share = hits / population
    return draws * share * (1 - share) * (population - draws) / (population - 1)


@dataclass
class ConcentrationReport:
    model: dict[str, Any]
    samples: int
    alpha: float
    variance_d1: float
    threshold: float
    exceedances: int
    mean_sigma2: float
    max_deviation: float

    @property
    def frequency(self) -> float:
        return self.exceedances / self.samples if self.samples else 0.0

    def as_dict(self) -> dict[str, Any]:
        return {
            "model": self.model,
            "samples": self.samples,
            "alpha": self.alpha,
            "variance_d1": self.variance_d1,
            "threshold": self.threshold,
            "exceedances": self.exceedances,
            "frequency": self.frequency,
            "mean_sigma2": self.mean_sigma2,
            "max_deviation": self.max_deviation,
        }


def sigma_concentration(
    spec: ModelSpec,
    samples: int,
    alpha: float,
    *,
    threads: int | None = None,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> ConcentrationReport:
    """Frequency of |σ² - Var d₁| >= α·d̄ + 1/n over sampled sequences."""

    kind = _require_edge_count_model(spec.kind)
    n, m = spec.n, spec.m or 0
    variance = variance_d1(kind, n, m)
    threshold = alpha * (2 * m / n) + 1 / n
    matrix = sample_matrix(spec, samples, threads=threads, chunk_size=chunk_size)
    if samples:
        sigma2 = matrix.var(axis=1)
        deviation = np.abs(sigma2 - variance)
        exceedances = int((deviation >= threshold).sum())
        mean_sigma2, max_deviation = float(sigma2.mean()), float(deviation.max())
    else:
        exceedances, mean_sigma2, max_deviation = 0, 0.0, 0.0
    report = ConcentrationReport(
        model=spec.as_dict(),
        samples=samples,
        alpha=alpha,
        variance_d1=variance,
        threshold=threshold,
        exceedances=exceedances,
        mean_sigma2=mean_sigma2,
        max_deviation=max_deviation,
    )
    LOGGER.info("Measured sigma concentration", extra={"model": spec.label(), "frequency": report.frequency})
    return report


@dataclass(frozen=True)
class MarginalCheck:
    model: dict[str, Any]
    samples: int
    ks_statistic: float
    ks_pvalue: float
    tv: float

    def as_dict(self) -> dict[str, Any]:
        return {
            "model": self.model,
            "samples": self.samples,
            "ks_statistic": self.ks_statistic,
            "ks_pvalue": self.ks_pvalue,
            "tv": self.tv,
        }


def marginal_check(
    spec: ModelSpec, samples: int, *, threads: int | None = None, chunk_size: int = DEFAULT_CHUNK_SIZE
) -> MarginalCheck:
    """Empirical first degree against its exact hypergeometric law."""

    law = d1_marginal(spec.kind, spec.n, spec.m or 0)
    if samples < 1:
        raise ModelError("the marginal check needs samples", context={"samples": samples})
    first = sample_matrix(spec, samples, threads=threads, chunk_size=chunk_size)[:, 0]
    result = sps.kstest(first, law.cdf)
    support = np.arange(spec.n)
    empirical = np.bincount(first, minlength=spec.n)[: spec.n] / samples
    tv = float(0.5 * np.abs(empirical - law.pmf(support)).sum())
    return MarginalCheck(
        model=spec.as_dict(),
        samples=samples,
        ks_statistic=float(result.statistic),
        ks_pvalue=float(result.pvalue),
        tv=tv,
    )


__all__ = [
    "ConcentrationReport",
    "EXPERIMENT_MAX_VERTICES",
    "FormulaRow",
    "FormulaTable",
    "MarginalCheck",
    "bm_marginal",
    "d1_marginal",
    "exact_vs_formula",
    "marginal_check",
    "permutation_count",
    "sigma_concentration",
    "sorted_classes",
    "variance_d1",
]
