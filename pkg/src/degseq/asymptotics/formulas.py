"""Closed-form count and probability approximations evaluated in log space."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Any

from scipy.special import gammaln

from ..core.sequence import DegreeSequence
from ..errors import PreconditionError

EXACT_MAX_VERTICES = 16


@dataclass(frozen=True)
class FormulaResult:
    """Natural-log value plus the float value when it does not overflow."""

    log_value: float
    exact: Fraction | None = None

    @property
    def value(self) -> float | None:
        try:
            return math.exp(self.log_value)
        except OverflowError:
            return None

    def as_dict(self) -> dict[str, Any]:
        payload: dict[str, Any] = {"log_value": self.log_value, "value": self.value}
        if self.exact is not None:
            payload["exact"] = f"{self.exact.numerator}/{self.exact.denominator}"
        return payload


def log_binom(n: int | float, k: int | float) -> float:
    if k < 0 or k > n:
        return -math.inf
    return float(gammaln(n + 1) - gammaln(k + 1) - gammaln(n - k + 1))


def _density(d: DegreeSequence) -> float:
    n = d.n
    if n < 2:
        raise PreconditionError("density needs at least two vertices", context={"n": n})
    return d.total / (n * (n - 1))


def _check_open_density(mu: float, d: DegreeSequence) -> None:
    if not 0 < mu < 1:
        raise PreconditionError(
            "formula needs 0 < mu < 1", context={"degrees": list(d.degrees), "mu": mu}
        )


def _gamma2(d: DegreeSequence) -> float:
    return float(d.stats().gamma2)


def binom_model_prob(d: DegreeSequence, *, exact: bool = False) -> FormulaResult:
    """Probability of ``d`` under n binomials conditioned on the sum 2m."""

    n = d.n
    if d.total % 2:
        raise PreconditionError("the binomial model needs an even degree sum", context={"M1": d.total})
    if d.max_degree > n - 1:
        raise PreconditionError("degrees must not exceed n - 1", context={"degrees": list(d.degrees)})
    cells = n * (n - 1)
    log_value = sum(log_binom(n - 1, value) for value in d.degrees) - log_binom(cells, d.total)
    exact_value = None
    if exact:
        if n > EXACT_MAX_VERTICES:
            raise PreconditionError(
                "exact-rational mode is limited", context={"n": n, "max_vertices": EXACT_MAX_VERTICES}
            )
        numerator = 1
        for value in d.degrees:
            numerator *= comb(n - 1, value)
        exact_value = Fraction(numerator, comb(cells, d.total))
    return FormulaResult(log_value=log_value, exact=exact_value)


def correction_exponent(d: DegreeSequence) -> float:
    """1/4 - γ₂²/(4μ²(1-μ)²)."""

    mu = _density(d)
    _check_open_density(mu, d)
    gamma2 = _gamma2(d)
    return 0.25 - gamma2 * gamma2 / (4 * mu * mu * (1 - mu) ** 2)


def h_formula(d: DegreeSequence) -> FormulaResult:
    """Conjectured probability of ``d`` as the degree sequence of G(n, m)."""

    exponent = correction_exponent(d)
    return FormulaResult(log_value=binom_model_prob(d).log_value + exponent)


def conjectured_count(d: DegreeSequence) -> FormulaResult:
    n = d.n
    mu = _density(d)
    _check_open_density(mu, d)
    entropy = mu * math.log(mu) + (1 - mu) * math.log(1 - mu)
    log_value = (
        0.5 * math.log(2)
        + correction_exponent(d)
        + n * (n - 1) / 2 * entropy
        + sum(log_binom(n - 1, value) for value in d.degrees)
    )
    return FormulaResult(log_value=log_value)


def regular_count_formula(n: int, d: int) -> FormulaResult:
    """Approximate number of d-regular graphs on n labelled vertices."""

    if (d * n) % 2:
        raise PreconditionError("dn must be even", context={"n": n, "d": d})
    if not 0 <= d <= n - 1:
        raise PreconditionError("degree out of range", context={"n": n, "d": d})
    m = d * n // 2
    pairs = n * (n - 1) // 2
    log_value = (
        n * log_binom(n - 1, d) + log_binom(pairs, m) - log_binom(n * (n - 1), 2 * m) + 0.25
    )
    return FormulaResult(log_value=log_value)


def conj_ratio(d: DegreeSequence, a: int, b: int) -> float:
    """Leading expression for H(d - e_a)/H(d - e_b) at an odd sequence."""

    n = d.n
    if d.total % 2 == 0:
        raise PreconditionError("the ratio is taken at odd-sum sequences", context={"M1": d.total})
    if d.max_degree > n / 2:
        raise PreconditionError("needs max degree at most n/2", context={"Delta": d.max_degree, "n": n})
    da, db = d[a], d[b]
    if da < 1 or db < 1:
        raise PreconditionError("endpoints need positive degree", context={"a": a, "b": b})
    mu = _density(d)
    if mu <= 0:
        raise PreconditionError("needs positive density")
    if a == b:
        return 1.0
    mean = d.total / n
    gamma2 = _gamma2(d)
    lead = da * (n - db) / (db * (n - da))
    return lead * math.exp((da - db) * gamma2 / (mean * mean * (1 - mu) ** 2))


def normalising_constant(n: int, m: int) -> float:
    """Sum of H(d) over all sequences with sum 2m and entries below n."""

    total = 0.0
    for degrees in _compositions(2 * m, n, n - 1):
        try:
            total += h_formula(DegreeSequence(degrees)).value or 0.0
        except PreconditionError:
            continue
    return total


def _compositions(total: int, parts: int, cap: int):
    if parts == 1:
        if total <= cap:
            yield (total,)
        return
    for first in range(min(total, cap), -1, -1):
        rest = total - first
        if rest > cap * (parts - 1):
            break
        for tail in _compositions(rest, parts - 1, cap):
            yield (first,) + tail


__all__ = [
    "EXACT_MAX_VERTICES",
    "FormulaResult",
    "binom_model_prob",
    "conj_ratio",
    "conjectured_count",
    "correction_exponent",
    "h_formula",
    "log_binom",
    "normalising_constant",
    "regular_count_formula",
]
