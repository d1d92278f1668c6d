"""Edge-probability and count-ratio approximations."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..core.sequence import DegreeSequence
from ..errors import PreconditionError

Number = Union[float, Fraction]


class Variant(str, enum.Enum):
    """Which closed form of the (π, ρ) pair to use."""

    CORRECTED = "corrected"
    SIMPLE = "simple"


def _mean(d: DegreeSequence, exact: bool) -> Number:
    mean: Number = Fraction(d.total, d.n) if exact else d.total / d.n
    if not 0 < mean < d.n - 1:
        raise PreconditionError(
            "formula needs 0 < mean degree < n - 1",
            context={"degrees": list(d.degrees), "mean": float(mean)},
        )
    return mean


def pgr(d: DegreeSequence, a: int, v: int, *, exact: bool = False) -> Number:
    """(d_a d_v / d(n-1)) (1 - (d_a - d)(d_v - d) / (d(n-1-d)))."""

    if a == v:
        return Fraction(0) if exact else 0.0
    n = d.n
    mean = _mean(d, exact)
    da, dv = d[a], d[v]
    return da * dv / (mean * (n - 1)) * (1 - (da - mean) * (dv - mean) / (mean * (n - 1 - mean)))


def edge_prob_formula(d: DegreeSequence, a: int, b: int, *, exact: bool = False) -> Number:
    """Leading term for the probability that ab is an edge of a uniform realisation."""

    return pgr(d, a, b, exact=exact)


def rgr(d: DegreeSequence, a: int, b: int, *, exact: bool = False) -> Number:
    """d_a(n - d_b)/(d_b(n - d_a)) (1 + (d_a - d_b)σ²/(d² n))."""

    if a == b:
        return Fraction(1) if exact else 1.0
    n = d.n
    mean = _mean(d, exact)
    da, db = d[a], d[b]
    if db < 1 or da >= n or db >= n:
        raise PreconditionError("ratio endpoints out of range", context={"d_a": da, "d_b": db, "n": n})
    sigma2: Number = d.stats().sigma2 if exact else float(d.stats().sigma2)
    lead = Fraction(da * (n - db), db * (n - da)) if exact else da * (n - db) / (db * (n - da))
    return lead * (1 + (da - db) * sigma2 / (mean * mean * n))


def sparse_edge_prob(d: DegreeSequence, a: int, v: int) -> float:
    """d_a d_v / M1."""

    if d.total == 0:
        raise PreconditionError("needs a positive degree sum")
    if a == v:
        return 0.0
    return d[a] * d[v] / d.total


def sparse_path_prob(d: DegreeSequence, a: int, v: int, b: int) -> float:
    """d_a d_v (d_v - 1) d_b / M1²."""

    if d.total == 0:
        raise PreconditionError("needs a positive degree sum")
    if v in (a, b):
        return 0.0
    return d[a] * d[v] * (d[v] - 1) * d[b] / d.total**2


def _m2(d: DegreeSequence) -> int:
    return sum(value * (value - 1) for value in d.degrees)


def sparse_ratio(d: DegreeSequence, a: int, b: int) -> float:
    """(d_a/d_b)(1 + (d_a - d_b)(M1 + M2)/M1²)."""

    if d[b] < 1:
        raise PreconditionError("needs d_b >= 1", context={"b": b})
    m1 = d.total
    if m1 == 0:
        raise PreconditionError("needs a positive degree sum")
    da, db = d[a], d[b]
    return da / db * (1 + (da - db) * (m1 + _m2(d)) / m1**2)


def sparse_ratio_refined(d: DegreeSequence, a: int, b: int) -> float:
    """(d_a/d_b)(1 - (d_b-1)/M1 - (d_b-1)M2/M1²)/(1 - (d_a-1)/M1 - (d_a-1)M2/M1²)."""

    if d[b] < 1:
        raise PreconditionError("needs d_b >= 1", context={"b": b})
    m1, m2 = d.total, _m2(d)
    if m1 == 0:
        raise PreconditionError("needs a positive degree sum")
    da, db = d[a], d[b]
    top = 1 - (db - 1) / m1 - (db - 1) * m2 / m1**2
    bottom = 1 - (da - 1) / m1 - (da - 1) * m2 / m1**2
    if bottom <= 0 or top <= 0:
        raise PreconditionError("sequence too dense for the sparse ratio", context={"M1": m1, "M2": m2})
    return da / db * top / bottom


@dataclass(frozen=True)
class PiRho:
    pi: float
    rho: float


def pi_value(
    variant: Variant | str, eps_a: float, eps_v: float, mu: float, sigma2: float, d: float, n: int
) -> float:
    variant = Variant(variant)
    if not mu < 1:
        raise PreconditionError("needs mu < 1", context={"mu": mu})
    if 1 + eps_a <= 0 or 1 + eps_v <= 0:
        raise PreconditionError("needs 1 + eps > 0", context={"eps_a": eps_a, "eps_v": eps_v})
    base = mu * (1 + eps_a) * (1 + eps_v)
    if variant is Variant.SIMPLE:
        return base * (1 - eps_a * eps_v * mu / (1 - mu))
    correction = (-mu * eps_a * eps_v + (eps_a + eps_v) * sigma2 / (d * n)) / (1 - mu)
    return base * (1 + correction + (eps_a + eps_v) / (n - 1))


def rho_value(
    variant: Variant | str, eps_a: float, eps_b: float, mu: float, sigma2: float, d: float, n: int
) -> float:
    variant = Variant(variant)
    if not mu < 1:
        raise PreconditionError("needs mu < 1", context={"mu": mu})
    if 1 + eps_a <= 0 or 1 + eps_b <= 0:
        raise PreconditionError("needs 1 + eps > 0", context={"eps_a": eps_a, "eps_b": eps_b})
    lead = (1 + eps_a) / (1 + eps_b)
    if variant is Variant.SIMPLE:
        top, bottom = 1 - mu * (1 + eps_b), 1 - mu * (1 + eps_a)
        tail = 1 + (eps_a - eps_b) * sigma2 / (d * n)
    else:
        top, bottom = 1 - mu * (1 + eps_b) + 1 / n, 1 - mu * (1 + eps_a) + 1 / n
        tail = 1 + (eps_a - eps_b) * sigma2 / ((1 - mu) ** 2 * d * n)
    if top <= 0 or bottom <= 0:
        raise PreconditionError("nonpositive factor in the ratio", context={"top": top, "bottom": bottom})
    return lead * top / bottom * tail


def pi_rho(
    variant: Variant | str, eps_a: float, eps_v_or_b: float, mu: float, sigma2: float, d: float, n: int
) -> PiRho:
    return PiRho(
        pi=pi_value(variant, eps_a, eps_v_or_b, mu, sigma2, d, n),
        rho=rho_value(variant, eps_a, eps_v_or_b, mu, sigma2, d, n),
    )


__all__ = [
    "PiRho",
    "Variant",
    "edge_prob_formula",
    "pgr",
    "pi_rho",
    "pi_value",
    "rgr",
    "rho_value",
    "sparse_edge_prob",
    "sparse_path_prob",
    "sparse_ratio",
    "sparse_ratio_refined",
]
