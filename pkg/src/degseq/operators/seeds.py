"""Starting functions for the operators: constants, exact values and closed forms."""

from __future__ import annotations

from ..asymptotics.edges import Variant, pgr, pi_value, rgr, rho_value
from ..core.constraints import PairConstraint
from ..core.sequence import DegreeSequence
from ..exact.queries import ExactOracle
from .functions import Domain, EdgeFunction, RatioFunction, Value


def constant_edge_function(value: Value, domain: Domain | None = None) -> EdgeFunction:
    return EdgeFunction(lambda a, v, d: value, domain, name=f"const({value})", exchangeable=True)


def exact_edge_function(
    oracle: ExactOracle, constraint: PairConstraint | None = None, domain: Domain | None = None
) -> EdgeFunction:
    return EdgeFunction(
        lambda a, v, d: oracle.edge_prob(d, a, v, constraint),
        domain,
        name="P",
        exchangeable=constraint is None or constraint.is_complete,
    )


def exact_ratio_function(
    oracle: ExactOracle, constraint: PairConstraint | None = None, domain: Domain | None = None
) -> RatioFunction:
    return RatioFunction(
        lambda a, b, d: oracle.ratio(d, a, b, constraint),
        domain,
        name="R",
        exchangeable=constraint is None or constraint.is_complete,
    )


def pgr_edge_function(domain: Domain | None = None, *, exact: bool = False) -> EdgeFunction:
    return EdgeFunction(lambda a, v, d: pgr(d, a, v, exact=exact), domain, name="Pgr", exchangeable=True)


def rgr_ratio_function(domain: Domain | None = None, *, exact: bool = False) -> RatioFunction:
    return RatioFunction(lambda a, b, d: rgr(d, a, b, exact=exact), domain, name="Rgr", exchangeable=True)


def _spread(d: DegreeSequence) -> tuple[float, float, float]:
    n = d.n
    mean = d.total / n
    sigma2 = sum((x - mean) ** 2 for x in d.degrees) / n
    return mean, mean / (n - 1), sigma2


def pi_edge_function(variant: Variant | str = Variant.CORRECTED, domain: Domain | None = None) -> EdgeFunction:
    variant = Variant(variant)

    def evaluate(a: int, v: int, d: DegreeSequence) -> float:
        if a == v or d[a] == 0 or d[v] == 0:
            return 0.0
        mean, mu, sigma2 = _spread(d)
        return pi_value(variant, d[a] / mean - 1, d[v] / mean - 1, mu, sigma2, mean, d.n)

    return EdgeFunction(evaluate, domain, name=f"pi[{variant.value}]", exchangeable=True)


def rho_ratio_function(variant: Variant | str = Variant.CORRECTED, domain: Domain | None = None) -> RatioFunction:
    variant = Variant(variant)

    def evaluate(a: int, b: int, d: DegreeSequence) -> float:
        if d[a] == 0:
            return 0.0
        mean, mu, sigma2 = _spread(d)
        return rho_value(variant, d[a] / mean - 1, d[b] / mean - 1, mu, sigma2, mean, d.n)

    return RatioFunction(evaluate, domain, name=f"rho[{variant.value}]", exchangeable=True)


__all__ = [
    "constant_edge_function",
    "exact_edge_function",
    "exact_ratio_function",
    "pgr_edge_function",
    "pi_edge_function",
    "rgr_ratio_function",
    "rho_ratio_function",
]
