"""The two-path expansion and the recursion operators P, R and C = P(p, R(p))."""

from __future__ import annotations

from ..core.constraints import PairConstraint
from ..core.sequence import DegreeSequence
from ..errors import DomainError, PreconditionError, SequenceError, SingularityError
from .functions import Domain, EdgeFunction, OperatorConfig, RatioFunction, Value


def _lower(d: DegreeSequence, *vertices: int) -> DegreeSequence:
    try:
        return d.minus(*vertices)
    except SequenceError as exc:
        raise DomainError(
            "perturbed sequence leaves the non-negative orthant",
            context={"degrees": list(d.degrees), "lowered": list(vertices)},
        ) from exc


def _chain(d: DegreeSequence, a: int, v: int, k: int) -> DegreeSequence:
    """d - k(e_a + e_v)."""

    return _lower(d, *([a, v] * k))


def _singular(what: str, d: DegreeSequence, **context: object) -> SingularityError:
    return SingularityError(f"zero denominator in {what}", context={"degrees": list(d.degrees), **context})


def _constraint_for(constraint: PairConstraint | None, d: DegreeSequence) -> PairConstraint:
    return constraint if constraint is not None else PairConstraint.complete(d.n)


def sigma_k0(
    p: EdgeFunction, d: DegreeSequence, a: int, v: int, b: int, cfg: OperatorConfig
) -> Value:
    """Alternating sum over k = 1..k0 of p_bv(d - k(e_a+e_v)) times the running product.

    The sum stops early once a numerator p_av(d - j(e_a+e_v)) vanishes, since
    every later term carries that factor.
    """

    one = cfg.scalar(1)
    total = cfg.scalar(0)
    running = one
    for k in range(1, cfg.k0 + 1):
        if k > 1:
            numerator = p(a, v, _chain(d, a, v, k - 1))
            if numerator == 0:
                break
            denominator = one - p(a, v, _chain(d, a, v, k))
            if denominator == 0:
                raise _singular("the two-path product", _chain(d, a, v, k), a=a, v=v, k=k)
            running = running * numerator / denominator
        term = running * p(b, v, _chain(d, a, v, k))
        total = total + term if k % 2 else total - term
    return total


def two_path(
    p: EdgeFunction, d: DegreeSequence, a: int, v: int, b: int, cfg: OperatorConfig
) -> Value:
    """Estimate of the probability that both av and bv are edges."""

    first = p(a, v, d)
    if first == 0:
        return cfg.scalar(0)
    denominator = cfg.scalar(1) - p(a, v, _chain(d, a, v, 1))
    if denominator == 0:
        raise _singular("the two-path prefactor", _chain(d, a, v, 1), a=a, v=v)
    return first / denominator * sigma_k0(p, d, a, v, b, cfg)


def bad(
    p: EdgeFunction,
    i: int,
    j: int,
    d: DegreeSequence,
    constraint: PairConstraint | None,
    cfg: OperatorConfig,
) -> Value:
    """Expected share of switchings at ``i`` that are blocked when moving a degree to ``j``."""

    if d[i] == 0:
        raise _singular("bad (d_i = 0)", d, i=i)
    constraint = _constraint_for(constraint, d)
    at_i, at_j = constraint.allowable(i), constraint.allowable(j)
    total = cfg.scalar(0)
    for v in sorted(at_i - at_j):
        total = total + p(i, v, d)
    for v in sorted(at_i & at_j):
        total = total + two_path(p, d, i, v, j, cfg)
    return total / cfg.scalar(d[i])


def _narrower(first: Domain, second: Domain) -> Domain:
    if first.radius is None:
        return second
    if second.radius is None:
        return first
    return first if first.radius <= second.radius else second


def apply_R(
    p: EdgeFunction, cfg: OperatorConfig, constraint: PairConstraint | None = None
) -> RatioFunction:
    """Ratio function (d_a/d_b)(1 - bad(a,b,d-e_b))/(1 - bad(b,a,d-e_a))."""

    one = cfg.scalar(1)

    def evaluate(a: int, b: int, d: DegreeSequence) -> Value:
        if d[a] < 1 or d[b] < 1:
            raise PreconditionError("ratio needs d_a, d_b >= 1", context={"a": a, "b": b})
        local = _constraint_for(constraint, d)
        top = one - bad(p, a, b, _lower(d, b), local, cfg)
        bottom = one - bad(p, b, a, _lower(d, a), local, cfg)
        if bottom == 0:
            raise _singular("the ratio operator", d, a=a, b=b)
        return cfg.scalar(d[a]) / cfg.scalar(d[b]) * top / bottom

    return RatioFunction(
        evaluate,
        p.domain.shrink(2 * cfg.k0 + 1),
        name=f"R({p.name})",
        exchangeable=p.exchangeable and (constraint is None or constraint.is_complete),
    )


def apply_P(
    p: EdgeFunction,
    r: RatioFunction,
    cfg: OperatorConfig,
    constraint: PairConstraint | None = None,
) -> EdgeFunction:
    """Edge function d_v (1 - p_av(d-e_a-e_v)) / sum_b r_ba(d-e_v)(1 - p_bv(d-e_b-e_v)).

    Partners b of degree zero are skipped, as are terms whose ratio vanishes.
    """

    zero, one = cfg.scalar(0), cfg.scalar(1)

    def evaluate(a: int, v: int, d: DegreeSequence) -> Value:
        local = _constraint_for(constraint, d)
        if not local.allows(a, v):
            return zero
        if d[v] < 1:
            raise PreconditionError("edge operator needs d_v >= 1", context={"v": v})
        if d[a] < 1:
            return zero
        base = one - p(a, v, _lower(d, a, v))
        if base == 0:
            raise _singular("the edge operator prefactor", d, a=a, v=v)
        shadow = _lower(d, v)
        total = zero
        for b in sorted(local.allowable(v)):
            if d[b] < 1:
                continue
            weight = r(b, a, shadow)
            if weight == 0:
                continue
            total = total + weight * (one - p(b, v, _lower(d, b, v)))
        if total == 0:
            raise _singular("the edge operator sum", d, a=a, v=v)
        return cfg.scalar(d[v]) * base / total

    return EdgeFunction(
        evaluate,
        _narrower(p.domain.shrink(2), r.domain.shrink(1)),
        name=f"P({p.name},{r.name})",
        exchangeable=p.exchangeable and r.exchangeable and (constraint is None or constraint.is_complete),
    )


def apply_C(
    p: EdgeFunction, cfg: OperatorConfig, constraint: PairConstraint | None = None
) -> EdgeFunction:
    combined = apply_P(p, apply_R(p, cfg, constraint), cfg, constraint)
    combined.name = f"C({p.name})"
    return combined


__all__ = ["apply_C", "apply_P", "apply_R", "bad", "sigma_k0", "two_path"]
