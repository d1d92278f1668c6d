"""Named end-to-end checks, each reproducing one acceptance criterion at a chosen scale.

Every check takes a parameter mapping (defaults below) so tests and recipes can
run the same logic at reduced sizes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, permutations, product
from typing import Any, Callable, Iterator, Mapping

import numpy as np

from .asymptotics.edges import pgr, rgr
from .asymptotics.envelope import error_envelope
from .asymptotics.formulas import conjectured_count
from .config.loader import BUILTIN_DEFAULTS
from .core.graphical import KOREN_EXHAUSTIVE_LIMIT, erdos_gallai, koren
from .core.sequence import DegreeSequence, ParityClass
from .errors import (
    ConfigurationError,
    DomainError,
    DomainExhaustedError,
    PreconditionError,
    SingularityError,
    UndefinedProbabilityError,
)
from .exact.brute import degree_census
from .exact.queries import ExactOracle, switching_bound
from .logging_config import get_logger
from .models.compare import compare
from .models.experiments import exact_vs_formula, marginal_check, sigma_concentration
from .models.samplers import DEFAULT_CHUNK_SIZE, ModelKind, ModelSpec, sample_matrix
from .operators.fixed_point import MEASURE_MARGIN, required_radius
from .operators.functions import ArithmeticMode, DomainLadder, OperatorConfig
from .operators.metric import measure_chi, representative_pairs
from .operators.recursion import apply_C, apply_P, apply_R, two_path
from .operators.seeds import (
    exact_edge_function,
    exact_ratio_function,
    pgr_edge_function,
    rgr_ratio_function,
)

LOGGER = get_logger(__name__)

_HYPOTHESIS_ERRORS = (UndefinedProbabilityError, SingularityError, PreconditionError, DomainError)
_MAX_REPORTED = 10


@dataclass
class CheckContext:
    oracle: ExactOracle = field(default_factory=ExactOracle)
    tolerances: Mapping[str, float] = field(default_factory=lambda: dict(BUILTIN_DEFAULTS["tolerances"]))
    seed: int = 7
    threads: int | None = None
    chunk_size: int = DEFAULT_CHUNK_SIZE
    bootstrap_rounds: int = 200
    koren_exhaustive_limit: int = KOREN_EXHAUSTIVE_LIMIT

    def tolerance(self, key: str) -> float:
        if key in self.tolerances:
            return float(self.tolerances[key])
        return float(BUILTIN_DEFAULTS["tolerances"][key])


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: dict[str, Any] = field(default_factory=dict)
    soft_failed: bool = False

    def as_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "soft_failed": self.soft_failed,
            "details": self.details,
        }


Runner = Callable[[CheckContext, Mapping[str, Any]], CheckResult]


@dataclass(frozen=True)
class CheckSpec:
    name: str
    runner: Runner
    defaults: Mapping[str, Any]
    description: str


_CHECKS: dict[str, CheckSpec] = {}


def _register(name: str, description: str, **defaults: Any) -> Callable[[Runner], Runner]:
    def decorator(runner: Runner) -> Runner:
        _CHECKS[name] = CheckSpec(name=name, runner=runner, defaults=defaults, description=description)
        return runner

    return decorator


def available_checks() -> list[str]:
    return sorted(_CHECKS)


def describe_checks() -> dict[str, dict[str, Any]]:
    return {
        name: {"description": spec.description, "defaults": dict(spec.defaults)}
        for name, spec in sorted(_CHECKS.items())
    }


def run_check(
    name: str, context: CheckContext | None = None, params: Mapping[str, Any] | None = None
) -> CheckResult:
    spec = _CHECKS.get(name)
    if spec is None:
        raise ConfigurationError(
            f"unknown check {name!r}", context={"available": available_checks()}
        )
    unknown = set(params or {}) - set(spec.defaults)
    if unknown:
        raise ConfigurationError(
            f"unknown parameters for check {name}", context={"unknown": sorted(unknown)}
        )
    merged = {**spec.defaults, **(params or {})}
    LOGGER.info("Running check", extra={"check": name, "params": merged})
    result = spec.runner(context or CheckContext(), merged)
    result.details.setdefault("params", merged)
    return result


def _sorted_classes(n: int, max_degree: int) -> Iterator[DegreeSequence]:
    for combo in combinations_with_replacement(range(max_degree, -1, -1), n):
        yield DegreeSequence(combo)


def _exact_cfg(k0: int) -> OperatorConfig:
    return OperatorConfig(k0=k0, mode=ArithmeticMode.EXACT)


def _near_regular(n: int, high: int, low: int) -> DegreeSequence:
    return DegreeSequence((high,) * (n // 2) + (low,) * (n - n // 2))


def _note(bucket: list[dict[str, Any]], **entry: Any) -> None:
    if len(bucket) < _MAX_REPORTED:
        bucket.append(entry)


@_register(
    "oracle_brute_force",
    "memoised counts equal brute-force enumeration of all edge subsets",
    max_n=6,
    max_degree=3,
)
def _oracle_brute_force(ctx: CheckContext, params: Mapping[str, Any]) -> CheckResult:
    mismatches: list[dict[str, Any]] = []
    compared = bad = 0
    for n in range(1, params["max_n"] + 1):
        census = degree_census(n)
        top = min(params["max_degree"], n - 1)
        for degrees in product(range(top + 1), repeat=n):
            compared += 1
            expected = census.get(degrees, 0)
            got = ctx.oracle.count(DegreeSequence(degrees))
            if got != expected:
                bad += 1
                _note(mismatches, degrees=list(degrees), expected=str(expected), got=str(got))
    return CheckResult(
        "oracle_brute_force",
        passed=bad == 0,
        details={"compared": compared, "mismatches": bad, "examples": mismatches},
    )


@_register(
    "recursion_identities",
    "the operators applied to exact P and R reproduce exact P and R",
    max_n=7,
    max_degree=3,
)
def _recursion_identities(ctx: CheckContext, params: Mapping[str, Any]) -> CheckResult:
    cfg = _exact_cfg(params["max_degree"] + 1)
    p_exact = exact_edge_function(ctx.oracle)
    r_exact = exact_ratio_function(ctx.oracle)
    p_image = apply_P(p_exact, r_exact, cfg)
    r_image = apply_R(p_exact, cfg)
    checked = skipped = bad = 0
    mismatches: list[dict[str, Any]] = []
    for n in range(3, params["max_n"] + 1):
        for d in _sorted_classes(n, min(params["max_degree"], n - 1)):
            for a, b in representative_pairs(d):
                try:
                    if d.total % 2 == 0:
                        expected = ctx.oracle.edge_prob(d, a, b)
                        if expected == 0:
                            skipped += 1
                            continue
                        got = p_image(a, b, d)
                        kind = "P"
                    else:
                        if d[a] < 1 or d[b] < 1:
                            skipped += 1
                            continue
                        expected = ctx.oracle.ratio(d, a, b)
                        if expected == 0:
                            skipped += 1
                            continue
                        got = r_image(a, b, d)
                        kind = "R"
                except _HYPOTHESIS_ERRORS:
                    skipped += 1
                    continue
                checked += 1
                if got != expected:
                    bad += 1
                    _note(mismatches, kind=kind, degrees=list(d.degrees), pair=[a, b],
                          expected=str(expected), got=str(got))
    return CheckResult(
        "recursion_identities",
        passed=bad == 0 and checked > 0,
        details={"checked": checked, "skipped": skipped, "mismatches": bad, "examples": mismatches},
    )


@_register(
    "two_path_bounds",
    "truncated two-path sums bracket the exact probability by parity of k0",
    max_n=7,
    max_degree=3,
    k0_values=[1, 2, 3],
)
def _two_path_bounds(ctx: CheckContext, params: Mapping[str, Any]) -> CheckResult:
    p_exact = exact_edge_function(ctx.oracle)
    configs = {k0: _exact_cfg(k0) for k0 in params["k0_values"]}
    checked = bad = 0
    violations: list[dict[str, Any]] = []
    for n in range(3, params["max_n"] + 1):
        for d in _sorted_classes(n, min(params["max_degree"], n - 1)):
            if d.total % 2 or ctx.oracle.count(d) == 0:
                continue
            for a, v, b in permutations(range(n), 3):
                exact = ctx.oracle.path_prob(d, a, v, b)
                for k0, cfg in configs.items():
                    try:
                        estimate = two_path(p_exact, d, a, v, b, cfg)
                    except _HYPOTHESIS_ERRORS:
                        continue
                    checked += 1
                    if k0 >= min(d[a], d[v]):
                        ok = estimate == exact
                    elif k0 % 2:
                        ok = exact <= estimate
                    else:
                        ok = exact >= estimate
                    if not ok:
                        bad += 1
                        _note(violations, degrees=list(d.degrees), triple=[a, v, b], k0=k0,
                              exact=str(exact), estimate=str(estimate))
    return CheckResult(
        "two_path_bounds",
        passed=bad == 0 and checked > 0,
        details={"checked": checked, "violations": bad, "examples": violations},
    )


@_register(
    "removal_switching",
    "edge-removal identity holds and edge probabilities respect the switching bound",
    max_n=7,
    max_degree=4,
)
def _removal_switching(ctx: CheckContext, params: Mapping[str, Any]) -> CheckResult:
    identity_checked = bound_checked = bad_identity = bad_bound = 0
    examples: list[dict[str, Any]] = []
    for n in range(2, params["max_n"] + 1):
        for d in _sorted_classes(n, min(params["max_degree"], n - 1)):
            if d.total % 2 or ctx.oracle.count(d) == 0:
                continue
            bound = switching_bound(d)
            for a in range(n):
                for v in range(a + 1, n):
                    identity_checked += 1
                    if not ctx.oracle.removal_identity_check(d, a, v):
                        bad_identity += 1
                        _note(examples, kind="removal", degrees=list(d.degrees), pair=[a, v])
                    if math.isinf(bound):
                        continue
                    bound_checked += 1
                    prob = ctx.oracle.edge_prob(d, a, v)
                    if prob > bound:
                        bad_bound += 1
                        _note(examples, kind="switching", degrees=list(d.degrees), pair=[a, v],
                              prob=str(prob), bound=str(bound))
    return CheckResult(
        "removal_switching",
        passed=bad_identity == 0 and bad_bound == 0,
        details={
            "identity_checked": identity_checked,
            "identity_failures": bad_identity,
            "bound_checked": bound_checked,
            "bound_failures": bad_bound,
            "examples": examples,
        },
    )


@_register(
    "graphicality",
    "Erdős–Gallai, Koren and the exact counter agree on realisability",
    max_n=7,
    max_degree=4,
)
def _graphicality(ctx: CheckContext, params: Mapping[str, Any]) -> CheckResult:
    compared = bad = 0
    disagreements: list[dict[str, Any]] = []
    for n in range(1, params["max_n"] + 1):
        for d in _sorted_classes(n, params["max_degree"]):
            compared += 1
            realisable = d.max_degree <= n - 1 and ctx.oracle.count(d) > 0
            eg, ko = erdos_gallai(d), koren(d, exhaustive_limit=ctx.koren_exhaustive_limit)
            if not eg == ko == realisable:
                bad += 1
                _note(disagreements, degrees=list(d.degrees), erdos_gallai=eg, koren=ko, oracle=realisable)
    return CheckResult(
        "graphicality",
        passed=bad == 0,
        details={
            "compared": compared,
            "disagreements": bad,
            "koren_exhaustive_limit": ctx.koren_exhaustive_limit,
            "examples": disagreements,
        },
    )


@_register(
    "regular_trend",
    "relative error of the conjectured count for regular graphs shrinks with n",
    sizes=[6, 8, 10, 12, 14],
    degree=3,
)
def _regular_trend(ctx: CheckContext, params: Mapping[str, Any]) -> CheckResult:
    rows = []
    for n in params["sizes"]:
        d = DegreeSequence((params["degree"],) * n)
        count = ctx.oracle.count(d)
        formula = conjectured_count(d)
        error = abs(count / formula.value - 1) if formula.value else math.inf
        rows.append({"n": n, "count": str(count), "formula": formula.value, "relative_error": error})
    errors = [row["relative_error"] for row in rows]
    monotone = all(later < earlier for earlier, later in zip(errors, errors[1:]))
    final_ok = bool(errors) and errors[-1] < ctx.tolerance("regular_trend_final")
    return CheckResult(
        "regular_trend",
        passed=monotone and final_ok,
        soft_failed=monotone and not final_ok,
        details={"rows": rows, "monotone": monotone, "final_within_tolerance": final_ok},
    )


def _edge_formula_error(oracle: ExactOracle, d: DegreeSequence) -> tuple[float, list[dict[str, Any]]]:
    worst = 0.0
    rows = []
    for a, v in representative_pairs(d):
        exact = oracle.edge_prob(d, a, v)
        formula = pgr(d, a, v)
        error = abs(formula / float(exact) - 1) if exact else math.inf
        worst = max(worst, error)
        rows.append({"pair": [a, v], "degrees": [d[a], d[v]], "exact": float(exact), "formula": formula,
                     "relative_error": error})
    return worst, rows


@_register(
    "edge_formula",
    "closed-form edge probability against exact values on near-regular sequences",
    n=12,
    high=4,
    low=3,
    report_sizes=[8],
)
def _edge_formula(ctx: CheckContext, params: Mapping[str, Any]) -> CheckResult:
    d = _near_regular(params["n"], params["high"], params["low"])
    worst, rows = _edge_formula_error(ctx.oracle, d)
    reports = {}
    for n in params["report_sizes"]:
        small = _near_regular(n, params["high"], params["low"])
        reports[str(n)] = _edge_formula_error(ctx.oracle, small)[0]
    return CheckResult(
        "edge_formula",
        passed=worst < ctx.tolerance("edge_formula"),
        details={"degrees": list(d.degrees), "max_relative_error": worst, "pairs": rows,
                 "report_only": reports},
    )


@_register(
    "formula_table",
    "exact degree-sequence law of G(n, m) against the corrected binomial formula",
    n=8,
    m=12,
    spread=1,
)
def _formula_table(ctx: CheckContext, params: Mapping[str, Any]) -> CheckResult:
    table = exact_vs_formula(params["n"], params["m"], ctx.oracle)
    low, high = ctx.tolerance("formula_table_low"), ctx.tolerance("formula_table_high")
    near = table.near_regular(params["spread"])
    outside = [
        {"degrees": list(row.degrees), "ratio": row.ratio}
        for row in near
        if row.ratio is None or not low <= row.ratio <= high
    ]
    normalised = table.total == Fraction(1)
    return CheckResult(
        "formula_table",
        passed=normalised and not outside,
        soft_failed=normalised and bool(outside),
        details={
            "total": str(table.total),
            "classes": len(table.rows),
            "near_regular_classes": len(near),
            "outside_band": outside,
            "table": table.as_dict()["rows"],
        },
    )


def _contraction_ratio(root: DegreeSequence, cfg: OperatorConfig, scale: float, points: int) -> dict[str, Any]:
    """χ between P^gr and a scaled copy, then between their images under C.

    The images are compared on level 2k0+2 of the ladder when that level holds
    points. Roots with entries below 2k0+2 leave it empty; their images are
    compared on the even points of positive entries within L1 distance 2 of the
    root instead.
    """

    p = pgr_edge_function()
    p_prime = p.scaled(scale)
    ladder = DomainLadder(root, required_radius(1, cfg))
    on_level = next(iter(ladder.points(cfg.shrink, parity=ParityClass.EVEN, limit=1)), None) is not None
    if on_level:
        after_ladder, after_level = ladder, cfg.shrink
    else:
        after_ladder, after_level = DomainLadder(root, MEASURE_MARGIN + 1), 1
    if next(iter(after_ladder.points(after_level, parity=ParityClass.EVEN, limit=1)), None) is None:
        raise DomainExhaustedError(
            "contraction needs points to measure",
            context={"degrees_min": min(root.degrees), "level": after_level, "radius": after_ladder.radius},
        )
    before = measure_chi(p, p_prime, ladder, 0, parity=ParityClass.EVEN, limit=points)
    after = measure_chi(
        apply_C(p, cfg), apply_C(p_prime, cfg), after_ladder, after_level, parity=ParityClass.EVEN, limit=points
    )
    return {
        "degrees_mean": root.total / root.n,
        "mu": root.total / (root.n * (root.n - 1)),
        "after_domain": "level" if on_level else "root_neighbourhood",
        "after_level": after_level,
        "after_radius": after_ladder.radius - after_level,
        "chi_before": before.value,
        "chi_after": after.value,
        "points_before": before.points,
        "points_after": after.points,
        "ratio": after.value / before.value if before.value else None,
    }


@_register(
    "contraction",
    "one application of C shrinks the log-distance between P^gr and a scaled copy",
    n=60,
    high=6,
    low=4,
    k0=6,
    scale=1.01,
    points=4,
)
def _contraction(ctx: CheckContext, params: Mapping[str, Any]) -> CheckResult:
    cfg = OperatorConfig(k0=params["k0"])
    root = _near_regular(params["n"], params["high"], params["low"])
    halved = _near_regular(params["n"], params["high"] // 2, params["low"] // 2)
    full = _contraction_ratio(root, cfg, params["scale"], params["points"])
    half = _contraction_ratio(halved, cfg, params["scale"], params["points"])
    passed = (
        min(full["points_after"], half["points_after"]) > 1
        and full["ratio"] is not None
        and half["ratio"] is not None
        and full["ratio"] < ctx.tolerance("contraction")
        and half["ratio"] < full["ratio"]
    )
    return CheckResult("contraction", passed=passed, details={"root": full, "halved": half})


@_register(
    "envelope_bounds",
    "R(P^gr) tracks R^gr and P(P^gr, R^gr) tracks P^gr within the error envelope",
    n=200,
    mean=20,
    k0=4,
)
def _envelope_bounds(ctx: CheckContext, params: Mapping[str, Any]) -> CheckResult:
    mean = params["mean"]
    spread = mean ** -0.5
    root = _near_regular(params["n"], round(mean * (1 + spread)), round(mean * (1 - spread)))
    cfg = OperatorConfig(k0=params["k0"])
    envelope = error_envelope(root, params["k0"], eps=spread)
    multiple = ctx.tolerance("envelope_multiple")
    p = pgr_edge_function()
    r_image = apply_R(p, cfg)
    p_image = apply_P(p, rgr_ratio_function(), cfg)

    odd = root.minus(0)
    ratio_rows = []
    for a, b in representative_pairs(odd):
        got, target = float(r_image(a, b, odd)), rgr(odd, a, b)
        ratio_rows.append({"pair": [a, b], "operator": got, "formula": target,
                           "log_gap": abs(math.log(got / target))})
    edge_rows = []
    for a, v in representative_pairs(root):
        got, target = float(p_image(a, v, root)), pgr(root, a, v)
        edge_rows.append({"pair": [a, v], "operator": got, "formula": target,
                          "log_gap": abs(math.log(got / target))})
    worst_r = max(row["log_gap"] for row in ratio_rows)
    worst_p = max(row["log_gap"] for row in edge_rows)
    return CheckResult(
        "envelope_bounds",
        passed=worst_r <= multiple * envelope.eta1 and worst_p <= multiple * envelope.eta2,
        details={
            "envelope": envelope.as_dict(),
            "ratio_worst": worst_r,
            "edge_worst": worst_p,
            "ratios": ratio_rows,
            "edges": edge_rows,
        },
    )


@_register(
    "model_tv",
    "median-degree distance between G(n, m) and the conditioned binomial model",
    sizes=[10, 20, 30],
    edges_per_vertex=2,
    samples=100_000,
    statistic="median",
)
def _model_tv(ctx: CheckContext, params: Mapping[str, Any]) -> CheckResult:
    rows = []
    for n in params["sizes"]:
        m = params["edges_per_vertex"] * n
        report = compare(
            ModelSpec(ModelKind.GNM, n, m=m, seed=ctx.seed),
            ModelSpec(ModelKind.BM, n, m=m, seed=ctx.seed + 1),
            params["statistic"],
            params["samples"],
            threads=ctx.threads,
            chunk_size=ctx.chunk_size,
            bootstrap_rounds=ctx.bootstrap_rounds,
        )
        rows.append({"n": n, "m": m, "tv": report.tv, "half_width": report.tv_half_width})
    decreasing = all(
        later["tv"] <= earlier["tv"] + later["half_width"] for earlier, later in zip(rows, rows[1:])
    )
    final_ok = bool(rows) and rows[-1]["tv"] - rows[-1]["half_width"] < ctx.tolerance("model_tv")
    return CheckResult("model_tv", passed=decreasing and final_ok, details={"rows": rows, "decreasing": decreasing})


@_register(
    "sigma_concentration",
    "sample variance of the degrees concentrates around Var d1 in both fixed-m models",
    n=50,
    m=250,
    alpha=0.5,
    samples=100_000,
)
def _sigma_concentration(ctx: CheckContext, params: Mapping[str, Any]) -> CheckResult:
    reports = {}
    for offset, kind in enumerate((ModelKind.GNM, ModelKind.BM)):
        spec = ModelSpec(kind, params["n"], m=params["m"], seed=ctx.seed + offset)
        reports[kind.value] = sigma_concentration(
            spec, params["samples"], params["alpha"], threads=ctx.threads, chunk_size=ctx.chunk_size
        ).as_dict()
    limit = ctx.tolerance("concentration")
    passed = all(report["frequency"] < limit for report in reports.values())
    return CheckResult("sigma_concentration", passed=passed, details={"limit": limit, "models": reports})


@_register(
    "bm_marginal",
    "first degree under the conditioned binomial model follows its hypergeometric law",
    n=10,
    m=9,
    samples=100_000,
    min_pvalue=0.01,
)
def _bm_marginal(ctx: CheckContext, params: Mapping[str, Any]) -> CheckResult:
    spec = ModelSpec(ModelKind.BM, params["n"], m=params["m"], seed=ctx.seed)
    result = marginal_check(spec, params["samples"], threads=ctx.threads, chunk_size=ctx.chunk_size)
    return CheckResult("bm_marginal", passed=result.ks_pvalue > params["min_pvalue"], details=result.as_dict())


@_register(
    "determinism",
    "sampled sequences and model distances do not depend on the thread count",
    n=20,
    m=40,
    samples=20_000,
    thread_counts=[1, 4],
)
def _determinism(ctx: CheckContext, params: Mapping[str, Any]) -> CheckResult:
    digests: dict[str, list[str]] = {}
    distances: dict[str, float] = {}
    for threads in params["thread_counts"]:
        key = str(threads)
        digests[key] = []
        for offset, kind in enumerate((ModelKind.GNM, ModelKind.BM, ModelKind.EP)):
            spec = (
                ModelSpec(kind, params["n"], m=params["m"], seed=ctx.seed + offset)
                if kind.uses_m
                else ModelSpec(kind, params["n"], p=2 * params["m"] / (params["n"] * (params["n"] - 1)),
                               seed=ctx.seed + offset)
            )
            matrix = sample_matrix(spec, params["samples"], threads=threads, chunk_size=ctx.chunk_size)
            digests[key].append(f"{int(matrix.sum())}:{int(np.dot(matrix.ravel(), np.arange(matrix.size) % 9973))}")
        distances[key] = compare(
            ModelSpec(ModelKind.GNM, params["n"], m=params["m"], seed=ctx.seed),
            ModelSpec(ModelKind.BM, params["n"], m=params["m"], seed=ctx.seed + 1),
            "median",
            params["samples"],
            threads=threads,
            chunk_size=ctx.chunk_size,
            bootstrap_rounds=ctx.bootstrap_rounds,
        ).tv
    identical = len({tuple(value) for value in digests.values()}) == 1 and len(set(distances.values())) == 1
    return CheckResult("determinism", passed=identical, details={"digests": digests, "tv": distances})


__all__ = [
    "CheckContext",
    "CheckResult",
    "CheckSpec",
    "available_checks",
    "describe_checks",
    "run_check",
]
