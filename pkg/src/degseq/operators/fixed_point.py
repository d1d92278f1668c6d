"""Repeated application of C with per-step distance and contraction tracking."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

from ..core.constraints import PairConstraint
from ..core.sequence import ParityClass
from ..errors import DomainExhaustedError, SingularityError, UndefinedProbabilityError
from ..logging_config import get_logger
from .functions import DomainLadder, EdgeFunction, OperatorConfig
from .metric import ChiMeasurement, measure_chi
from .recursion import apply_C

LOGGER = get_logger(__name__)


@dataclass
class StepRecord:
    step: int
    level: int
    chi_step: float
    points: int
    truncated: bool
    step_ratio: float | None = None
    chi_pair: float | None = None
    contraction_ratio: float | None = None

    def as_dict(self) -> dict[str, Any]:
        return {
            "step": self.step,
            "level": self.level,
            "chi_step": self.chi_step,
            "step_ratio": self.step_ratio,
            "chi_pair": self.chi_pair,
            "contraction_ratio": self.contraction_ratio,
            "points": self.points,
            "truncated": self.truncated,
        }


@dataclass
class ContractionReport:
    k0: int
    radius: int
    steps_requested: int
    initial_chi_pair: float | None = None
    records: list[StepRecord] = field(default_factory=list)
    stopped_reason: str | None = None

    @property
    def steps_completed(self) -> int:
        return len(self.records)

    def rows(self) -> list[dict[str, Any]]:
        return [record.as_dict() for record in self.records]

    def as_dict(self) -> dict[str, Any]:
        return {
            "k0": self.k0,
            "radius": self.radius,
            "steps_requested": self.steps_requested,
            "steps_completed": self.steps_completed,
            "initial_chi_pair": self.initial_chi_pair,
            "stopped_reason": self.stopped_reason,
            "steps": self.rows(),
        }


# Ball radius left at the deepest measured level: the smallest ball holding points
# of the root's parity other than the root itself.
MEASURE_MARGIN = 2


def required_radius(steps: int, cfg: OperatorConfig) -> int:
    if steps == 0:
        return 0
    return steps * cfg.shrink + MEASURE_MARGIN


def _measure(
    p1: EdgeFunction,
    p2: EdgeFunction,
    ladder: DomainLadder,
    level: int,
    *,
    constraint: PairConstraint | None,
    parity: ParityClass | None,
    limit: int | None,
) -> ChiMeasurement:
    measured = measure_chi(p1, p2, ladder, level, constraint=constraint, parity=parity, limit=limit)
    if measured.empty:
        raise DomainExhaustedError(
            f"ladder level {level} holds no points to measure",
            context={
                "level": level,
                "radius": ladder.radius,
                "root_min_degree": min(ladder.root.degrees, default=0),
                "parity": None if parity is None else parity.value,
            },
        )
    return measured


def _ratio(numerator: float | None, denominator: float | None) -> float | None:
    if numerator is None or denominator is None or denominator == 0 or math.isinf(denominator):
        return None
    return numerator / denominator


def iterate_fixed_point(
    p0: EdgeFunction,
    steps: int,
    cfg: OperatorConfig,
    ladder: DomainLadder | None = None,
    *,
    p0_prime: EdgeFunction | None = None,
    constraint: PairConstraint | None = None,
    parity: ParityClass | None = ParityClass.EVEN,
    max_points: int | None = None,
) -> tuple[EdgeFunction, ContractionReport]:
    """Apply C ``steps`` times starting from ``p0``.

    Step k is compared with step k-1 on the level its domain still covers. When
    ``p0_prime`` is given, the same iteration runs on it and the report carries
    χ(C^k p, C^k p') and its ratio to the previous step. Singular evaluations end
    the iteration early and are recorded as the stop reason. ``steps=0`` returns
    ``p0`` with an empty step list. A measured level without points is an error.
    """

    if ladder is None:
        root, radius = p0.domain.root, cfg.radius if cfg.radius is not None else p0.domain.radius
        if root is None or radius is None:
            raise DomainExhaustedError("iteration needs a bounded domain around a root sequence")
        ladder = DomainLadder(root, radius)
    needed = required_radius(steps, cfg)
    if ladder.radius < needed:
        raise DomainExhaustedError(
            f"{steps} steps with k0={cfg.k0} need a ladder of radius {needed}",
            context={"required_radius": needed, "radius": ladder.radius},
        )
    deepest = steps * cfg.shrink
    if steps and next(iter(ladder.points(deepest, parity=parity, limit=1)), None) is None:
        raise DomainExhaustedError(
            f"ladder level {deepest} holds no points to measure",
            context={"level": deepest, "radius": ladder.radius, "root_min_degree": min(ladder.root.degrees, default=0)},
        )

    report = ContractionReport(k0=cfg.k0, radius=ladder.radius, steps_requested=steps)
    current, twin = p0, p0_prime
    previous_pair: float | None = None
    if twin is not None:
        previous_pair = _measure(
            current, twin, ladder, 0, constraint=constraint, parity=parity, limit=max_points
        ).value
        report.initial_chi_pair = previous_pair
    previous_step: float | None = None

    for step in range(1, steps + 1):
        level = step * cfg.shrink
        try:
            following = apply_C(current, cfg, constraint)
            measured = _measure(
                current, following, ladder, level, constraint=constraint, parity=parity, limit=max_points
            )
            record = StepRecord(
                step=step,
                level=level,
                chi_step=measured.value,
                points=measured.points,
                truncated=measured.truncated,
                step_ratio=_ratio(measured.value, previous_step),
            )
            if twin is not None:
                twin = apply_C(twin, cfg, constraint)
                pair = _measure(
                    following, twin, ladder, level, constraint=constraint, parity=parity, limit=max_points
                ).value
                record.chi_pair = pair
                record.contraction_ratio = _ratio(pair, previous_pair)
                previous_pair = pair
        except (SingularityError, UndefinedProbabilityError) as exc:
            report.stopped_reason = f"{type(exc).__name__}: {exc}"
            LOGGER.warning("Fixed-point iteration stopped", extra={"step": step, "error": str(exc)})
            break
        LOGGER.info("Fixed-point step", extra=record.as_dict())
        report.records.append(record)
        previous_step = measured.value
        current = following
    return current, report


__all__ = ["MEASURE_MARGIN", "ContractionReport", "StepRecord", "iterate_fixed_point", "required_radius"]
