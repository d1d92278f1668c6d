"""Exact realisation counts, probabilities and ratios for small ``n``."""

from .brute import BRUTE_FORCE_MAX_VERTICES, brute_force_count, degree_census
from .counter import DEFAULT_MAX_VERTICES, GraphCounter
from .queries import ExactCount, ExactOracle, ExactProb, lowered, switching_bound

__all__ = [
    "BRUTE_FORCE_MAX_VERTICES",
    "DEFAULT_MAX_VERTICES",
    "ExactCount",
    "ExactOracle",
    "ExactProb",
    "GraphCounter",
    "brute_force_count",
    "degree_census",
    "lowered",
    "switching_bound",
]
