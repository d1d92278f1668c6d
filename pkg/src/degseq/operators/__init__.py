"""Recursion operators on edge-probability functions and their fixed-point machinery."""

from .fixed_point import ContractionReport, StepRecord, iterate_fixed_point, required_radius
from .functions import (
    ArithmeticMode,
    Domain,
    DomainLadder,
    EdgeFunction,
    OperatorConfig,
    RatioFunction,
)
from .metric import ChiMeasurement, chi_distance, measure_chi, representative_pairs
from .propagation import PropagationResult, ratio_propagate, sequence_graph
from .recursion import apply_C, apply_P, apply_R, bad, sigma_k0, two_path
from .seeds import (
    constant_edge_function,
    exact_edge_function,
    exact_ratio_function,
    pgr_edge_function,
    pi_edge_function,
    rgr_ratio_function,
    rho_ratio_function,
)

__all__ = [
    "ArithmeticMode",
    "ChiMeasurement",
    "ContractionReport",
    "Domain",
    "DomainLadder",
    "EdgeFunction",
    "OperatorConfig",
    "PropagationResult",
    "RatioFunction",
    "StepRecord",
    "apply_C",
    "apply_P",
    "apply_R",
    "bad",
    "chi_distance",
    "constant_edge_function",
    "exact_edge_function",
    "exact_ratio_function",
    "iterate_fixed_point",
    "measure_chi",
    "pgr_edge_function",
    "pi_edge_function",
    "ratio_propagate",
    "representative_pairs",
    "required_radius",
    "rgr_ratio_function",
    "rho_ratio_function",
    "sequence_graph",
    "sigma_k0",
    "two_path",
]
