"""Asymptotic formula evaluators."""

from .edges import (
    PiRho,
    Variant,
    edge_prob_formula,
    pgr,
    pi_rho,
    pi_value,
    rgr,
    rho_value,
    sparse_edge_prob,
    sparse_path_prob,
    sparse_ratio,
    sparse_ratio_refined,
)
from .envelope import ErrorEnvelope, error_envelope
from .formulas import (
    FormulaResult,
    binom_model_prob,
    conj_ratio,
    conjectured_count,
    correction_exponent,
    h_formula,
    log_binom,
    normalising_constant,
    regular_count_formula,
)

__all__ = [
    "ErrorEnvelope",
    "FormulaResult",
    "PiRho",
    "Variant",
    "binom_model_prob",
    "conj_ratio",
    "conjectured_count",
    "correction_exponent",
    "edge_prob_formula",
    "error_envelope",
    "h_formula",
    "log_binom",
    "normalising_constant",
    "pgr",
    "pi_rho",
    "pi_value",
    "regular_count_formula",
    "rgr",
    "rho_value",
    "sparse_edge_prob",
    "sparse_path_prob",
    "sparse_ratio",
    "sparse_ratio_refined",
]
