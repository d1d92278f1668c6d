"""Random degree-sequence models, their comparison and concentration experiments."""

from .compare import DEFAULT_BOOTSTRAP_ROUNDS, ComparisonReport, Statistic, compare, statistic_values, total_variation
from .experiments import (
    ConcentrationReport,
    FormulaRow,
    FormulaTable,
    MarginalCheck,
    bm_marginal,
    d1_marginal,
    exact_vs_formula,
    marginal_check,
    permutation_count,
    sigma_concentration,
    sorted_classes,
    variance_d1,
)
from .samplers import (
    DEFAULT_CHUNK_SIZE,
    ModelKind,
    ModelSample,
    ModelSpec,
    chunk_rng,
    resolve_threads,
    sample,
    sample_matrix,
)

__all__ = [
    "ComparisonReport",
    "ConcentrationReport",
    "DEFAULT_BOOTSTRAP_ROUNDS",
    "DEFAULT_CHUNK_SIZE",
    "FormulaRow",
    "FormulaTable",
    "MarginalCheck",
    "ModelKind",
    "ModelSample",
    "ModelSpec",
    "Statistic",
    "bm_marginal",
    "chunk_rng",
    "compare",
    "d1_marginal",
    "exact_vs_formula",
    "marginal_check",
    "permutation_count",
    "resolve_threads",
    "sample",
    "sample_matrix",
    "sigma_concentration",
    "sorted_classes",
    "statistic_values",
    "total_variation",
    "variance_d1",
]
