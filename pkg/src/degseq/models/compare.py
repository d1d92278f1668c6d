"""Statistic-level distances between degree-sequence models."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from scipy import stats as sps

from ..errors import ModelError
from ..logging_config import get_logger
from .samplers import DEFAULT_CHUNK_SIZE, ModelSpec, sample_matrix

LOGGER = get_logger(__name__)

DEFAULT_BOOTSTRAP_ROUNDS = 200


class Statistic(str, enum.Enum):
    SORTED = "sorted"
    D1 = "d1"
    MAX = "max"
    MEDIAN = "median"
    NK = "nk"


def statistic_values(matrix: np.ndarray, statistic: Statistic | str, k: int | None = None) -> np.ndarray:
    """Evaluate a statistic row-wise; ``sorted`` yields a 2-D array of sorted rows."""

    statistic = Statistic(statistic)
    if statistic is Statistic.SORTED:
        return -np.sort(-matrix, axis=1)
    if statistic is Statistic.D1:
        return matrix[:, 0]
    if statistic is Statistic.MAX:
        return matrix.max(axis=1)
    if statistic is Statistic.MEDIAN:
        return np.median(matrix, axis=1)
    if k is None:
        raise ModelError("the nk statistic needs k")
    return (matrix == k).sum(axis=1)


def _codes(values_a: np.ndarray, values_b: np.ndarray) -> tuple[np.ndarray, np.ndarray, list[Any]]:
    combined = np.concatenate([values_a, values_b])
    if combined.ndim == 1:
        support, inverse = np.unique(combined, return_inverse=True)
        labels = [float(x) if isinstance(x, np.floating) else int(x) for x in support]
    else:
        support, inverse = np.unique(combined, axis=0, return_inverse=True)
        labels = [",".join(str(int(x)) for x in row) for row in support]
    inverse = np.asarray(inverse).reshape(-1)
    return inverse[: len(values_a)], inverse[len(values_a):], labels


def _frequencies(codes: np.ndarray, size: int) -> np.ndarray:
    if len(codes) == 0:
        return np.zeros(size)
    return np.bincount(codes, minlength=size) / len(codes)


def total_variation(codes_a: np.ndarray, codes_b: np.ndarray, size: int) -> float:
    return float(0.5 * np.abs(_frequencies(codes_a, size) - _frequencies(codes_b, size)).sum())


@dataclass
class ComparisonReport:
    statistic: str
    model_a: dict[str, Any]
    model_b: dict[str, Any]
    samples_a: int
    samples_b: int
    tv: float
    tv_half_width: float
    ks_statistic: float | None = None
    ks_pvalue: float | None = None
    distribution_a: dict[str, float] = field(default_factory=dict)
    distribution_b: dict[str, float] = field(default_factory=dict)

    def rows(self) -> list[dict[str, Any]]:
        keys = sorted(set(self.distribution_a) | set(self.distribution_b))
        return [
            {"value": key, "freq_a": self.distribution_a.get(key, 0.0), "freq_b": self.distribution_b.get(key, 0.0)}
            for key in keys
        ]

    def as_dict(self) -> dict[str, Any]:
        return {
            "statistic": self.statistic,
            "model_a": self.model_a,
            "model_b": self.model_b,
            "samples_a": self.samples_a,
            "samples_b": self.samples_b,
            "tv": self.tv,
            "tv_half_width": self.tv_half_width,
            "ks_statistic": self.ks_statistic,
            "ks_pvalue": self.ks_pvalue,
            "distribution_a": self.distribution_a,
            "distribution_b": self.distribution_b,
        }


def compare(
    spec_a: ModelSpec,
    spec_b: ModelSpec,
    statistic: Statistic | str,
    samples: int,
    *,
    k: int | None = None,
    threads: int | None = None,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    bootstrap_rounds: int = DEFAULT_BOOTSTRAP_ROUNDS,
    bootstrap_seed: int | None = None,
) -> ComparisonReport:
    """Total variation (and KS for scalar statistics) between two models' statistics."""

    if spec_a.n != spec_b.n:
        raise ModelError("models must share n", context={"n_a": spec_a.n, "n_b": spec_b.n})
    statistic = Statistic(statistic)
    values_a = statistic_values(sample_matrix(spec_a, samples, threads=threads, chunk_size=chunk_size), statistic, k)
    values_b = statistic_values(sample_matrix(spec_b, samples, threads=threads, chunk_size=chunk_size), statistic, k)
    codes_a, codes_b, labels = _codes(values_a, values_b)
    size = len(labels)
    tv = total_variation(codes_a, codes_b, size)

    rng = np.random.default_rng(
        np.random.SeedSequence(bootstrap_seed if bootstrap_seed is not None else spec_a.seed, spawn_key=(2**31,))
    )
    replicates = []
    for _ in range(bootstrap_rounds):
        pick_a = codes_a[rng.integers(0, len(codes_a), len(codes_a))]
        pick_b = codes_b[rng.integers(0, len(codes_b), len(codes_b))]
        replicates.append(total_variation(pick_a, pick_b, size))
    half_width = float(1.96 * np.std(replicates)) if replicates else 0.0

    ks_statistic = ks_pvalue = None
    if values_a.ndim == 1 and samples > 0:
        result = sps.ks_2samp(values_a, values_b)
        ks_statistic, ks_pvalue = float(result.statistic), float(result.pvalue)

    freq_a, freq_b = _frequencies(codes_a, size), _frequencies(codes_b, size)
    report = ComparisonReport(
        statistic=statistic.value if statistic is not Statistic.NK else f"nk[{k}]",
        model_a=spec_a.as_dict(),
        model_b=spec_b.as_dict(),
        samples_a=len(codes_a),
        samples_b=len(codes_b),
        tv=tv,
        tv_half_width=half_width,
        ks_statistic=ks_statistic,
        ks_pvalue=ks_pvalue,
        distribution_a={str(label): float(freq) for label, freq in zip(labels, freq_a) if freq},
        distribution_b={str(label): float(freq) for label, freq in zip(labels, freq_b) if freq},
    )
    LOGGER.info("Compared models", extra={"statistic": report.statistic, "tv": tv})
    return report


__all__ = [
    "ComparisonReport",
    "DEFAULT_BOOTSTRAP_ROUNDS",
    "Statistic",
    "compare",
    "statistic_values",
    "total_variation",
]
