"""Degree-sequence samplers for the random graph and binomial models."""

from __future__ import annotations

import enum
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Iterator

import numpy as np

from ..core.sequence import DegreeSequence
from ..errors import ModelError
from ..logging_config import get_logger

LOGGER = get_logger(__name__)

DEFAULT_CHUNK_SIZE = 2048


class ModelKind(str, enum.Enum):
    GNM = "gnm"
    GNP = "gnp"
    BP = "bp"
    BM = "bm"
    EP = "ep"
    EP_PRIME = "ep_prime"
    BHATP = "bhatp"

    @property
    def uses_m(self) -> bool:
        return self in (ModelKind.GNM, ModelKind.BM)


@dataclass(frozen=True)
class ModelSpec:
    kind: ModelKind
    n: int
    m: int | None = None
    p: float | None = None
    seed: int = 0

    def __post_init__(self) -> None:
        try:
            kind = ModelKind(self.kind)
        except ValueError as exc:
            raise ModelError(f"unknown model kind {self.kind!r}") from exc
        object.__setattr__(self, "kind", kind)
        if self.n < 1:
            raise ModelError("models need at least one vertex", context={"n": self.n})
        if not 0 <= self.seed < 2**64:
            raise ModelError("seed must fit in 64 bits", context={"seed": self.seed})
        if kind.uses_m:
            if self.m is None or not 0 <= self.m <= self.pairs:
                raise ModelError(
                    "m must lie in [0, n(n-1)/2]", context={"kind": kind.value, "n": self.n, "m": self.m}
                )
        elif self.p is None or not 0 < self.p < 1:
            raise ModelError("p must lie in (0, 1)", context={"kind": kind.value, "p": self.p})

    @property
    def pairs(self) -> int:
        return self.n * (self.n - 1) // 2

    def label(self) -> str:
        parameter = f"m={self.m}" if self.kind.uses_m else f"p={self.p}"
        return f"{self.kind.value}(n={self.n},{parameter})"

    def as_dict(self) -> dict[str, Any]:
        payload: dict[str, Any] = {"kind": self.kind.value, "n": self.n, "seed": self.seed}
        if self.kind.uses_m:
            payload["m"] = self.m
        else:
            payload["p"] = self.p
        return payload


@dataclass(frozen=True)
class ModelSample:
    seq: DegreeSequence
    model: ModelSpec
    index: int

    def as_dict(self) -> dict[str, Any]:
        return {"index": self.index, "model": self.model.label(), "degrees": list(self.seq.degrees)}


def _row_counts(owners: np.ndarray, n: int) -> np.ndarray:
    """Per-row histograms of vertex labels in ``owners`` (rows x picks)."""

    rows = owners.shape[0]
    offsets = (np.arange(rows, dtype=np.int64) * n)[:, None]
    flat = (owners.astype(np.int64) + offsets).ravel()
    return np.bincount(flat, minlength=rows * n).reshape(rows, n)


def _uniform_subsets(rng: np.random.Generator, rows: int, population: int, k: int) -> np.ndarray:
    """``rows`` independent uniform k-subsets of range(population)."""

    if k == 0:
        return np.zeros((rows, 0), dtype=np.int64)
    if k == population:
        return np.tile(np.arange(population, dtype=np.int64), (rows, 1))
    keys = rng.random((rows, population))
    return np.argpartition(keys, k - 1, axis=1)[:, :k]


def _gnm(spec: ModelSpec, rng: np.random.Generator, rows: int) -> np.ndarray:
    left, right = np.triu_indices(spec.n, 1)
    chosen = _uniform_subsets(rng, rows, spec.pairs, spec.m)
    return _row_counts(left[chosen], spec.n) + _row_counts(right[chosen], spec.n)


def _gnp(spec: ModelSpec, rng: np.random.Generator, rows: int) -> np.ndarray:
    left, right = np.triu_indices(spec.n, 1)
    incidence = np.zeros((spec.pairs, spec.n), dtype=np.int64)
    incidence[np.arange(spec.pairs), left] = 1
    incidence[np.arange(spec.pairs), right] = 1
    edges = (rng.random((rows, spec.pairs)) < spec.p).astype(np.int64)
    return edges @ incidence


def _bm_rows(n: int, m: int, rng: np.random.Generator, rows: int) -> np.ndarray:
    cells = n * (n - 1)
    if cells == 0:
        return np.zeros((rows, n), dtype=np.int64)
    chosen = _uniform_subsets(rng, rows, cells, 2 * m)
    return _row_counts(chosen // (n - 1), n)


def _bm(spec: ModelSpec, rng: np.random.Generator, rows: int) -> np.ndarray:
    return _bm_rows(spec.n, spec.m, rng, rows)


def _bp(spec: ModelSpec, rng: np.random.Generator, rows: int) -> np.ndarray:
    return rng.binomial(spec.n - 1, spec.p, size=(rows, spec.n)).astype(np.int64)


def _even_binomial_rows(n: int, p: float, rng: np.random.Generator, rows: int) -> np.ndarray:
    kept: list[np.ndarray] = []
    collected = 0
    while collected < rows:
        batch = rng.binomial(n - 1, p, size=(max(rows - collected, 16) * 2, n)).astype(np.int64)
        batch = batch[batch.sum(axis=1) % 2 == 0]
        kept.append(batch)
        collected += batch.shape[0]
    return np.concatenate(kept)[:rows]


def _ep(spec: ModelSpec, rng: np.random.Generator, rows: int) -> np.ndarray:
    return _even_binomial_rows(spec.n, spec.p, rng, rows)


def _ep_prime(spec: ModelSpec, rng: np.random.Generator, rows: int) -> np.ndarray:
    edge_counts = rng.binomial(spec.pairs, spec.p, size=rows)
    out = np.empty((rows, spec.n), dtype=np.int64)
    for row, m in enumerate(edge_counts):
        out[row] = _bm_rows(spec.n, int(m), rng, 1)[0]
    return out


def _bhatp(spec: ModelSpec, rng: np.random.Generator, rows: int) -> np.ndarray:
    n, p = spec.n, spec.p
    scale = math.sqrt(p * (1 - p) / (n * (n - 1))) if n > 1 else 0.0
    out = np.empty((rows, n), dtype=np.int64)
    for row in range(rows):
        p_hat = rng.normal(p, scale)
        while not 0 < p_hat < 1:
            p_hat = rng.normal(p, scale)
        out[row] = _even_binomial_rows(n, p_hat, rng, 1)[0]
    return out


_DRAWERS = {
    ModelKind.GNM: _gnm,
    ModelKind.GNP: _gnp,
    ModelKind.BP: _bp,
    ModelKind.BM: _bm,
    ModelKind.EP: _ep,
    ModelKind.EP_PRIME: _ep_prime,
    ModelKind.BHATP: _bhatp,
}


def chunk_rng(seed: int, chunk: int) -> np.random.Generator:
    """Independent stream for one chunk, a pure function of (seed, chunk index)."""

    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(chunk,)))


def resolve_threads(threads: int | None) -> int:
    if threads is None or threads <= 0:
        return os.cpu_count() or 1
    return threads


def sample_matrix(
    spec: ModelSpec,
    count: int,
    *,
    threads: int | None = None,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> np.ndarray:
    """Draw ``count`` degree sequences as a (count x n) integer matrix.

    Draws are cut into fixed-size chunks with their own streams, so the result
    does not depend on ``threads``.
    """

    if count < 0:
        raise ModelError("count must be non-negative", context={"count": count})
    if chunk_size < 1:
        raise ModelError("chunk size must be positive", context={"chunk_size": chunk_size})
    if count == 0:
        return np.zeros((0, spec.n), dtype=np.int64)
    drawer = _DRAWERS[spec.kind]
    sizes = [min(chunk_size, count - start) for start in range(0, count, chunk_size)]

    def _draw(item: tuple[int, int]) -> np.ndarray:
        chunk, rows = item
        return drawer(spec, chunk_rng(spec.seed, chunk), rows)

    workers = min(resolve_threads(threads), len(sizes))
    LOGGER.info(
        "Sampling degree sequences",
        extra={"model": spec.label(), "count": count, "chunks": len(sizes), "workers": workers},
    )
    if workers == 1:
        blocks = [_draw(item) for item in enumerate(sizes)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(_draw, enumerate(sizes)))
    return np.concatenate(blocks)


def sample(
    spec: ModelSpec,
    count: int,
    *,
    threads: int | None = None,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> Iterator[ModelSample]:
    matrix = sample_matrix(spec, count, threads=threads, chunk_size=chunk_size)
    for index, row in enumerate(matrix):
        yield ModelSample(seq=DegreeSequence(tuple(int(x) for x in row)), model=spec, index=index)


__all__ = [
    "DEFAULT_CHUNK_SIZE",
    "ModelKind",
    "ModelSample",
    "ModelSpec",
    "chunk_rng",
    "resolve_threads",
    "sample",
    "sample_matrix",
]
