from __future__ import annotations

import numpy as np
import pytest

from degseq.errors import ModelError
from degseq.models.samplers import ModelKind, ModelSpec, chunk_rng, resolve_threads, sample, sample_matrix


def test_complete_graph_degrees() -> None:
    matrix = sample_matrix(ModelSpec(ModelKind.GNM, 4, m=6, seed=3), 5)

    assert matrix.tolist() == [[3, 3, 3, 3]] * 5


def test_single_edge_binomial_model() -> None:
    matrix = sample_matrix(ModelSpec("bm", 2, m=1, seed=3), 3)

    assert matrix.tolist() == [[1, 1]] * 3


@pytest.mark.parametrize("kind", [ModelKind.GNM, ModelKind.BM])
def test_fixed_edge_models_preserve_degree_sum(kind: ModelKind) -> None:
    matrix = sample_matrix(ModelSpec(kind, 12, m=20, seed=11), 300, chunk_size=64)

    assert matrix.shape == (300, 12)
    assert (matrix.sum(axis=1) == 40).all()
    assert matrix.min() >= 0
    assert matrix.max() <= 11


@pytest.mark.parametrize("kind", [ModelKind.EP, ModelKind.EP_PRIME, ModelKind.BHATP])
def test_even_models_produce_even_sums(kind: ModelKind) -> None:
    matrix = sample_matrix(ModelSpec(kind, 9, p=0.3, seed=5), 200, chunk_size=50)

    assert (matrix.sum(axis=1) % 2 == 0).all()
    assert matrix.max() <= 8


def test_gnp_and_bp_shapes() -> None:
    for kind in (ModelKind.GNP, ModelKind.BP):
        matrix = sample_matrix(ModelSpec(kind, 7, p=0.5, seed=1), 40)
        assert matrix.shape == (40, 7)
        assert matrix.max() <= 6


def test_gnp_sums_are_even() -> None:
    matrix = sample_matrix(ModelSpec(ModelKind.GNP, 7, p=0.5, seed=1), 100)

    assert (matrix.sum(axis=1) % 2 == 0).all()


@pytest.mark.parametrize("kind", list(ModelKind))
def test_thread_count_does_not_change_samples(kind: ModelKind) -> None:
    spec = ModelSpec(kind, 10, m=15, seed=42) if kind.uses_m else ModelSpec(kind, 10, p=0.3, seed=42)

    single = sample_matrix(spec, 1000, threads=1, chunk_size=128)
    pooled = sample_matrix(spec, 1000, threads=4, chunk_size=128)

    assert np.array_equal(single, pooled)


def test_seeds_select_streams() -> None:
    first = sample_matrix(ModelSpec("gnm", 10, m=15, seed=1), 50)
    again = sample_matrix(ModelSpec("gnm", 10, m=15, seed=1), 50)
    other = sample_matrix(ModelSpec("gnm", 10, m=15, seed=2), 50)

    assert np.array_equal(first, again)
    assert not np.array_equal(first, other)
    assert chunk_rng(1, 0).random() != chunk_rng(1, 1).random()


def test_sample_wraps_rows() -> None:
    spec = ModelSpec("gnm", 5, m=4, seed=9)
    drawn = list(sample(spec, 3))

    assert [item.index for item in drawn] == [0, 1, 2]
    assert drawn[0].as_dict()["model"] == "gnm(n=5,m=4)"
    assert drawn[0].seq.total == 8


def test_zero_draws() -> None:
    assert sample_matrix(ModelSpec("bp", 5, p=0.2), 0).shape == (0, 5)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"kind": "gnm", "n": 4, "m": 7},
        {"kind": "bm", "n": 4},
        {"kind": "gnp", "n": 4, "p": 0.0},
        {"kind": "ep", "n": 4, "p": 1.5},
        {"kind": "er", "n": 4, "p": 0.5},
        {"kind": "gnm", "n": 0, "m": 0},
        {"kind": "gnm", "n": 4, "m": 1, "seed": -1},
    ],
)
def test_invalid_specs(kwargs: dict) -> None:
    with pytest.raises(ModelError):
        ModelSpec(**kwargs)


def test_invalid_counts() -> None:
    spec = ModelSpec("gnm", 4, m=2)

    with pytest.raises(ModelError):
        sample_matrix(spec, -1)
    with pytest.raises(ModelError):
        sample_matrix(spec, 10, chunk_size=0)


def test_resolve_threads() -> None:
    assert resolve_threads(3) == 3
    assert resolve_threads(0) >= 1
    assert resolve_threads(None) >= 1
