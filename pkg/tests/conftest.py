"""Shared pytest fixtures for degseq tests."""

from __future__ import annotations

import socket
from pathlib import Path

import pytest

from degseq.core.sequence import DegreeSequence
from degseq.exact.counter import GraphCounter
from degseq.exact.queries import ExactOracle


@pytest.fixture(autouse=True)
def _disable_network(monkeypatch: pytest.MonkeyPatch) -> None:
    """Prevent network access during the test suite."""

    def _guard(*args: object, **kwargs: object) -> socket.socket:  # type: ignore[override]
        raise RuntimeError("Network access is disabled during tests.")

    monkeypatch.setattr(socket, "socket", _guard)
    monkeypatch.setattr(socket, "create_connection", _guard)


@pytest.fixture(autouse=True)
def _isolated_environment(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    """Keep developer settings files and DEGSEQ_* variables out of the tests."""

    for key in (
        "DEGSEQ_THREADS",
        "DEGSEQ_SEED",
        "DEGSEQ_EXACT_CAP",
        "DEGSEQ_K0",
        "DEGSEQ_OUTPUT_FORMAT",
        "DEGSEQ_REPORTS_DIR",
        "DEGSEQ_RECIPES_DIR",
        "DEGSEQ_ROOT",
    ):
        monkeypatch.delenv(key, raising=False)
    monkeypatch.setenv("DEGSEQ_SETTINGS_FILE", str(tmp_path / "no-settings.yaml"))


@pytest.fixture
def counter() -> GraphCounter:
    return GraphCounter()


@pytest.fixture
def oracle(counter: GraphCounter) -> ExactOracle:
    return ExactOracle(counter)


@pytest.fixture
def regular() -> "RegularFn":
    def _build(n: int, degree: int) -> DegreeSequence:
        return DegreeSequence((degree,) * n)

    return _build


class RegularFn:
    def __call__(self, n: int, degree: int) -> DegreeSequence:  # pragma: no cover - documentation only
        ...
