from __future__ import annotations

import os
from pathlib import Path

import pytest

pytest.importorskip("dotenv")

from degseq.cli import app  # noqa: E402


def test_candidates_end_with_working_directory(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.chdir(tmp_path)

    candidates = app._candidate_dotenv_paths(Path(app.__file__))

    assert candidates[-1] == tmp_path / ".env"
    assert all(candidate.name == ".env" for candidate in candidates)


def test_dotenv_fills_unset_variables_only(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    env_path = tmp_path / ".env"
    env_path.write_text("DEGSEQ_DOTENV_PROBE=from-dotenv\nDEGSEQ_DOTENV_KEEP=from-dotenv\n", encoding="utf-8")
    monkeypatch.setattr(app, "_candidate_dotenv_paths", lambda _source: [tmp_path / "missing.env", env_path])
    monkeypatch.setenv("DEGSEQ_DOTENV_PROBE", "")
    monkeypatch.delenv("DEGSEQ_DOTENV_PROBE")
    monkeypatch.setenv("DEGSEQ_DOTENV_KEEP", "from-shell")

    assert app._load_local_dotenv() == env_path
    assert os.environ["DEGSEQ_DOTENV_PROBE"] == "from-dotenv"
    assert os.environ["DEGSEQ_DOTENV_KEEP"] == "from-shell"
