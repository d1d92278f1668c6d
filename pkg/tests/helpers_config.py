from __future__ import annotations

from pathlib import Path

DEFAULTS_TEMPLATE = """
exact:
  max_vertices: 16
  koren_exhaustive_limit: 10
  memo_entries: 2000000
operators:
  k0: 4
  arithmetic: float
  max_points: 64
models:
{seed_line}  chunk_size: 2048
  bootstrap_rounds: 200
runtime:
  threads: 0
  output_format: json
tolerances:
  model_tv: 0.05
"""


def write_defaults(tmp_path: Path, *, missing_seed: bool = False) -> Path:
    seed_line = "  seed: 7\n" if not missing_seed else ""
    defaults = tmp_path / "defaults.yml"
    defaults.write_text(DEFAULTS_TEMPLATE.format(seed_line=seed_line), encoding="utf-8")
    return defaults
