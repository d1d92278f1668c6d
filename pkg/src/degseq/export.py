"""Write reports and experiment manifests to disk."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Iterable, Mapping

from .cli.report import REPORT_VERSION, Report, exact_counts, jsonable
from .errors import ConfigurationError

_SUPPORTED_FORMATS = {"json", "csv"}
MANIFEST_NAME = "manifest.json"


class ReportExporter:
    def __init__(self, output_dir: Path | str) -> None:
        self.output_dir = Path(output_dir)
        self.output_dir.mkdir(parents=True, exist_ok=True)

    def export(self, report: Report, name: str, fmt: str = "json") -> Path:
        if fmt not in _SUPPORTED_FORMATS:
            raise ConfigurationError(f"Unsupported export format: {fmt}")
        output_path = self.output_dir / f"{name}.{fmt}"
        output_path.write_text(report.render(fmt), encoding="utf-8")
        return output_path


def write_manifest(
    output_dir: Path | str, entries: Iterable[Mapping[str, Any]], *, recipe: str | None = None
) -> Path:
    """Index the reports of one experiment run in ``manifest.json``."""

    path = Path(output_dir) / MANIFEST_NAME
    path.parent.mkdir(parents=True, exist_ok=True)
    listed = [jsonable(exact_counts(dict(entry))) for entry in entries]
    payload = {
        "version": REPORT_VERSION,
        "recipe": recipe,
        "runs": listed,
        "failed": sum(1 for entry in listed if entry.get("status") != "ok"),
    }
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return path


def write_jsonl(path: Path | str, records: Iterable[Mapping[str, Any]]) -> int:
    """Write one JSON object per line; returns the number of lines."""

    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    written = 0
    with target.open("w", encoding="utf-8") as handle:
        for record in records:
            handle.write(json.dumps(jsonable(exact_counts(record)), sort_keys=True) + "\n")
            written += 1
    return written


__all__ = ["MANIFEST_NAME", "ReportExporter", "write_jsonl", "write_manifest"]
