"""Versioned report envelope shared by every subcommand."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from io import StringIO
from typing import Any, Mapping

import numpy as np
import pandas as pd

from .. import __version__

REPORT_VERSION = "report.v1"


def jsonable(value: Any) -> Any:
    """Normalise results for JSON: rationals and big integers become strings."""

    if isinstance(value, Mapping):
        return {str(key): jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(item) for item in value]
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return value
    if isinstance(value, int):
        return value if abs(value) < 2**53 else str(value)
    return str(value)


# Result fields holding exact realisation counts; always decimal strings.
EXACT_COUNT_KEYS = frozenset({"count", "expected", "got"})


def exact_counts(value: Any) -> Any:
    """Render integers under :data:`EXACT_COUNT_KEYS` as decimal strings, at any depth."""

    if isinstance(value, Mapping):
        return {
            key: str(item)
            if key in EXACT_COUNT_KEYS and isinstance(item, (int, np.integer)) and not isinstance(item, bool)
            else exact_counts(item)
            for key, item in value.items()
        }
    if isinstance(value, (list, tuple)):
        return [exact_counts(item) for item in value]
    return value


@dataclass(frozen=True)
class Provenance:
    seed: int | None
    config: Mapping[str, Any]
    wall_time_s: float
    version: str = __version__

    def as_dict(self) -> dict[str, Any]:
        return {
            "version": self.version,
            "seed": self.seed,
            "config": jsonable(self.config),
            "wall_time_s": round(self.wall_time_s, 6),
        }


@dataclass
class Report:
    command: str
    result: dict[str, Any]
    provenance: Provenance
    rows: list[dict[str, Any]] | None = field(default=None)
    version: str = REPORT_VERSION

    def as_dict(self) -> dict[str, Any]:
        return {
            "version": self.version,
            "command": self.command,
            "result": jsonable(exact_counts(self.result)),
            "provenance": self.provenance.as_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)

    def table(self) -> pd.DataFrame:
        rows = self.rows if self.rows is not None else [self.result]
        flat = []
        for row in exact_counts(rows):
            flat.append(
                {
                    key: json.dumps(jsonable(value), sort_keys=True)
                    if isinstance(value, (Mapping, list, tuple))
                    else jsonable(value)
                    for key, value in row.items()
                }
            )
        return pd.DataFrame(flat)

    def to_csv(self) -> str:
        buffer = StringIO()
        self.table().to_csv(buffer, index=False)
        return buffer.getvalue()

    def render(self, fmt: str) -> str:
        if fmt == "csv":
            return self.to_csv()
        return self.to_json() + "\n"


__all__ = ["EXACT_COUNT_KEYS", "Provenance", "REPORT_VERSION", "Report", "exact_counts", "jsonable"]
