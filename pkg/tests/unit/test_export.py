from __future__ import annotations

import json
import math
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from degseq.cli.report import REPORT_VERSION, Provenance, Report, exact_counts, jsonable
from degseq.errors import ConfigurationError
from degseq.export import MANIFEST_NAME, ReportExporter, write_jsonl, write_manifest


@pytest.fixture
def report() -> Report:
    return Report(
        command="count",
        result={"count": 19506631814670, "prob": Fraction(1, 3)},
        provenance=Provenance(seed=7, config={"models": {"seed": 7}}, wall_time_s=0.25),
        rows=[{"degrees": [3, 3], "count": 1}, {"degrees": [2, 2], "count": 0}],
    )


def test_jsonable_normalises_values() -> None:
    assert jsonable(Fraction(2, 4)) == "1/2"
    assert jsonable(2**60) == str(2**60)
    assert jsonable(np.int64(5)) == 5
    assert jsonable(math.inf) == "inf"
    assert jsonable(-math.inf) == "-inf"
    assert jsonable(float("nan")) == "nan"
    assert jsonable({1: (True, None)}) == {"1": [True, None]}


def test_report_json(report: Report) -> None:
    payload = json.loads(report.to_json())

    assert payload["version"] == REPORT_VERSION
    assert payload["result"] == {"count": "19506631814670", "prob": "1/3"}
    assert payload["provenance"]["seed"] == 7
    assert payload["provenance"]["wall_time_s"] == 0.25


def test_report_csv_uses_rows(report: Report) -> None:
    lines = report.render("csv").strip().splitlines()

    assert lines[0] == "degrees,count"
    assert lines[1] == '"[3, 3]",1'


def test_exporter_writes_named_files(tmp_path: Path, report: Report) -> None:
    exporter = ReportExporter(tmp_path / "out")

    json_path = exporter.export(report, "cubic")
    csv_path = exporter.export(report, "cubic", "csv")

    assert json.loads(json_path.read_text(encoding="utf-8"))["command"] == "count"
    assert csv_path.name == "cubic.csv"
    with pytest.raises(ConfigurationError):
        exporter.export(report, "cubic", "xlsx")


def test_manifest_counts_failures(tmp_path: Path) -> None:
    path = write_manifest(
        tmp_path,
        [{"name": "a", "status": "ok"}, {"name": "b", "status": "error", "error": {"code": 3}}],
        recipe="smoke",
    )

    payload = json.loads(path.read_text(encoding="utf-8"))
    assert path.name == MANIFEST_NAME
    assert payload["recipe"] == "smoke"
    assert payload["failed"] == 1
    assert [run["name"] for run in payload["runs"]] == ["a", "b"]


def test_write_jsonl(tmp_path: Path) -> None:
    target = tmp_path / "nested" / "samples.jsonl"

    written = write_jsonl(target, ({"index": i, "p": Fraction(i, 2)} for i in range(3)))

    lines = target.read_text(encoding="utf-8").splitlines()
    assert written == 3
    assert json.loads(lines[1]) == {"index": 1, "p": "1/2"}


def test_exact_counts_are_strings_at_any_depth() -> None:
    result = {
        "count": 70,
        "n": 6,
        "rows": [{"count": np.int64(3), "degrees": [3, 3]}],
        "details": {"examples": [{"expected": 2, "got": 1}], "compared": 9},
        "passed": True,
    }

    assert exact_counts(result) == {
        "count": "70",
        "n": 6,
        "rows": [{"count": "3", "degrees": [3, 3]}],
        "details": {"examples": [{"expected": "2", "got": "1"}], "compared": 9},
        "passed": True,
    }


def test_small_counts_are_strings_in_json(report: Report) -> None:
    small = Report(command="count", result={"count": 1, "degrees": [1, 1]}, provenance=report.provenance)

    payload = json.loads(small.to_json())

    assert payload["result"] == {"count": "1", "degrees": [1, 1]}


def test_manifest_and_jsonl_write_counts_as_strings(tmp_path: Path) -> None:
    manifest = write_manifest(tmp_path, [{"name": "a", "status": "ok", "count": 5}])
    write_jsonl(tmp_path / "rows.jsonl", [{"index": 0, "count": 12}])

    assert json.loads(manifest.read_text(encoding="utf-8"))["runs"][0]["count"] == "5"
    assert json.loads((tmp_path / "rows.jsonl").read_text(encoding="utf-8")) == {"index": 0, "count": "12"}
