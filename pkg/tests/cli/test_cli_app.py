from __future__ import annotations

import json
from pathlib import Path

import pytest

from degseq.cli.app import EXIT_CAPACITY, EXIT_SINGULARITY, EXIT_USAGE, build_parser, main


def _run(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, dict, str]:
    code = main(list(argv), env={})
    captured = capsys.readouterr()
    payload = json.loads(captured.out) if captured.out.strip().startswith("{") else {}
    return code, payload, captured.err


def test_count_complete_bipartite(capsys: pytest.CaptureFixture[str]) -> None:
    code, payload, _ = _run(capsys, "count", "--seq", "3,3,3,3,3,3")

    assert code == 0
    assert payload["command"] == "count"
    assert payload["result"]["count"] == "70"
    assert payload["provenance"]["seed"] == 7


def test_count_with_forbidden_pair(capsys: pytest.CaptureFixture[str]) -> None:
    code, payload, _ = _run(capsys, "count", "--seq", "2,2,2,2", "--forbid", "1-2")

    assert code == 0
    assert payload["result"]["count"] == "1"
    assert payload["result"]["constraint"]["forbidden"] == [[1, 2]]


def test_seq_file(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    seq_file = tmp_path / "cycle.txt"
    seq_file.write_text("# four-cycle\n2\n2\n\n2\n2\n", encoding="utf-8")

    code, payload, _ = _run(capsys, "count", "--seq-file", str(seq_file))

    assert code == 0
    assert payload["result"]["count"] == "3"


def test_prob_and_ratio(capsys: pytest.CaptureFixture[str]) -> None:
    _, prob, _ = _run(capsys, "pathprob", "--seq", "2,2,2,2", "--path", "1,2,3")
    _, ratio, _ = _run(capsys, "ratio", "--seq", "2,2,1,2", "--pair", "1,3")

    assert prob["result"]["prob"]["exact"] == "1/3"
    assert ratio["result"]["ratio"]["exact"] == "2/1"


def test_graphical_reports_both_tests(capsys: pytest.CaptureFixture[str]) -> None:
    code, payload, _ = _run(capsys, "graphical", "--seq", "1,1,1")

    assert code == 0
    assert payload["result"]["graphical"] is False
    assert payload["result"]["erdos_gallai"] is False
    assert payload["result"]["koren"] is False
    assert payload["result"]["koren_exhaustive_limit"] == 10


def test_asym_regular(capsys: pytest.CaptureFixture[str]) -> None:
    code, payload, _ = _run(capsys, "asym", "--formula", "regular", "--n", "6", "--d", "3")

    assert code == 0
    assert payload["result"]["log_value"] > 0
    assert payload["result"]["value"] == pytest.approx(70, rel=0.2)


def test_sample_is_seeded(capsys: pytest.CaptureFixture[str]) -> None:
    argv = ("sample", "--model", "gnm", "--n", "6", "--m", "5", "--count", "4", "--seed", "3")
    _, first, _ = _run(capsys, *argv)
    _, second, _ = _run(capsys, *argv)

    assert first["result"]["samples"] == second["result"]["samples"]
    assert first["result"]["draws"] == 4
    assert first["result"]["summary"]["min_sum"] == 10
    assert first["provenance"]["seed"] == 3


def test_fixpoint_zero_steps(capsys: pytest.CaptureFixture[str]) -> None:
    code, payload, _ = _run(capsys, "fixpoint", "--root", "6,6,6,6,6,6,6,6,6,6,6,6", "--k0", "1", "--steps", "0")

    assert code == 0
    assert payload["result"]["steps_completed"] == 0
    assert payload["result"]["radius"] == 0
    assert payload["result"]["steps"] == []


def test_fixpoint_empty_level_fails(capsys: pytest.CaptureFixture[str]) -> None:
    code, _, err = _run(capsys, "fixpoint", "--root", "2,2,2,2,2,2", "--k0", "1")

    assert code == 1
    assert json.loads(err.strip().splitlines()[-1])["error"] == "DomainExhaustedError"


def test_csv_output_to_file(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    target = tmp_path / "out" / "table.csv"

    code = main(["table", "--n", "4", "--m", "3", "--format", "csv", "--out-file", str(target)], env={})

    assert code == 0
    assert capsys.readouterr().out == ""
    assert target.read_text(encoding="utf-8").splitlines()[0].startswith("degrees")


def test_usage_error_exit_code(capsys: pytest.CaptureFixture[str]) -> None:
    code, _, err = _run(capsys, "count")

    assert code == EXIT_USAGE
    assert json.loads(err.strip().splitlines()[-1])["error"] == "UsageError"


def test_capacity_exit_code(capsys: pytest.CaptureFixture[str]) -> None:
    code, _, err = _run(capsys, "count", "--seq", ",".join(["1"] * 18))

    assert code == EXIT_CAPACITY
    assert "CapacityError" in err


def test_undefined_probability_exit_code(capsys: pytest.CaptureFixture[str]) -> None:
    code, _, err = _run(capsys, "prob", "--seq", "1,1,1", "--pair", "1,2")

    assert code == EXIT_SINGULARITY
    assert "UndefinedProbabilityError" in err


def test_check_list(capsys: pytest.CaptureFixture[str]) -> None:
    code, payload, _ = _run(capsys, "check", "--list")

    assert code == 0
    assert "oracle_brute_force" in payload["result"]["checks"]


def test_check_with_params(capsys: pytest.CaptureFixture[str]) -> None:
    code, payload, _ = _run(
        capsys, "check", "--name", "graphicality", "--param", "max_n=4", "--param", "max_degree=3", "--strict"
    )

    assert code == 0
    assert payload["result"]["passed"] is True
    assert payload["result"]["details"]["params"] == {"max_n": 4, "max_degree": 3}


def test_check_needs_a_name(capsys: pytest.CaptureFixture[str]) -> None:
    code, _, _ = _run(capsys, "check")

    assert code == EXIT_USAGE


def test_experiment_writes_manifest(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    recipe = tmp_path / "mini.yml"
    recipe.write_text(
        "\n".join(
            [
                "name: mini",
                "seed: 5",
                "runs:",
                "  - name: k33",
                "    argv: [count, --seq, '3,3,3,3,3,3']",
                "  - name: too-big",
                "    argv: [count, --seq, '" + ",".join(["2"] * 18) + "']",
                "  - name: broken",
                "    argv: []",
                "",
            ]
        ),
        encoding="utf-8",
    )
    out_dir = tmp_path / "reports"

    code, payload, _ = _run(capsys, "experiment", "--recipe", str(recipe), "--out-dir", str(out_dir))

    manifest = json.loads((out_dir / "manifest.json").read_text(encoding="utf-8"))
    statuses = {run["name"]: run["status"] for run in manifest["runs"]}
    assert code == 1
    assert payload["result"]["failed"] == 2
    assert statuses == {"k33": "ok", "too-big": "error", "broken": "error"}
    k33 = json.loads((out_dir / "k33.json").read_text(encoding="utf-8"))
    assert k33["result"]["count"] == "70"
    assert k33["provenance"]["seed"] == 5


def test_missing_recipe(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    code, _, _ = _run(capsys, "experiment", "--recipe", str(tmp_path / "absent.yml"))

    assert code == EXIT_USAGE


def test_version_flag(capsys: pytest.CaptureFixture[str]) -> None:
    with pytest.raises(SystemExit) as excinfo:
        build_parser().parse_args(["--version"])

    assert excinfo.value.code == 0
    assert capsys.readouterr().out.startswith("degseq ")
