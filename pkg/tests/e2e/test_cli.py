"""End-to-end tests for the calderon-verify command line.

This test explains what the CLI should do:
- Print the configuration schema
- Run suites, write report.json and print a JSON summary
- Map invalid configurations and missing inputs onto exit code 2
- Resolve the output directory from flags, environment and config file
- Write the same report.json bytes on every re-run, whatever the worker count
"""

import json
import os
from pathlib import Path

import pytest
from pytest_mock import MockerFixture

from src.main import EXIT_CONFIG, EXIT_OK, build_parser, main, resolve_config


@pytest.mark.e2e
def test_schema_prints_run_config_schema(capsys: pytest.CaptureFixture[str]) -> None:
    """Test that `schema` prints the JSON schema of RunConfig."""
    code = main(["schema"])

    schema = json.loads(capsys.readouterr().out)
    assert code == EXIT_OK
    assert schema["title"] == "RunConfig"
    assert "scenario" in schema["properties"]


@pytest.mark.e2e
def test_verify_causality_writes_report(
    tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    """Test that `verify causality` passes and writes report.json."""
    argv = ["verify", "causality", "--scenario", "hyperboloid", "--rays", "5", "--seed", "1"]

    code = main([*argv, "--output", str(tmp_path)])

    summary = json.loads(capsys.readouterr().out)
    assert code == EXIT_OK
    assert summary["passed"] is True
    assert summary["suites"] == ["causality"]
    assert (tmp_path / "report.json").is_file()
    report = json.loads((tmp_path / "report.json").read_text(encoding="utf-8"))
    assert report["config"]["rays"]["n_points"] == 5
    assert report["witness"] is None


@pytest.mark.e2e
def test_invalid_configuration_exits_with_config_code(
    tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    """Test that a ray count of zero is rejected before any suite runs."""
    code = main(["verify", "causality", "--rays", "0", "--output", str(tmp_path)])

    assert code == EXIT_CONFIG
    assert "invalid configuration" in capsys.readouterr().err
    assert not (tmp_path / "report.json").exists()


@pytest.mark.e2e
def test_missing_config_file_exits_with_config_code(tmp_path: Path) -> None:
    """Test that a config path that does not exist maps to exit code 2."""
    code = main(["run", "--config", str(tmp_path / "absent.json")])

    assert code == EXIT_CONFIG


@pytest.mark.e2e
def test_figures_without_report_exits_with_config_code(
    tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    """Test that `figures` needs an existing report.json."""
    code = main(["figures", "--output", str(tmp_path)])

    assert code == EXIT_CONFIG
    assert "no report" in capsys.readouterr().err


@pytest.mark.e2e
def test_witness_command_passes_for_hyperboloid(tmp_path: Path) -> None:
    """Test that `witness` finds the curvature witness with the default bump."""
    code = main(["witness", "--scenario", "hyperboloid", "--Rc", "1.0", "--output", str(tmp_path)])

    report = json.loads((tmp_path / "report.json").read_text(encoding="utf-8"))
    assert code == EXIT_OK
    assert report["witness"]["verdict"]["status"] == "NonIsometric"


@pytest.mark.e2e
def test_run_with_config_file(tmp_path: Path) -> None:
    """Test that `run --config` reads the file and flags override its values."""
    config = tmp_path / "run.json"
    config.write_text(
        json.dumps(
            {
                "scenario": "kruskal",
                "suites": ["causality"],
                "rays": {"n_points": 1000, "seed": 3},
                "output_dir": str(tmp_path / "from-file"),
            }
        ),
        encoding="utf-8",
    )

    code = main(["run", "--config", str(config), "--rays", "5"])

    report = json.loads((tmp_path / "from-file" / "report.json").read_text(encoding="utf-8"))
    assert code == EXIT_OK
    assert report["config"]["scenario"] == "kruskal"
    assert report["config"]["rays"] == {"n_points": 5, "seed": 3, "tolerance": 1e-10}


@pytest.mark.e2e
def test_environment_overrides_config_output_dir(tmp_path: Path, mocker: MockerFixture) -> None:
    """Test the precedence --output > CALDERON_OUTPUT_DIR > config file."""
    config = tmp_path / "run.json"
    config.write_text(json.dumps({"output_dir": "from-file"}), encoding="utf-8")
    mocker.patch.dict(os.environ, {"CALDERON_OUTPUT_DIR": str(tmp_path / "from-env")})
    parser = build_parser()

    from_env = resolve_config(parser.parse_args(["witness", "--config", str(config)]))
    from_flag = resolve_config(
        parser.parse_args(["witness", "--config", str(config), "--output", "from-flag"])
    )

    assert from_env.output_dir == str(tmp_path / "from-env")
    assert from_flag.output_dir == "from-flag"
    assert from_flag.selected_suites == ["witness"]


@pytest.mark.e2e
def test_compare_maps_onto_waves_suite() -> None:
    """Test that `compare dn` selects the waves suite."""
    args = build_parser().parse_args(["compare", "dn", "--levels", "2"])

    config = resolve_config(args)

    assert config.selected_suites == ["waves"]
    assert config.grid.levels == 2


@pytest.mark.e2e
def test_repeated_runs_write_identical_reports(tmp_path: Path, mocker: MockerFixture) -> None:
    """Test that re-runs with one or three workers rewrite report.json byte for byte."""
    clock = mocker.patch("src.services.runner.datetime")
    clock.now.return_value.isoformat.return_value = "2026-01-01T00:00:00+00:00"
    argv = ["run", "--suite", "causality", "--suite", "witness", "--scenario", "hyperboloid"]
    argv += ["--rays", "10", "--seed", "1", "--output", str(tmp_path)]
    report_path = tmp_path / "report.json"

    snapshots = []
    for workers in ("1", "1", "3"):
        assert main([*argv, "--workers", workers]) == EXIT_OK
        snapshots.append(report_path.read_bytes())

    assert snapshots[0] == snapshots[1]
    assert snapshots[0] == snapshots[2]
