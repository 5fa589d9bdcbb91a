"""Component tests for the suite runner.

This test explains what a run should leave behind:
- report.json holding every executed suite and the resolved configuration
- Figure tables for the scenario and the witness ray paths
- An overall verdict that is the conjunction of the suite verdicts
"""

from pathlib import Path

import pytest

from src.models.run_config import RunConfig
from src.repositories.report_repository import ReportRepository
from src.services.runner import run


def _config(output_dir: Path, suites: list[str]) -> RunConfig:
    return RunConfig.model_validate(
        {
            "scenario": "hyperboloid",
            "suites": suites,
            "rays": {"n_points": 10, "seed": 1},
            "output_dir": str(output_dir),
        }
    )


@pytest.mark.component
def test_run_writes_report_and_figures(tmp_path: Path) -> None:
    """Test that causality plus figures writes report.json and the CSV tables."""
    # Arrange
    config = _config(tmp_path, ["causality", "figures"])
    repository = ReportRepository(config.output_dir)

    # Act
    report = run(config, repository)

    # Assert
    assert report.passed
    assert report.causality is not None
    assert report.waves is None
    assert report.witness is None
    assert repository.report_path.is_file()
    assert repository.load_report().model_dump() == report.model_dump()
    assert "traces/hyperboloid-boundary.csv" in report.figures
    assert "traces/hyperboloid-diamond.csv" in report.figures
    assert len(report.figures) == 2 + 4
    assert all((tmp_path / name).is_file() for name in report.figures)


@pytest.mark.component
def test_run_defaults_to_config_output_dir(tmp_path: Path) -> None:
    """Test that the repository defaults to the configured output directory."""
    config = _config(tmp_path / "nested", ["witness"])

    report = run(config)

    assert report.passed
    assert report.witness is not None
    assert (tmp_path / "nested" / "report.json").is_file()


@pytest.mark.component
def test_skipped_wave_suite_keeps_the_run_passing(tmp_path: Path) -> None:
    """Test that a skipped waves suite counts as passed and writes no traces."""
    config = RunConfig.model_validate(
        {"scenario": "flrw", "suites": ["waves"], "output_dir": str(tmp_path)}
    )

    report = run(config)

    assert report.passed
    assert report.waves is not None
    assert report.waves.status == "skipped"
    assert not (tmp_path / "traces").exists()
