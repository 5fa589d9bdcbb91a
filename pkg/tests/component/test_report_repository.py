"""Component tests for ReportRepository.

Tests the ReportRepository against a temporary output directory.
Covers report persistence, CSV tables, boundary traces and witness paths.
"""

from pathlib import Path

import pytest

from src.errors import DataError
from src.models.reports import BoundaryTraceRecord, WitnessPath
from src.models.run_config import RunConfig
from src.models.run_report import CheckResult, CausalitySuiteResult, RunReport
from src.repositories.report_repository import ReportRepository


@pytest.fixture
def repository(tmp_path: Path) -> ReportRepository:
    """Create a ReportRepository writing below tmp_path."""
    return ReportRepository(tmp_path / "out")


def _report() -> RunReport:
    check = CheckResult(name="conformal-time-span", value=1e-12, bound=1e-8, passed=True)
    return RunReport(
        timestamp="2026-01-01T00:00:00+00:00",
        config=RunConfig(scenario="flrw"),
        causality=CausalitySuiteResult(scenario="flrw", checks=[check], passed=True),
        passed=True,
    )


@pytest.mark.component
def test_save_and_load_report(repository: ReportRepository) -> None:
    """Test that a saved report loads back unchanged."""
    # Arrange
    report = _report()

    # Act
    path = repository.save_report(report)
    loaded = repository.load_report()

    # Assert
    assert path == repository.output_dir / "report.json"
    assert loaded.model_dump() == report.model_dump()


@pytest.mark.component
def test_load_missing_report_raises(repository: ReportRepository) -> None:
    """Test that loading without report.json raises DataError."""
    with pytest.raises(DataError, match="no report"):
        repository.load_report()


@pytest.mark.component
def test_load_invalid_report_raises(repository: ReportRepository) -> None:
    """Test that a report.json that does not validate raises DataError."""
    repository.output_dir.mkdir(parents=True)
    repository.report_path.write_text('{"tool": "calderon-verify"}', encoding="utf-8")

    with pytest.raises(DataError, match="invalid report"):
        repository.load_report()


@pytest.mark.component
def test_write_and_read_table(repository: ReportRepository) -> None:
    """Test that floats are written at full precision and read back as text."""
    # Act
    path = repository.write_table("curve", ("t", "x"), [(0.0, 0.1), (1.0, 1.0 / 3.0)])
    header, rows = repository.read_table("curve")

    # Assert
    assert path == repository.traces_dir / "curve.csv"
    assert header == ["t", "x"]
    assert rows == [["0.0", "0.1"], ["1.0", repr(1.0 / 3.0)]]
    assert float(rows[1][1]) == 1.0 / 3.0


@pytest.mark.component
def test_write_table_rejects_ragged_rows(repository: ReportRepository) -> None:
    """Test that a row with the wrong number of values raises DataError."""
    with pytest.raises(DataError, match="row has 1 values"):
        repository.write_table("ragged", ("t", "x"), [(0.0,)])


@pytest.mark.component
def test_read_missing_table_raises(repository: ReportRepository) -> None:
    """Test that reading an unknown table raises DataError."""
    with pytest.raises(DataError, match="no table"):
        repository.read_table("absent")


@pytest.mark.component
def test_table_names_are_sanitized(repository: ReportRepository) -> None:
    """Test that characters outside [A-Za-z0-9._-] are replaced in file names."""
    path = repository.write_table("flrw-past-U'", ("t",), [(1.0,)])

    assert path.name == "flrw-past-U.csv"


@pytest.mark.component
def test_save_boundary_traces(repository: ReportRepository) -> None:
    """Test that each trace record becomes a two-column CSV named by kind and side."""
    # Arrange
    records = [
        BoundaryTraceRecord(side=-1, kind="Neumann-g", times=[0.0, 0.5], values=[0.0, 0.25]),
        BoundaryTraceRecord(side=1, kind="Neumann-g_prime", times=[0.0, 0.5], values=[0.0, 0.5]),
    ]

    # Act
    paths = repository.save_boundary_traces(records)

    # Assert
    assert [p.name for p in paths] == ["dn-neumann-g-left.csv", "dn-neumann-g_prime-right.csv"]
    header, rows = repository.read_table("dn-neumann-g_prime-right")
    assert header == ["t", "value"]
    assert rows[1] == ["0.5", "0.5"]


@pytest.mark.component
def test_save_witness_path(repository: ReportRepository) -> None:
    """Test that a ray path is written with s, coordinates and the clearance f."""
    # Arrange
    path = WitnessPath(
        label="ray-3",
        coord_names=["t", "x"],
        s=[0.0, 1.0],
        coords=[[0.0, 0.0], [1.0, 1.0]],
        clearance=[-2.0, -1.5],
    )

    # Act
    written = repository.save_witness_path(path, "witness-00-diamond-future")

    # Assert
    assert written.name == "witness-00-diamond-future-ray-3.csv"
    header, rows = repository.read_table("witness-00-diamond-future-ray-3")
    assert header == ["s", "t", "x", "f"]
    assert rows == [["0.0", "0.0", "0.0", "-2.0"], ["1.0", "1.0", "1.0", "-1.5"]]
