"""ReportRepository - persistence of run reports and CSV traces.

Artifacts live under one output directory:
- ``report.json``: the serialized RunReport
- ``traces/*.csv``: boundary traces, witness ray paths and figure curves

All operations are instrumented with OpenTelemetry for observability.
"""

import csv
import logging
import re
from collections.abc import Iterable, Sequence
from pathlib import Path

from pydantic import ValidationError

from src.errors import DataError
from src.models.reports import BoundaryTraceRecord, WitnessPath
from src.models.run_report import RunReport
from src.observability.tracing import traced

logger = logging.getLogger(__name__)

REPORT_FILE = "report.json"
TRACES_DIR = "traces"

_UNSAFE = re.compile(r"[^A-Za-z0-9._-]+")


class ReportRepository:
    """Repository for the artifacts of verification runs.

    Attributes:
        output_dir: Directory receiving report.json and traces/
    """

    def __init__(self, output_dir: str | Path) -> None:
        """Initialize the repository with an output directory.

        Args:
            output_dir: Created on first write
        """
        self.output_dir = Path(output_dir)

    @property
    def report_path(self) -> Path:
        return self.output_dir / REPORT_FILE

    @property
    def traces_dir(self) -> Path:
        return self.output_dir / TRACES_DIR

    def _table_path(self, name: str) -> Path:
        return self.traces_dir / f"{_UNSAFE.sub('-', name).strip('-')}.csv"

    @traced("save_report")
    def save_report(self, report: RunReport) -> Path:
        """Write the report as indented JSON.

        Args:
            report: The RunReport to persist

        Returns:
            Path of the written report
        """
        self.output_dir.mkdir(parents=True, exist_ok=True)
        self.report_path.write_text(report.model_dump_json(indent=2) + "\n", encoding="utf-8")
        logger.info("wrote %s", self.report_path)
        return self.report_path

    @traced("load_report")
    def load_report(self) -> RunReport:
        """Read report.json back.

        Raises:
            DataError: the report is missing or does not validate
        """
        if not self.report_path.is_file():
            raise DataError(f"no report at {self.report_path}")
        try:
            return RunReport.model_validate_json(self.report_path.read_text(encoding="utf-8"))
        except ValidationError as exc:
            raise DataError(
                f"invalid report at {self.report_path}: {exc.error_count()} errors"
            ) from exc

    @traced("write_table")
    def write_table(
        self, name: str, header: Sequence[str], rows: Iterable[Sequence[float | str]]
    ) -> Path:
        """Write one CSV file under traces/.

        Args:
            name: File stem, without extension
            header: Column names
            rows: Rows with one value per column

        Returns:
            Path of the written file
        """
        path = self._table_path(name)
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f)
            writer.writerow(header)
            for row in rows:
                if len(row) != len(header):
                    raise DataError(f"{name}: row has {len(row)} values, header has {len(header)}")
                writer.writerow([repr(float(v)) if isinstance(v, float) else v for v in row])
        return path

    def read_table(self, name: str) -> tuple[list[str], list[list[str]]]:
        """Header and rows of a CSV file under traces/.

        Raises:
            DataError: the file does not exist
        """
        path = self._table_path(name)
        if not path.is_file():
            raise DataError(f"no table at {path}")
        with path.open(newline="", encoding="utf-8") as f:
            rows = list(csv.reader(f))
        return rows[0], rows[1:]

    def save_boundary_traces(self, records: Sequence[BoundaryTraceRecord]) -> list[Path]:
        """One CSV per trace record, columns t and value."""
        paths = []
        for record in records:
            side = "left" if record.side < 0 else "right"
            name = f"dn-{record.kind.lower()}-{side}"
            rows = zip(record.times, record.values, strict=True)
            paths.append(self.write_table(name, ("t", "value"), rows))
        return paths

    def save_witness_path(self, path: WitnessPath, prefix: str) -> Path:
        """A ray path as CSV with columns s, the coordinates and the cylinder clearance f."""
        header = ("s", *path.coord_names, "f")
        samples = zip(path.s, path.coords, path.clearance, strict=True)
        rows = ((s, *coords, f) for s, coords, f in samples)
        return self.write_table(f"{prefix}-{path.label}", header, rows)
