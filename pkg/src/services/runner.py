"""Run the configured suites and persist the report."""

import logging
from collections.abc import Sequence
from datetime import datetime, timezone

from src.models.run_config import RunConfig
from src.models.run_report import RunReport
from src.observability.tracing import traced
from src.repositories.report_repository import ReportRepository
from src.services.causality_suite import run_causality_suite
from src.services.figures import emit_figures
from src.services.wave_suite import run_wave_suite
from src.services.witness_suite import run_witness_suite

logger = logging.getLogger(__name__)


@traced("run")
def run(
    config: RunConfig,
    repository: ReportRepository | None = None,
    wave_modes: Sequence[str] = ("dn", "sts"),
) -> RunReport:
    """Execute the selected suites in order and write report.json and traces/.

    Suites run sequentially; each one is deterministic for a fixed seed, so
    the report depends on the configuration only (apart from ``timestamp``).

    Args:
        config: Validated run configuration
        repository: Artifact destination; defaults to ``config.output_dir``
        wave_modes: Comparisons of the waves suite, "dn" and/or "sts"

    Returns:
        The saved report, ``passed`` being the conjunction of all suite verdicts
    """
    repository = repository or ReportRepository(config.output_dir)
    suites = config.selected_suites
    report = RunReport(timestamp=datetime.now(timezone.utc).isoformat(), config=config, passed=False)
    if "causality" in suites:
        report.causality = run_causality_suite(config)
    if "waves" in suites:
        report.waves = run_wave_suite(config, wave_modes)
        repository.save_boundary_traces(report.waves.traces)
    if "witness" in suites:
        report.witness = run_witness_suite(config)
    if "figures" in suites:
        report.figures = emit_figures(config, repository, report)
    results = [s for s in (report.causality, report.waves, report.witness) if s is not None]
    report.passed = all(s.passed for s in results)
    repository.save_report(report)
    logger.info("run %s %s: passed=%s", config.scenario, ",".join(suites), report.passed)
    return report
