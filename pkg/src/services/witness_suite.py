"""Witness suite: curvature scans of g and g' around the bump."""

import logging

from src.models.run_config import RunConfig
from src.models.run_report import WitnessSuiteResult
from src.observability.tracing import traced
from src.services.causality_suite import scenario_from_config
from src.services.perturbations import build_perturbation, resolve_bump
from src.witness.scan import ScanGrid
from src.witness.verdict import non_isometry_witness

logger = logging.getLogger(__name__)


@traced("witness_suite")
def run_witness_suite(config: RunConfig) -> WitnessSuiteResult:
    """Scan a box of half-width r_out around the bump and run the curvature witness."""
    scenario = scenario_from_config(config)
    spec, g_prime = build_perturbation(config, scenario)
    choice = resolve_bump(config, scenario.metric.dim)
    grid = ScanGrid.around(choice.center, choice.r_out, config.grid.scan_per_axis)
    verdict = non_isometry_witness(scenario.metric, g_prime, spec.cutoff, grid)
    logger.info("witness suite %s: %s", scenario.name, verdict.status.value)
    return WitnessSuiteResult(
        scenario=scenario.name, R_c=choice.R_c, verdict=verdict, passed=verdict.verdict
    )
