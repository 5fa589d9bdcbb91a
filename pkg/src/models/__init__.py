"""Pydantic models for run configuration and reports."""

from src.models.reports import (
    BoundaryTraceRecord,
    CertificateSummary,
    ComparisonLevel,
    ComparisonReport,
    Direction,
    InvarianceVerdict,
    RayOutcome,
    ReachabilityReport,
    WitnessPath,
    WitnessStatus,
    WitnessVerdict,
)
from src.models.run_config import BumpParams, GeometryParams, GridParams, RayScanParams, RunConfig
from src.models.run_report import (
    CausalitySuiteResult,
    CheckResult,
    ConvergenceCheck,
    RunReport,
    WaveSuiteResult,
    WitnessSuiteResult,
)
