"""Suite results and the top-level run report."""

from typing import Literal

from pydantic import BaseModel, Field

from src.models.reports import (
    BoundaryTraceRecord,
    ComparisonReport,
    InvarianceVerdict,
    ReachabilityReport,
    WitnessVerdict,
)
from src.models.run_config import RunConfig


class CheckResult(BaseModel):
    """A scalar check of the form value <= bound."""

    name: str
    value: float
    bound: float
    passed: bool
    detail: str = ""


class CausalitySuiteResult(BaseModel):
    """Analytic checks, reachability scans and the perturbation spot-check of one scenario."""

    scenario: str
    checks: list[CheckResult] = Field(default_factory=list)
    scans: list[ReachabilityReport] = Field(default_factory=list)
    invariance: InvarianceVerdict | None = None
    passed: bool


class ConvergenceCheck(BaseModel):
    """Manufactured-solution errors of the wave solver across refinement levels."""

    nx: list[int]
    errors: list[float]
    ratios: list[float]
    passed: bool


class WaveSuiteResult(BaseModel):
    """Solver self-check and the g versus g' comparisons."""

    status: Literal["ran", "skipped"]
    message: str = ""
    convergence: ConvergenceCheck | None = None
    comparisons: list[ComparisonReport] = Field(default_factory=list)
    traces: list[BoundaryTraceRecord] = Field(default_factory=list)
    passed: bool


class WitnessSuiteResult(BaseModel):
    """Curvature witness for one scenario and patch radius."""

    scenario: str
    R_c: float
    verdict: WitnessVerdict
    passed: bool


class RunReport(BaseModel):
    """Everything a run produced, with the resolved configuration for provenance.

    ``timestamp`` is the only field that differs between repeated runs of the
    same configuration.
    """

    tool: str = "calderon-verify"
    timestamp: str
    config: RunConfig
    causality: CausalitySuiteResult | None = None
    waves: WaveSuiteResult | None = None
    witness: WitnessSuiteResult | None = None
    figures: list[str] = Field(default_factory=list)
    passed: bool
