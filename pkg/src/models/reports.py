"""Report models written by the verification suites.

Reports are pydantic models so they serialize to JSON deterministically and
publish a JSON schema. Arrays are stored as plain lists of floats.
"""

from enum import Enum

from pydantic import BaseModel, Field, model_validator


class Direction(str, Enum):
    """Time direction of a causal scan."""

    FUTURE = "Future"
    PAST = "Past"


class CertificateSummary(BaseModel):
    """Aggregate of a per-ray analytic certificate of the form value < bound."""

    name: str
    value: float | None = Field(
        None, description="Largest per-ray value (None if never applicable)"
    )
    bound: float
    holds: bool


class RayOutcome(BaseModel):
    """Outcome of one ray of a reachability scan."""

    index: int = Field(..., ge=0)
    kind: str = Field(..., description="'null' or 'timelike'")
    start: list[float]
    tangent: list[float]
    end: list[float]
    termination: str
    hit: bool
    max_clearance: float
    relative_drift: float
    certificate_value: float | None = None


class WitnessPath(BaseModel):
    """A sampled ray kept as evidence, exportable to CSV."""

    label: str
    coord_names: list[str]
    s: list[float]
    coords: list[list[float]]
    clearance: list[float]


class ReachabilityReport(BaseModel):
    """Sampled verdict on whether the causal future or past of U meets the boundary.

    ``min_boundary_clearance`` is the largest clearance value seen along any
    ray: negative means every ray stayed strictly inside the cylinder.
    """

    scenario: str
    metric: str
    cylinder: str
    region: str
    direction: Direction
    rays_total: int = Field(..., ge=0)
    rays_hit_boundary: int = Field(..., ge=0)
    min_boundary_clearance: float
    certificate: CertificateSummary | None = None
    outcomes: list[RayOutcome] = Field(default_factory=list)
    witness_paths: list[WitnessPath] = Field(default_factory=list)
    seed: int

    @model_validator(mode="after")
    def validate_counts(self) -> "ReachabilityReport":
        """Counts agree with outcomes and hits agree with the clearance sign."""
        if self.rays_hit_boundary > self.rays_total:
            raise ValueError("more boundary hits than rays")
        if self.outcomes:
            if len(self.outcomes) != self.rays_total:
                raise ValueError("rays_total does not match the number of outcomes")
            if sum(o.hit for o in self.outcomes) != self.rays_hit_boundary:
                raise ValueError("rays_hit_boundary does not match outcomes")
        if self.rays_total and (self.rays_hit_boundary == 0) != (self.min_boundary_clearance < 0.0):
            raise ValueError("hit count and clearance sign disagree")
        return self

    @property
    def confined(self) -> bool:
        """No ray reached the boundary and the certificate, if any, holds."""
        cert_ok = self.certificate is None or self.certificate.holds
        return self.rays_hit_boundary == 0 and cert_ok


class InvarianceVerdict(BaseModel):
    """Comparison of reachability scans under g and the perturbed g'."""

    scenario: str
    direction: Direction
    support_in_region: bool
    identical_hits: bool = Field(..., description="Per-ray hit/no-hit outcomes agree")
    identical_verdict: bool
    max_end_difference: float = Field(..., ge=0.0)
    max_clearance_difference: float = Field(..., ge=0.0)
    report_g: ReachabilityReport
    report_g_prime: ReachabilityReport

    @property
    def verdict(self) -> bool:
        return self.support_in_region and self.identical_hits and self.identical_verdict


class BoundaryTraceRecord(BaseModel):
    """A boundary trace stored as lists for JSON/CSV export."""

    side: int
    kind: str
    times: list[float]
    values: list[float]


class ComparisonLevel(BaseModel):
    """Differences between g and g' at one grid resolution."""

    nt: int
    nx: int
    dt: float
    dx: float
    d_ext: float | None = None
    d_bdy: float | None = None
    d_int: float
    reference_norm: float = Field(
        ..., description="Sup norm of the g data the differences compare against"
    )


class ComparisonReport(BaseModel):
    """Boundary-data comparison of g and g' across refinement levels."""

    scenario: str
    mode: str = Field(..., description="'dn' or 'sts'")
    levels: list[ComparisonLevel]
    d_ext: float | None = None
    d_bdy: float | None = None
    d_int: float
    ratios_ext: list[float | None] = Field(default_factory=list)
    ratios_bdy: list[float | None] = Field(default_factory=list)
    roundoff_floor: float
    seeds: list[int] = Field(default_factory=list)
    passed: bool


class WitnessStatus(str, Enum):
    """Outcome of the curvature witness."""

    NON_ISOMETRIC = "NonIsometric"
    INCONCLUSIVE = "Inconclusive"
    NOT_APPLICABLE = "NotApplicable"


class WitnessVerdict(BaseModel):
    """Scalar-curvature critical-value witness for non-isometry of g and g'.

    ``verdict`` is true iff the curvature is constant on the core of
    {chi = 1} and the value c is not a near-critical value of S_g.
    """

    status: WitnessStatus
    c: float | None = None
    constancy_residual: float | None = None
    regularity_margin: float | None = Field(
        None, description="min |grad S_g| over the delta band; None if the band is empty"
    )
    band_points: int = 0
    delta: float
    eps0: float
    tol_c: float
    window: list[list[float]] = Field(default_factory=list, description="Scanned coordinate box")
    verdict: bool
    message: str = ""

    @model_validator(mode="after")
    def validate_verdict(self) -> "WitnessVerdict":
        """The verdict is consistent with the status."""
        if self.verdict != (self.status == WitnessStatus.NON_ISOMETRIC):
            raise ValueError("verdict must be true exactly for NonIsometric")
        return self
