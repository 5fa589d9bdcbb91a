"""Run configuration for the verification suites.

A run is described by one JSON document validated against ``RunConfig``.
CLI flags override individual fields, and the resolved configuration is
written into every report so a run can be repeated exactly.
"""

import math
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

ScenarioName = Literal["hyperboloid", "kruskal", "flrw"]
SuiteName = Literal["causality", "waves", "witness", "figures", "all"]


class GeometryParams(BaseModel):
    """Parameters of the background spacetime and cylinder.

    Only the parameters of the selected scenario are used.

    Attributes:
        a: Hyperboloid width, b(0) = a
        n: Spatial dimension of the hyperboloid scenario
        r_S: Schwarzschild radius
        r0: Radius of the Schwarzschild cylinder {r = r0}
        H: Expansion rate of the bouncing FLRW metric
        R_cylinder: Radius of the FLRW cylinder; None means pi/H + 0.5
    """

    model_config = ConfigDict(frozen=True)

    a: float = Field(2.0, gt=0.0, description="Hyperboloid width parameter")
    n: int = Field(1, ge=1, le=3, description="Spatial dimension (hyperboloid)")
    r_S: float = Field(1.0, gt=0.0, description="Schwarzschild radius")
    r0: float = Field(1.5, gt=0.0, description="Cylinder radius r0 > r_S")
    H: float = Field(1.0, gt=0.0, description="FLRW expansion rate")
    R_cylinder: float | None = Field(None, gt=0.0, description="FLRW cylinder radius > pi/H")

    @model_validator(mode="after")
    def validate_scenario_preconditions(self) -> "GeometryParams":
        """r0 > r_S and R_cylinder > pi/H."""
        if self.r0 <= self.r_S:
            raise ValueError(f"r0 must exceed r_S, got r0={self.r0}, r_S={self.r_S}")
        if self.R_cylinder is not None and self.R_cylinder <= math.pi / self.H:
            raise ValueError(f"R_cylinder must exceed pi/H = {math.pi / self.H:.6g}")
        return self


class BumpParams(BaseModel):
    """Cutoff and constant-curvature patch of the perturbation g'.

    Unset fields take the selected scenario's defaults.

    Attributes:
        center: Bump centre in ambient coordinates
        r_in: chi = 1 inside this radius
        r_out: chi = 0 outside this radius
        R_c: Curvature radius of the de Sitter patch
        pole: Pole time of the conformal patch; None selects the flat-slicing patch
    """

    model_config = ConfigDict(frozen=True)

    center: tuple[float, float] | None = Field(
        None, description="Bump centre (t, x); None: scenario default"
    )
    r_in: float | None = Field(None, gt=0.0)
    r_out: float | None = Field(None, gt=0.0)
    R_c: float | None = Field(None, gt=0.0, description="de Sitter curvature radius")
    pole: float | None = Field(None, description="Conformal de Sitter pole time")

    @model_validator(mode="after")
    def validate_radii(self) -> "BumpParams":
        if self.r_in is not None and self.r_out is not None and self.r_in >= self.r_out:
            raise ValueError(f"need r_in < r_out, got r_in={self.r_in}, r_out={self.r_out}")
        return self


class GridParams(BaseModel):
    """Wave-solver grids and the curvature scan window.

    Attributes:
        nx: Spatial nodes of the coarsest strip grid
        sts_nx: Spatial nodes of the coarsest ambient grid
        levels: Number of refinement levels
        t_range: Time range of the strip grid
        sts_t_range: Time range of the ambient grid
        x_half_width: Half width of the ambient grid
        scan_per_axis: Samples per axis of the curvature scan
    """

    model_config = ConfigDict(frozen=True)

    nx: int = Field(81, ge=16)
    sts_nx: int = Field(281, ge=16)
    levels: int = Field(3, ge=1, le=6)
    t_range: tuple[float, float] = (-1.0, 6.0)
    sts_t_range: tuple[float, float] = (-4.0, 6.0)
    x_half_width: float = Field(14.0, gt=0.0)
    scan_per_axis: int = Field(41, ge=3)

    @model_validator(mode="after")
    def validate_ranges(self) -> "GridParams":
        for name in ("t_range", "sts_t_range"):
            lo, hi = getattr(self, name)
            if hi <= lo:
                raise ValueError(f"{name} must be increasing, got ({lo}, {hi})")
        return self


class RayScanParams(BaseModel):
    """Seeded ray scans.

    Attributes:
        n_points: Number of sample points (and null rays) per scan
        seed: Seed of every random draw in the run
        tolerance: Relative and absolute integrator tolerance
        workers: Thread count for ray integration; left out of serialized reports
    """

    model_config = ConfigDict(frozen=True)

    n_points: int = Field(1000, ge=1, description="Rays per scan")
    seed: int = Field(42, ge=0)
    tolerance: float = Field(1e-10, gt=0.0, lt=1e-3)
    workers: int = Field(1, ge=1, exclude=True)


class RunConfig(BaseModel):
    """A complete, self-describing verification run.

    Attributes:
        scenario: Which counterexample to run
        suites: Suites to execute
        geometry: Background parameters
        bump: Perturbation parameters
        grid: Wave and scan grids
        rays: Ray-scan parameters
        output_dir: Directory receiving report.json and traces/
    """

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "examples": [
                {
                    "scenario": "hyperboloid",
                    "suites": ["causality", "waves", "witness"],
                    "geometry": {"a": 2.0, "n": 1},
                    "bump": {"center": [3.0, 0.0], "r_in": 0.25, "r_out": 0.5, "R_c": 1.0},
                    "grid": {"nx": 81, "levels": 3},
                    "rays": {"n_points": 1000, "seed": 42},
                    "output_dir": "output",
                },
                {
                    "scenario": "kruskal",
                    "suites": ["causality"],
                    "geometry": {"r_S": 1.0, "r0": 1.5},
                    "rays": {"n_points": 1000, "seed": 7},
                    "output_dir": "output/kruskal",
                },
            ]
        },
    )

    scenario: ScenarioName = "hyperboloid"
    suites: list[SuiteName] = Field(default_factory=lambda: ["all"], min_length=1)
    geometry: GeometryParams = Field(default_factory=GeometryParams)
    bump: BumpParams = Field(default_factory=BumpParams)
    grid: GridParams = Field(default_factory=GridParams)
    rays: RayScanParams = Field(default_factory=RayScanParams)
    output_dir: str = Field("output", min_length=1)

    @property
    def selected_suites(self) -> list[str]:
        """Suites in execution order, with "all" expanded."""
        order = ["causality", "waves", "witness", "figures"]
        if "all" in self.suites:
            return order
        return [s for s in order if s in self.suites]
