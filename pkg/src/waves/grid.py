"""Uniform space-time grids for the 1+1 wave solver and their CFL timestep."""

import math
from collections.abc import Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.errors import DomainError, GridError, SignatureError
from src.geometry.types import ChartedMetric, FloatArray

CFL_SAFETY = 0.5


class WaveGrid(BaseModel):
    """Uniform grid over [t0, t1] x [x0, x1] with nt time levels and nx nodes.

    Attributes:
        chart: Label of the chart the grid lives in
        t_range: Time interval
        x_range: Spatial interval
        nt: Number of time levels (at least 3 for the three-level scheme)
        nx: Number of spatial nodes
    """

    model_config = ConfigDict(frozen=True)

    chart: str = "t,x"
    t_range: tuple[float, float]
    x_range: tuple[float, float]
    nt: int = Field(..., ge=3)
    nx: int = Field(..., ge=16)

    @model_validator(mode="after")
    def validate_ranges(self) -> "WaveGrid":
        if not self.t_range[1] > self.t_range[0] or not self.x_range[1] > self.x_range[0]:
            raise GridError(f"empty grid ranges t={self.t_range}, x={self.x_range}")
        return self

    @property
    def dt(self) -> float:
        return (self.t_range[1] - self.t_range[0]) / (self.nt - 1)

    @property
    def dx(self) -> float:
        return (self.x_range[1] - self.x_range[0]) / (self.nx - 1)

    @property
    def times(self) -> FloatArray:
        return np.linspace(self.t_range[0], self.t_range[1], self.nt)

    @property
    def xs(self) -> FloatArray:
        return np.linspace(self.x_range[0], self.x_range[1], self.nx)

    def points(self) -> FloatArray:
        """All grid nodes, shape ``(nt, nx, 2)``."""
        T, X = np.meshgrid(self.times, self.xs, indexing="ij")
        return np.stack([T, X], axis=-1)

    def refined(self) -> "WaveGrid":
        """The grid with both spacings halved."""
        return self.model_copy(update={"nt": 2 * self.nt - 1, "nx": 2 * self.nx - 1})

    @classmethod
    def for_metrics(
        cls,
        metrics: Sequence[ChartedMetric],
        t_range: tuple[float, float],
        x_range: tuple[float, float],
        nx: int,
        chart: str = "t,x",
        safety: float = CFL_SAFETY,
    ) -> "WaveGrid":
        """Smallest-nt grid whose timestep satisfies the CFL certificate of every metric."""
        probe = cls(chart=chart, t_range=t_range, x_range=x_range, nt=max(nx, 257), nx=nx)
        c_max = max(characteristic_speed(m, probe) for m in metrics)
        dt_max = safety * probe.dx / c_max
        nt = math.ceil((t_range[1] - t_range[0]) / dt_max - 1e-9) + 1
        return cls(chart=chart, t_range=t_range, x_range=x_range, nt=max(nt, 3), nx=nx)


def null_speeds(g: FloatArray) -> tuple[FloatArray, FloatArray]:
    """Both roots c of g_tt + 2 g_tx c + g_xx c^2 = 0 for a batch of 2x2 metrics.

    Raises:
        SignatureError: the roots are complex or g_xx <= 0
    """
    gtt, gtx, gxx = g[..., 0, 0], g[..., 0, 1], g[..., 1, 1]
    disc = gtx * gtx - gtt * gxx
    if np.any(disc < 0.0) or np.any(gxx <= 0.0):
        raise SignatureError("metric has no real null directions on the grid")
    root = np.sqrt(disc)
    return (-gtx - root) / gxx, (-gtx + root) / gxx


def characteristic_speed(metric: ChartedMetric, grid: WaveGrid) -> float:
    """Largest |dx/dt| of a null direction over the grid nodes."""
    if metric.dim != 2:
        raise GridError("the wave solver works in 1+1 dimensions")
    pts = grid.points()
    if not np.all(metric.in_domain(pts)):
        raise DomainError(f"{metric.label}: grid leaves the chart domain")
    g = np.asarray(metric.components(pts), dtype=float)
    lo, hi = null_speeds(g)
    return float(np.max(np.maximum(np.abs(lo), np.abs(hi))))


def cfl_timestep(metric: ChartedMetric, grid: WaveGrid, safety: float = CFL_SAFETY) -> float:
    """CFL timestep safety * dx / c_max over the grid.

    Raises:
        SignatureError: complex null speeds somewhere on the grid
    """
    return safety * grid.dx / characteristic_speed(metric, grid)
