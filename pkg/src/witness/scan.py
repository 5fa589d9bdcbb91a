"""Scalar curvature sampled on a rectangular coordinate window."""

from collections.abc import Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.errors import DataError, GridError
from src.geometry.curvature import DEFAULT_STEP, scalar_curvature_batch
from src.geometry.types import ChartedMetric, FloatArray
from src.observability.tracing import traced


class ScanGrid(BaseModel):
    """Tensor grid over the box [lower, upper] with ``per_axis`` samples on each axis."""

    model_config = ConfigDict(frozen=True)

    lower: tuple[float, ...] = Field(..., min_length=2)
    upper: tuple[float, ...] = Field(..., min_length=2)
    per_axis: int = Field(41, ge=3)

    @model_validator(mode="after")
    def validate_box(self) -> "ScanGrid":
        if len(self.lower) != len(self.upper):
            raise GridError("lower and upper corners differ in dimension")
        if any(hi <= lo for lo, hi in zip(self.lower, self.upper, strict=True)):
            raise GridError(f"empty scan box {self.lower} .. {self.upper}")
        return self

    @classmethod
    def around(cls, center: Sequence[float], half_width: float, per_axis: int = 41) -> "ScanGrid":
        c = [float(v) for v in center]
        return cls(
            lower=tuple(v - half_width for v in c),
            upper=tuple(v + half_width for v in c),
            per_axis=per_axis,
        )

    @property
    def dim(self) -> int:
        return len(self.lower)

    @property
    def spacing(self) -> tuple[float, ...]:
        bounds = zip(self.lower, self.upper, strict=True)
        return tuple((hi - lo) / (self.per_axis - 1) for lo, hi in bounds)

    def points(self) -> FloatArray:
        """Grid nodes, shape ``(per_axis, ..., per_axis, dim)``."""
        bounds = zip(self.lower, self.upper, strict=True)
        axes = [np.linspace(lo, hi, self.per_axis) for lo, hi in bounds]
        return np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1)


class CurvatureScan(BaseModel):
    """S and |grad S| on the nodes of a scan grid."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    grid: ScanGrid
    points: np.ndarray
    values: np.ndarray
    gradient_norm: np.ndarray
    label: str

    @model_validator(mode="after")
    def validate_arrays(self) -> "CurvatureScan":
        shape = self.points.shape[:-1]
        if self.values.shape != shape or self.gradient_norm.shape != shape:
            raise DataError("scan arrays do not match the grid")
        if not (np.all(np.isfinite(self.values)) and np.all(np.isfinite(self.gradient_norm))):
            raise DataError(f"{self.label}: non-finite scalar curvature")
        return self


@traced("curvature_scan")
def curvature_scan(metric: ChartedMetric, grid: ScanGrid, h: float = DEFAULT_STEP) -> CurvatureScan:
    """Scalar curvature on every grid node and the norm of its grid gradient.

    The gradient uses second-order central differences of the sampled field
    (one-sided at the box faces) and the coordinate Euclidean norm.

    Raises:
        DomainError: the grid or a difference stencil leaves the chart domain
        GridError: the grid dimension does not match the metric
    """
    if grid.dim != metric.dim:
        raise GridError(f"{metric.label}: scan grid has dimension {grid.dim}, metric {metric.dim}")
    pts = grid.points()
    flat = pts.reshape(-1, metric.dim)
    values = scalar_curvature_batch(metric, flat, h).reshape(pts.shape[:-1])
    grads = np.gradient(values, *grid.spacing, edge_order=2)
    norm = np.sqrt(sum(gr * gr for gr in grads))
    return CurvatureScan(
        grid=grid, points=pts, values=values, gradient_norm=np.asarray(norm), label=metric.label
    )
