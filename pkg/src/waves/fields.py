"""Wave fields, sources and boundary traces."""

from collections.abc import Callable
from typing import Literal

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.errors import DataError
from src.geometry.types import Evaluator, FloatArray
from src.waves.grid import WaveGrid


class WaveField(BaseModel):
    """Solution values on every node of a grid.

    Attributes:
        grid: The grid the field lives on
        values: Array of shape ``(nt, nx)``
        metric_label: Label of the metric the field solves the wave equation for
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    grid: WaveGrid
    values: np.ndarray
    metric_label: str

    @model_validator(mode="after")
    def validate_values(self) -> "WaveField":
        if self.values.shape != (self.grid.nt, self.grid.nx):
            raise DataError(f"field shape {self.values.shape} does not match grid")
        if not np.all(np.isfinite(self.values)):
            raise DataError("field has non-finite values")
        return self

    def sup_norm(self) -> float:
        return float(np.max(np.abs(self.values), initial=0.0))


class SourceSpec(BaseModel):
    """A compactly supported source term f.

    Attributes:
        f: Batched evaluator ``(..., 2) -> (...)``
        support: Bounding box ``((t_lo, t_hi), (x_lo, x_hi))`` outside which f vanishes
        label: Human-readable name
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    f: Evaluator
    support: tuple[tuple[float, float], tuple[float, float]]
    label: str = "source"

    def values(self, grid: WaveGrid) -> FloatArray:
        """f on the grid nodes, zero outside the bounding box."""
        pts = grid.points()
        (t_lo, t_hi), (x_lo, x_hi) = self.support
        t, x = pts[..., 0], pts[..., 1]
        inside = (t >= t_lo) & (t <= t_hi) & (x >= x_lo) & (x <= x_hi)
        out = np.zeros(pts.shape[:-1])
        if np.any(inside):
            out[inside] = np.asarray(self.f(pts[inside]), dtype=float)
        return out

    def scaled(self, factor: float) -> "SourceSpec":
        f = self.f
        label = f"{factor:g}*{self.label}"
        return self.model_copy(update={"f": lambda x: factor * f(x), "label": label})


class BoundaryTrace(BaseModel):
    """Values of u or of its inward normal derivative along one side of the strip.

    Attributes:
        side: -1 for xi = -1, +1 for xi = +1
        times: Grid times
        values: One value per time
        kind: Dirichlet data or Neumann trace
        normalization_residual: For Neumann traces, max |g(nu, nu) - 1| over the side
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    side: Literal[-1, 1]
    times: np.ndarray
    values: np.ndarray
    kind: Literal["Dirichlet", "Neumann"]
    normalization_residual: float | None = Field(default=None, ge=0.0)

    @model_validator(mode="after")
    def validate_lengths(self) -> "BoundaryTrace":
        if self.times.shape != self.values.shape or self.times.ndim != 1:
            raise DataError("trace times and values must be 1-d arrays of equal length")
        if self.kind == "Neumann" and self.normalization_residual is None:
            raise DataError("Neumann traces carry the normal normalization residual")
        return self


class BoundaryData(BaseModel):
    """Dirichlet data on both sides of the strip as functions of time.

    Both functions must vanish to second order where the data turn on.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    left: Callable[[FloatArray], FloatArray]
    right: Callable[[FloatArray], FloatArray]
    label: str = "boundary-data"

    def traces(self, grid: WaveGrid) -> tuple[BoundaryTrace, BoundaryTrace]:
        """Sample both sides on the grid times."""
        times = grid.times
        left = np.asarray(self.left(times), dtype=float)
        right = np.asarray(self.right(times), dtype=float)
        return (
            BoundaryTrace(side=-1, times=times, values=left, kind="Dirichlet"),
            BoundaryTrace(side=1, times=times, values=right, kind="Dirichlet"),
        )

    def scaled(self, factor: float) -> "BoundaryData":
        left, right = self.left, self.right
        return BoundaryData(
            left=lambda t: factor * left(t),
            right=lambda t: factor * right(t),
            label=f"{factor:g}*{self.label}",
        )


def smooth_pulse(t: ArrayLike, center: float, half_width: float) -> FloatArray:
    """C-infinity bump exp(1 - 1/(1 - s^2)) with s = (t - center)/half_width, peak 1.

    Vanishes to all orders at |s| = 1.
    """
    s = (np.asarray(t, dtype=float) - center) / half_width
    out = np.zeros_like(s)
    inside = np.abs(s) < 1.0
    out[inside] = np.exp(1.0 - 1.0 / (1.0 - s[inside] ** 2))
    return out


def smooth_pulse_derivative(t: ArrayLike, center: float, half_width: float) -> FloatArray:
    s = (np.asarray(t, dtype=float) - center) / half_width
    out = np.zeros_like(s)
    inside = np.abs(s) < 1.0
    si = s[inside]
    out[inside] = np.exp(1.0 - 1.0 / (1.0 - si**2)) * (-2.0 * si / (1.0 - si**2) ** 2) / half_width
    return out


def pulse_boundary_data(
    center: float, half_width: float, side: Literal[-1, 1] = -1, amplitude: float = 1.0
) -> BoundaryData:
    """Dirichlet data with a single pulse on one side and zero on the other."""

    def pulse(t: FloatArray) -> FloatArray:
        return amplitude * smooth_pulse(t, center, half_width)

    def zero(t: FloatArray) -> FloatArray:
        return np.zeros_like(np.asarray(t, dtype=float))

    left, right = (pulse, zero) if side == -1 else (zero, pulse)
    label = f"pulse(t={center:g},w={half_width:g},side={side})"
    return BoundaryData(left=left, right=right, label=label)


def bump_source(center: tuple[float, float], radius: float, amplitude: float = 1.0) -> SourceSpec:
    """Radial C-infinity bump source supported in the disc of the given radius."""
    c = np.asarray(center, dtype=float)

    def f(x: FloatArray) -> FloatArray:
        r = np.linalg.norm(np.asarray(x, dtype=float) - c, axis=-1)
        return amplitude * smooth_pulse(r, 0.0, radius)

    return SourceSpec(
        f=f,
        support=((c[0] - radius, c[0] + radius), (c[1] - radius, c[1] + radius)),
        label=f"bump({c[0]:g},{c[1]:g};{radius:g})",
    )
