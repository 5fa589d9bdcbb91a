"""Smooth bump cutoffs chi used to glue a patch metric into a base metric."""

from collections.abc import Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.errors import ConfigError
from src.geometry.types import FloatArray


def smooth_step(s: ArrayLike) -> FloatArray:
    """C-infinity step: 1 for s <= 0, 0 for s >= 1, strictly decreasing in between.

    Built from the blend exp(-1/(1-s)) / (exp(-1/(1-s)) + exp(-1/s)).
    """
    sv = np.asarray(s, dtype=float)
    inner = (sv > 0.0) & (sv < 1.0)
    safe = np.where(inner, sv, 0.5)
    upper = np.exp(-1.0 / (1.0 - safe))
    lower = np.exp(-1.0 / safe)
    blend = upper / (upper + lower)
    return np.where(sv <= 0.0, 1.0, np.where(sv >= 1.0, 0.0, blend))


class BumpCutoff(BaseModel):
    """Radial bump chi(p) = smooth_step((|p - center| - r_in)/(r_out - r_in)).

    Distances are Euclidean in chart coordinates. A disabled cutoff is
    identically zero.

    Attributes:
        center: Centre of the bump
        inner_radius: chi = 1 on the closed ball of this radius
        outer_radius: chi = 0 outside the ball of this radius
        enabled: False gives chi = 0 everywhere
    """

    model_config = ConfigDict(frozen=True)

    center: tuple[float, ...] = Field(..., min_length=2)
    inner_radius: float
    outer_radius: float
    enabled: bool = True

    @model_validator(mode="after")
    def validate_radii(self) -> "BumpCutoff":
        if not 0.0 < self.inner_radius < self.outer_radius:
            raise ConfigError(
                f"need 0 < r_in < r_out, got r_in={self.inner_radius}, r_out={self.outer_radius}"
            )
        return self

    @property
    def dim(self) -> int:
        return len(self.center)

    def distance(self, x: ArrayLike) -> FloatArray:
        xs = np.asarray(x, dtype=float)
        return np.linalg.norm(xs - np.asarray(self.center), axis=-1)

    def __call__(self, x: ArrayLike) -> FloatArray:
        xs = np.asarray(x, dtype=float)
        if not self.enabled:
            return np.zeros(xs.shape[:-1])
        s = (self.distance(xs) - self.inner_radius) / (self.outer_radius - self.inner_radius)
        return smooth_step(s)

    def disabled(self) -> "BumpCutoff":
        return self.model_copy(update={"enabled": False})

    def support_grid(self, per_axis: int = 41) -> FloatArray:
        """Tensor grid over the bounding box of the support, restricted to chi > 0."""
        c = np.asarray(self.center)
        axes = [np.linspace(ci - self.outer_radius, ci + self.outer_radius, per_axis) for ci in c]
        mesh = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, len(c))
        return mesh[self(mesh) > 0.0]

    def core_mask(self, x: ArrayLike, inset: float = 0.0) -> NDArray[np.bool_]:
        """Points at distance <= r_in - inset from the centre, where chi = 1."""
        return self.distance(x) <= self.inner_radius - inset


def bump_cutoff(center: Sequence[float], r_in: float, r_out: float) -> BumpCutoff:
    """Build a bump cutoff.

    Raises:
        ConfigError: unless 0 < r_in < r_out
    """
    if not 0.0 < r_in < r_out:
        raise ConfigError(f"need 0 < r_in < r_out, got r_in={r_in}, r_out={r_out}")
    return BumpCutoff(center=tuple(float(c) for c in center), inner_radius=r_in, outer_radius=r_out)
