"""Distinguished open regions U inside cylinders, with seeded samplers."""

from collections.abc import Callable, Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray
from pydantic import BaseModel, ConfigDict, Field

from src.errors import ConfigError
from src.geometry.types import FloatArray

Indicator = Callable[[FloatArray], NDArray[np.bool_]]


class Region(BaseModel):
    """An open region with an indicator and a reproducible interior sampler.

    Attributes:
        dim: Spacetime dimension of the chart
        indicator: Batched membership test
        lower: Lower corner of a bounding box
        upper: Upper corner of a bounding box
        label: Name used in reports
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    dim: int = Field(..., ge=2)
    indicator: Indicator
    lower: tuple[float, ...]
    upper: tuple[float, ...]
    label: str = "region"

    def contains(self, x: ArrayLike) -> NDArray[np.bool_]:
        return np.asarray(self.indicator(np.asarray(x, dtype=float)), dtype=bool)

    def sample(self, count: int, seed: int) -> FloatArray:
        """Draw ``count`` interior points by rejection from the bounding box.

        The same seed always yields the same points.
        """
        rng = np.random.default_rng(seed)
        lo = np.asarray(self.lower, dtype=float)
        hi = np.asarray(self.upper, dtype=float)
        accepted: list[FloatArray] = []
        total = 0
        attempts = 0
        while total < count:
            batch = rng.uniform(lo, hi, size=(max(4 * (count - total), 64), self.dim))
            keep = batch[self.contains(batch)]
            accepted.append(keep)
            total += len(keep)
            attempts += 1
            if attempts > 1000:
                raise ConfigError(f"{self.label}: rejection sampler accepts too few points")
        if count == 0:
            return np.empty((0, self.dim))
        return np.concatenate(accepted)[:count]


def _spatial_norm(x: FloatArray) -> FloatArray:
    return np.linalg.norm(x[..., 1:], axis=-1)


def diamond_region(a: float, n: int = 1) -> Region:
    """Diamond U = {|t| + |x| < a/2}, unreachable from the hyperboloid boundary."""
    if a <= 0.0:
        raise ConfigError(f"a must be positive, got {a}")
    half = 0.5 * a
    return Region(
        dim=n + 1,
        indicator=lambda x: np.abs(x[..., 0]) + _spatial_norm(x) < half,
        lower=(-half,) * (n + 1),
        upper=(half,) * (n + 1),
        label=f"diamond-a{a:g}",
    )


def ball_region(center: Sequence[float], radius: float, label: str = "ball") -> Region:
    """Euclidean coordinate ball ||p - center|| < radius."""
    if radius <= 0.0:
        raise ConfigError(f"radius must be positive, got {radius}")
    c = np.asarray(center, dtype=float)
    return Region(
        dim=len(c),
        indicator=lambda x: np.linalg.norm(x - c, axis=-1) < radius,
        lower=tuple(c - radius),
        upper=tuple(c + radius),
        label=label,
    )


def future_wedge_region(a: float, center: Sequence[float], radius: float) -> Region:
    """Ball inside the wedge {|x| < a/2 + t} of the 1+1 hyperboloid cylinder.

    Every future causal curve from the wedge stays strictly inside the
    hyperboloid, while the past of the ball does meet the boundary.

    Raises:
        ConfigError: the ball is not contained in the wedge
    """
    c = np.asarray(center, dtype=float)
    gap = (0.5 * a + c[0] - float(np.linalg.norm(c[1:]))) / np.sqrt(2.0)
    if gap <= radius:
        raise ConfigError(
            f"ball at {tuple(c)} with radius {radius} is not inside the wedge |x| < a/2 + t"
        )
    return ball_region(c, radius, label=f"future-wedge-a{a:g}")


def past_wedge_region(a: float, center: Sequence[float], radius: float) -> Region:
    """Ball inside the wedge {|x| < a/2 - t}.

    Every past causal curve from the ball stays inside the hyperboloid.

    Raises:
        ConfigError: the ball is not contained in the wedge
    """
    c = np.asarray(center, dtype=float)
    gap = (0.5 * a - c[0] - float(np.linalg.norm(c[1:]))) / np.sqrt(2.0)
    if gap <= radius:
        raise ConfigError(
            f"ball at {tuple(c)} with radius {radius} is not inside the wedge |x| < a/2 - t"
        )
    return ball_region(c, radius, label=f"past-wedge-a{a:g}")


def flrw_future_region(H: float, R: float, n: int = 1) -> Region:
    """U = {|x| < eta + R - pi/H} in the conformal chart; its causal future misses |x| = R."""
    horizon = np.pi / H
    if R <= horizon:
        raise ConfigError(f"R must exceed pi/H = {horizon}, got {R}")

    def indicator(x: FloatArray) -> NDArray[np.bool_]:
        eta = x[..., 0]
        return (eta > 0.0) & (eta < horizon) & (_spatial_norm(x) < eta + R - horizon)

    return Region(
        dim=n + 1,
        indicator=indicator,
        lower=(0.0,) + (-R,) * n,
        upper=(horizon,) + (R,) * n,
        label="flrw-future-U",
    )


def flrw_past_region(H: float, R: float, n: int = 1) -> Region:
    """U' = {|x| < R - eta} in the conformal chart; its causal past misses |x| = R."""
    horizon = np.pi / H
    if R <= horizon:
        raise ConfigError(f"R must exceed pi/H = {horizon}, got {R}")

    def indicator(x: FloatArray) -> NDArray[np.bool_]:
        eta = x[..., 0]
        return (eta > 0.0) & (eta < horizon) & (_spatial_norm(x) < R - eta)

    return Region(
        dim=n + 1,
        indicator=indicator,
        lower=(0.0,) + (-R,) * n,
        upper=(horizon,) + (R,) * n,
        label="flrw-past-U'",
    )


def kruskal_hole_region(future: bool, w_max: float = 0.9) -> Region:
    """Black-hole (future) or white-hole (past) region {0 < T^2 - R^2 < w_max}."""
    if not 0.0 < w_max < 1.0:
        raise ConfigError(f"w_max must lie in (0, 1), got {w_max}")
    sign = 1.0 if future else -1.0

    def indicator(x: FloatArray) -> NDArray[np.bool_]:
        w = x[..., 0] ** 2 - x[..., 1] ** 2
        return (sign * x[..., 0] > 0.0) & (w > 0.0) & (w < w_max)

    t_hi = float(np.sqrt(w_max + 1.0))
    lower = (0.0, -1.0) if future else (-t_hi, -1.0)
    upper = (t_hi, 1.0) if future else (0.0, 1.0)
    return Region(
        dim=2,
        indicator=indicator,
        lower=lower,
        upper=upper,
        label="black-hole" if future else "white-hole",
    )
