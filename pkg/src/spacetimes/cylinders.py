"""Cylinder domains M = {f <= 0} with timelike boundary {f = 0}.

Besides the boundary-defining function f, each cylinder carries a
``clearance`` function that is negative on the whole interior and vanishes
exactly on the boundary. For smooth f the two coincide; the hyperboloid's f
also vanishes at the kink x = 0, t = 0, so its clearance is |x| - b(t).
"""

from collections.abc import Callable

import numpy as np
from numpy.typing import ArrayLike, NDArray
from pydantic import BaseModel, ConfigDict, Field

from src.errors import ConfigError
from src.geometry.metric import pullback_metric
from src.geometry.types import ChartedMetric, ChartMap, Evaluator, FloatArray
from src.spacetimes.kruskal import kruskal_r_from_w

BoundarySampler = Callable[[int, int], FloatArray]


class CylinderDomain(BaseModel):
    """A cylinder given by a boundary-defining function.

    Attributes:
        dim: Spacetime dimension of the chart
        f: Batched boundary-defining function, M = {f <= 0}
        df: Batched differential of f, shape ``(..., d)``
        clearance: Batched function negative inside M and zero on the boundary
        df_defined: Batched mask, False where df has no value (kinks)
        boundary_sampler: ``(n, seed) -> (n, d)`` points on the boundary
        label: Name used in reports
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    dim: int = Field(..., ge=2)
    f: Evaluator
    df: Evaluator
    clearance: Evaluator | None = None
    df_defined: Callable[[FloatArray], NDArray[np.bool_]] | None = None
    boundary_sampler: BoundarySampler | None = None
    label: str = "cylinder"

    def value(self, x: ArrayLike) -> FloatArray:
        return np.asarray(self.f(np.asarray(x, dtype=float)), dtype=float)

    def gradient(self, x: ArrayLike) -> FloatArray:
        return np.asarray(self.df(np.asarray(x, dtype=float)), dtype=float)

    def clearance_at(self, x: ArrayLike) -> FloatArray:
        xs = np.asarray(x, dtype=float)
        fn = self.clearance if self.clearance is not None else self.f
        return np.asarray(fn(xs), dtype=float)

    def contains(self, x: ArrayLike) -> NDArray[np.bool_]:
        return self.clearance_at(x) <= 0.0

    def sample_boundary(self, n: int, seed: int) -> FloatArray:
        if self.boundary_sampler is None:
            raise ConfigError(f"{self.label}: no boundary sampler")
        return self.boundary_sampler(n, seed)


def _spatial_norm(x: FloatArray) -> FloatArray:
    return np.linalg.norm(x[..., 1:], axis=-1)


def _unit_directions(rng: np.random.Generator, count: int, n: int) -> FloatArray:
    if n == 1:
        return rng.choice([-1.0, 1.0], size=(count, 1))
    raw = rng.standard_normal((count, n))
    return raw / np.linalg.norm(raw, axis=-1, keepdims=True)


def hyperboloid_half_width(a: float, t: ArrayLike) -> FloatArray:
    """Spatial radius b(t) = (a + sqrt(a^2 + 4t^2))/2 of the hyperboloid boundary."""
    tv = np.asarray(t, dtype=float)
    return 0.5 * (a + np.sqrt(a * a + 4.0 * tv * tv))


def hyperboloid_half_width_rate(a: float, t: ArrayLike) -> FloatArray:
    """Time derivative b'(t) = 2t / sqrt(a^2 + 4t^2)."""
    tv = np.asarray(t, dtype=float)
    return 2.0 * tv / np.sqrt(a * a + 4.0 * tv * tv)


def hyperboloid_cylinder(a: float, n: int = 1, sample_time: float | None = None) -> CylinderDomain:
    """Hyperboloidal cylinder in Minkowski space, f = |x|^2 - a|x| - t^2.

    At x = 0 the continuous extension f(t, 0) = -t^2 is used and df is
    reported as NaN with ``df_defined`` False.

    Args:
        a: Width parameter, b(0) = a
        n: Spatial dimension
        sample_time: Boundary samples are drawn with |t| <= sample_time (default 3a)

    Raises:
        ConfigError: a <= 0 or n < 1
    """
    if not np.isfinite(a) or a <= 0.0:
        raise ConfigError(f"a must be positive, got {a}")
    if n < 1:
        raise ConfigError(f"spatial dimension must be >= 1, got {n}")
    horizon = 3.0 * a if sample_time is None else sample_time

    def f(x: FloatArray) -> FloatArray:
        rho = _spatial_norm(x)
        return rho * rho - a * rho - x[..., 0] ** 2

    def df(x: FloatArray) -> FloatArray:
        rho = _spatial_norm(x)
        out = np.empty(x.shape)
        out[..., 0] = -2.0 * x[..., 0]
        with np.errstate(invalid="ignore", divide="ignore"):
            radial = np.where(rho > 0.0, (2.0 * rho - a) / rho, np.nan)
        out[..., 1:] = radial[..., None] * x[..., 1:]
        return out

    def clearance(x: FloatArray) -> FloatArray:
        return _spatial_norm(x) - hyperboloid_half_width(a, x[..., 0])

    def sampler(count: int, seed: int) -> FloatArray:
        rng = np.random.default_rng(seed)
        t = rng.uniform(-horizon, horizon, size=count)
        dirs = _unit_directions(rng, count, n)
        pts = np.empty((count, n + 1))
        pts[:, 0] = t
        pts[:, 1:] = hyperboloid_half_width(a, t)[:, None] * dirs
        return pts

    return CylinderDomain(
        dim=n + 1,
        f=f,
        df=df,
        clearance=clearance,
        df_defined=lambda x: _spatial_norm(x) > 0.0,
        boundary_sampler=sampler,
        label=f"hyperboloid-a{a:g}",
    )


def slab_cylinder(half_width: float = 1.0, n: int = 1, sample_time: float = 5.0) -> CylinderDomain:
    """Straight cylinder f = |x| - half_width in Minkowski space (df undefined at x = 0)."""
    if half_width <= 0.0:
        raise ConfigError(f"half_width must be positive, got {half_width}")

    def df(x: FloatArray) -> FloatArray:
        rho = _spatial_norm(x)
        out = np.zeros(x.shape)
        with np.errstate(invalid="ignore", divide="ignore"):
            out[..., 1:] = x[..., 1:] / np.where(rho > 0.0, rho, np.nan)[..., None]
        return out

    def sampler(count: int, seed: int) -> FloatArray:
        rng = np.random.default_rng(seed)
        pts = np.empty((count, n + 1))
        pts[:, 0] = rng.uniform(-sample_time, sample_time, size=count)
        pts[:, 1:] = half_width * _unit_directions(rng, count, n)
        return pts

    return CylinderDomain(
        dim=n + 1,
        f=lambda x: _spatial_norm(x) - half_width,
        df=df,
        df_defined=lambda x: _spatial_norm(x) > 0.0,
        boundary_sampler=sampler,
        label=f"slab-{half_width:g}",
    )


def flrw_cylinder(R: float, H: float, n: int = 1) -> CylinderDomain:
    """Cylinder |x| <= R of the bounce cosmology, in the conformal chart (eta, x)."""
    if R <= 0.0 or H <= 0.0:
        raise ConfigError(f"R and H must be positive, got R={R}, H={H}")

    def df(x: FloatArray) -> FloatArray:
        out = 2.0 * np.array(x, dtype=float, copy=True)
        out[..., 0] = 0.0
        return out

    def sampler(count: int, seed: int) -> FloatArray:
        rng = np.random.default_rng(seed)
        pts = np.empty((count, n + 1))
        pts[:, 0] = rng.uniform(0.05, 0.95, size=count) * np.pi / H
        pts[:, 1:] = R * _unit_directions(rng, count, n)
        return pts

    return CylinderDomain(
        dim=n + 1,
        f=lambda x: _spatial_norm(x) ** 2 - R * R,
        df=df,
        boundary_sampler=sampler,
        label=f"flrw-cylinder-R{R:g}",
    )


def schwarzschild_cylinder(r_S: float, r0: float, sample_time: float = 2.0) -> CylinderDomain:
    """Cylinder {r <= r0} in the Kruskal plane, f = r(T, R) - r0.

    The differential comes from implicit differentiation,
    dr = -(2 r_S^2 / (r exp(r/r_S))) (T dT - R dR). The boundary has two
    components, R = +-sqrt(T^2 - w0) with w0 = (1 - r0/r_S) exp(r0/r_S).

    Raises:
        ConfigError: r0 <= r_S
    """
    if not r0 > r_S > 0.0:
        raise ConfigError(f"need r0 > r_S > 0, got r0={r0}, r_S={r_S}")
    w0 = (1.0 - r0 / r_S) * np.exp(r0 / r_S)

    def radius(x: FloatArray) -> FloatArray:
        return kruskal_r_from_w(x[..., 0] ** 2 - x[..., 1] ** 2, r_S)

    def df(x: FloatArray) -> FloatArray:
        r = radius(x)
        coeff = -2.0 * r_S**2 / (r * np.exp(r / r_S))
        out = np.empty(x.shape)
        out[..., 0] = coeff * x[..., 0]
        out[..., 1] = -coeff * x[..., 1]
        return out

    def sampler(count: int, seed: int) -> FloatArray:
        rng = np.random.default_rng(seed)
        T = rng.uniform(-sample_time, sample_time, size=count)
        side = rng.choice([-1.0, 1.0], size=count)
        return np.column_stack([T, side * np.sqrt(T * T - w0)])

    return CylinderDomain(
        dim=2,
        f=lambda x: radius(x) - r0,
        df=df,
        boundary_sampler=sampler,
        label=f"schwarzschild-cylinder-r0{r0:g}",
    )


def strip_chart(
    b: Callable[[FloatArray], FloatArray], db: Callable[[FloatArray], FloatArray]
) -> ChartMap:
    """Chart map (t, xi) -> (t, xi b(t)) that straightens a 1+1 cylinder to xi in [-1, 1]."""

    def forward(q: FloatArray) -> FloatArray:
        out = np.array(q, dtype=float, copy=True)
        out[..., 1] = q[..., 1] * b(q[..., 0])
        return out

    def jacobian(q: FloatArray) -> FloatArray:
        jac = np.zeros(q.shape + (2,))
        jac[..., 0, 0] = 1.0
        jac[..., 1, 0] = q[..., 1] * db(q[..., 0])
        jac[..., 1, 1] = b(q[..., 0])
        return jac

    def inverse(x: FloatArray) -> FloatArray:
        out = np.array(x, dtype=float, copy=True)
        out[..., 1] = x[..., 1] / b(x[..., 0])
        return out

    return ChartMap(
        forward=forward,
        jacobian=jacobian,
        inverse=inverse,
        coord_names=("t", "xi"),
        label="strip",
    )


def hyperboloid_strip_chart(a: float) -> ChartMap:
    """Strip chart of the 1+1 hyperboloid cylinder, x = xi b(t)."""
    if a <= 0.0:
        raise ConfigError(f"a must be positive, got {a}")
    return strip_chart(
        lambda t: hyperboloid_half_width(a, t), lambda t: hyperboloid_half_width_rate(a, t)
    )


def slab_strip_chart(half_width: float = 1.0) -> ChartMap:
    """Strip chart of a straight slab, x = xi * half_width."""
    return strip_chart(
        lambda t: np.full(np.shape(t), half_width), lambda t: np.zeros(np.shape(t))
    )


def hyperboloid_strip_metric(a: float, base: ChartedMetric) -> ChartedMetric:
    """An ambient 1+1 metric pulled back to the hyperboloid strip chart."""
    return pullback_metric(hyperboloid_strip_chart(a), base, label=f"{base.label}|strip-a{a:g}")
