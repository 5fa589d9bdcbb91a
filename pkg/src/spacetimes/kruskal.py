"""Radial Kruskal chart of the maximally extended Schwarzschild spacetime.

The angular sector is suppressed: the chart is the (T, R) plane with metric
(4 r_S^3 / r) exp(-r/r_S) (-dT^2 + dR^2), where r is defined implicitly by
(1 - r/r_S) exp(r/r_S) = T^2 - R^2. Radial null rays are the 45 degree lines
of this plane because the conformal factor does not bend null directions.
"""

from typing import Any

import numpy as np
from numpy.typing import ArrayLike
from scipy.special import lambertw

from src.errors import ConfigError, DomainError
from src.geometry.types import ChartedMetric, FloatArray, as_coords

RESIDUAL_TOLERANCE = 1e-12


def _check_radius(r_S: float) -> None:
    if not np.isfinite(r_S) or r_S <= 0.0:
        raise ConfigError(f"r_S must be positive, got {r_S}")


def kruskal_residual(r: ArrayLike, w: ArrayLike, r_S: float) -> FloatArray:
    """Relative residual of (1 - r/r_S) exp(r/r_S) = w, scaled by max(1, |w|)."""
    y = np.asarray(r, dtype=float) / r_S
    wv = np.asarray(w, dtype=float)
    return np.abs((1.0 - y) * np.exp(y) - wv) / np.maximum(1.0, np.abs(wv))


def kruskal_r_from_w(w: ArrayLike, r_S: float) -> FloatArray:
    """Areal radius r as a function of w = T^2 - R^2.

    Closed form r = r_S (1 + W0(-w/e)) with the principal Lambert branch,
    polished by two Newton steps on the defining relation.

    Raises:
        DomainError: w >= 1 (at or beyond the singularity)
    """
    _check_radius(r_S)
    wv = np.asarray(w, dtype=float)
    if np.any(~np.isfinite(wv)) or np.any(wv >= 1.0):
        raise DomainError("T^2 - R^2 must be < 1 (singularity at r = 0)")
    y = 1.0 + np.real(lambertw(-wv / np.e, 0))
    for _ in range(2):
        ey = np.exp(y)
        slope = -y * ey
        step = np.where(y > 1e-8, ((1.0 - y) * ey - wv) / np.where(y > 1e-8, slope, 1.0), 0.0)
        y = y - step
    return r_S * y


def kruskal_r(T: ArrayLike, R: ArrayLike, r_S: float) -> Any:
    """Areal radius at Kruskal coordinates (T, R).

    Args:
        T: Kruskal time (scalar or array)
        R: Kruskal radial coordinate, same shape as T
        r_S: Schwarzschild radius

    Returns:
        r > 0, a float for scalar input

    Raises:
        DomainError: T^2 - R^2 >= 1
    """
    Tv = np.asarray(T, dtype=float)
    Rv = np.asarray(R, dtype=float)
    r = kruskal_r_from_w(Tv * Tv - Rv * Rv, r_S)
    return float(r) if np.ndim(r) == 0 else r


def kruskal_metric(r_S: float) -> ChartedMetric:
    """Kruskal plane metric with exact first derivatives.

    The chart edge is the curvature singularity T^2 - R^2 = 1.
    """
    _check_radius(r_S)

    def radius(x: FloatArray) -> FloatArray:
        return kruskal_r_from_w(x[..., 0] ** 2 - x[..., 1] ** 2, r_S)

    def factor(r: FloatArray) -> FloatArray:
        return 4.0 * r_S**3 * np.exp(-r / r_S) / r

    def components(x: FloatArray) -> FloatArray:
        omega = factor(radius(x))
        g = np.zeros(x.shape + (2,))
        g[..., 0, 0] = -omega
        g[..., 1, 1] = omega
        return g

    def derivatives(x: FloatArray) -> FloatArray:
        r = radius(x)
        omega = factor(r)
        domega_dr = -omega * (1.0 / r_S + 1.0 / r)
        dr_coeff = -2.0 * r_S**2 / (r * np.exp(r / r_S))
        dr_dT = dr_coeff * x[..., 0]
        dr_dR = -dr_coeff * x[..., 1]
        dg = np.zeros(x.shape + (2, 2))
        for lam, dr in ((0, dr_dT), (1, dr_dR)):
            dg[..., lam, 0, 0] = -domega_dr * dr
            dg[..., lam, 1, 1] = domega_dr * dr
        return dg

    def orientation(x: FloatArray) -> FloatArray:
        out = np.zeros(x.shape)
        out[..., 0] = 1.0
        return out

    return ChartedMetric(
        dim=2,
        coord_names=("T", "R"),
        components=components,
        orientation=orientation,
        derivatives=derivatives,
        domain_margin=lambda x: 1.0 - (x[..., 0] ** 2 - x[..., 1] ** 2),
        edge_kind="singularity",
        label=f"kruskal-rS{r_S:g}",
    )


def conformal_factor(r: float, r_S: float) -> float:
    """Kruskal conformal factor 4 r_S^3 exp(-r/r_S) / r."""
    return float(4.0 * r_S**3 * np.exp(-r / r_S) / r)


def black_hole(p: Any) -> bool:
    """True inside the black-hole region {r < r_S, T > 0}."""
    T, R = as_coords(p)[:2]
    return bool(T * T - R * R > 0.0 and T > 0.0)


def white_hole(p: Any) -> bool:
    """True inside the white-hole region {r < r_S, T < 0}."""
    T, R = as_coords(p)[:2]
    return bool(T * T - R * R > 0.0 and T < 0.0)


def schwarzschild_to_kruskal(t: ArrayLike, r: ArrayLike, r_S: float) -> tuple[Any, Any]:
    """Map exterior Schwarzschild (t, r) to Kruskal (T, R) on the right exterior.

    Uses the null coordinates u = -sqrt(r/r_S - 1) exp((r - t)/(2 r_S)) and
    v = sqrt(r/r_S - 1) exp((r + t)/(2 r_S)), T = (v + u)/2, R = (v - u)/2.

    Raises:
        DomainError: r <= r_S
    """
    _check_radius(r_S)
    tv = np.asarray(t, dtype=float)
    rv = np.asarray(r, dtype=float)
    if np.any(rv <= r_S):
        raise DomainError("schwarzschild_to_kruskal needs r > r_S (exterior patch)")
    root = np.sqrt(rv / r_S - 1.0)
    u = -root * np.exp((rv - tv) / (2.0 * r_S))
    v = root * np.exp((rv + tv) / (2.0 * r_S))
    T = 0.5 * (v + u)
    R = 0.5 * (v - u)
    if np.ndim(T) == 0:
        return float(T), float(R)
    return T, R


def kruskal_to_schwarzschild(T: ArrayLike, R: ArrayLike, r_S: float) -> tuple[Any, Any]:
    """Inverse of ``schwarzschild_to_kruskal`` on the right exterior R > |T|.

    Raises:
        DomainError: the point is not in the right exterior
    """
    Tv = np.asarray(T, dtype=float)
    Rv = np.asarray(R, dtype=float)
    if np.any(Rv <= np.abs(Tv)):
        raise DomainError("kruskal_to_schwarzschild needs R > |T| (right exterior)")
    r = kruskal_r_from_w(Tv * Tv - Rv * Rv, r_S)
    t = 2.0 * r_S * np.arctanh(Tv / Rv)
    if np.ndim(t) == 0:
        return float(t), float(r)
    return t, r
