"""Christoffel symbols and curvature tensors of charted metrics.

Metric derivatives are exact when the metric supplies them and fourth-order
central differences otherwise. Curvature differentiates the Christoffel
symbols with the same stencil, so scalar curvature reads the metric on a
stencil of radius 4h.

Sign conventions:
    R^rho_{sigma mu nu} = d_mu Gamma^rho_{nu sigma} - d_nu Gamma^rho_{mu sigma}
                          + Gamma^rho_{mu lam} Gamma^lam_{nu sigma}
                          - Gamma^rho_{nu lam} Gamma^lam_{mu sigma}
    R_{sigma nu} = R^rho_{sigma rho nu},  S = g^{sigma nu} R_{sigma nu}
With these, de Sitter space has positive scalar curvature and
-dt^2 + a(t)^2 dx^2 has S = 2 a''/a.
"""

from collections.abc import Callable
from typing import Any

import numpy as np
from numpy.typing import ArrayLike

from src.errors import DomainError
from src.geometry.metric import check_domain, inverse_metric_batch
from src.geometry.types import ChartedMetric, FloatArray, as_coords

DEFAULT_STEP = 1e-3

# Fourth-order central difference: offsets and weights (divided by 12 h).
_OFFSETS = np.array([-2.0, -1.0, 1.0, 2.0])
_WEIGHTS = np.array([1.0, -8.0, 8.0, -1.0]) / 12.0


def _central_gradient(
    fn: Callable[[FloatArray], FloatArray], xs: FloatArray, h: float
) -> FloatArray:
    """Fourth-order gradient of a batched field, derivative axis placed first after the batch.

    Args:
        fn: Batched evaluator ``(N, d) -> (N, *shape)``
        xs: Points, shape ``(N, d)``
        h: Step size

    Returns:
        Array of shape ``(N, d, *shape)`` holding d_a fn at each point
    """
    n, d = xs.shape
    shifts = np.einsum("k,ab->kab", _OFFSETS * h, np.eye(d))
    stencil = xs[:, None, None, :] + shifts[None, :, :, :]
    values = fn(stencil.reshape(-1, d))
    values = values.reshape(n, len(_OFFSETS), d, *values.shape[1:])
    return np.einsum("k,nka...->na...", _WEIGHTS, values) / h


def metric_derivatives(metric: ChartedMetric, xs: ArrayLike, h: float = DEFAULT_STEP) -> FloatArray:
    """First derivatives d_lam g_{mu nu} on a batch, shape ``(N, d, d, d)``.

    Raises:
        DomainError: the difference stencil leaves the chart domain
    """
    pts = np.atleast_2d(check_domain(metric, xs))
    if metric.derivatives is not None:
        return np.asarray(metric.derivatives(pts), dtype=float)

    def components(ys: FloatArray) -> FloatArray:
        if not np.all(metric.in_domain(ys)):
            raise DomainError(f"{metric.label}: difference stencil leaves chart domain")
        return np.asarray(metric.components(ys), dtype=float)

    return _central_gradient(components, pts, h)


def christoffel_batch(metric: ChartedMetric, xs: ArrayLike, h: float = DEFAULT_STEP) -> FloatArray:
    """Christoffel symbols Gamma^lam_{mu nu} on a batch, shape ``(N, d, d, d)``."""
    pts = np.atleast_2d(np.asarray(xs, dtype=float))
    dg = metric_derivatives(metric, pts, h)
    ginv = inverse_metric_batch(metric, pts)
    lowered = (
        np.einsum("...msn->...smn", dg) + np.einsum("...nsm->...smn", dg) - dg
    )
    gamma = 0.5 * np.einsum("...ls,...smn->...lmn", ginv, lowered)
    return 0.5 * (gamma + np.swapaxes(gamma, -1, -2))


def christoffel(metric: ChartedMetric, p: Any, h: float = DEFAULT_STEP) -> FloatArray:
    """Christoffel symbols at a single point, indexed ``[lam, mu, nu]``.

    Args:
        metric: The metric
        p: Point or coordinate sequence
        h: Finite-difference step used when exact derivatives are absent

    Returns:
        ``(d, d, d)`` array symmetric in the last two indices

    Raises:
        DomainError: the stencil of radius 2h leaves the chart domain
    """
    return christoffel_batch(metric, as_coords(p)[None, :], h)[0]


def riemann_batch(metric: ChartedMetric, xs: ArrayLike, h: float = DEFAULT_STEP) -> FloatArray:
    """Riemann tensor R^rho_{sigma mu nu} on a batch, shape ``(N, d, d, d, d)``."""
    pts = np.atleast_2d(check_domain(metric, xs))
    gamma = christoffel_batch(metric, pts, h)

    def gamma_fn(ys: FloatArray) -> FloatArray:
        if not np.all(metric.in_domain(ys)):
            raise DomainError(f"{metric.label}: curvature stencil leaves chart domain")
        return christoffel_batch(metric, ys, h)

    d_gamma = _central_gradient(gamma_fn, pts, h)
    return (
        np.einsum("...mrns->...rsmn", d_gamma)
        - np.einsum("...nrms->...rsmn", d_gamma)
        + np.einsum("...rml,...lns->...rsmn", gamma, gamma)
        - np.einsum("...rnl,...lms->...rsmn", gamma, gamma)
    )


def ricci_batch(metric: ChartedMetric, xs: ArrayLike, h: float = DEFAULT_STEP) -> FloatArray:
    """Ricci tensor R_{sigma nu} on a batch, shape ``(N, d, d)``."""
    return np.einsum("...rsrn->...sn", riemann_batch(metric, xs, h))


def scalar_curvature_batch(
    metric: ChartedMetric, xs: ArrayLike, h: float = DEFAULT_STEP
) -> FloatArray:
    """Scalar curvature on a batch, shape ``(N,)``."""
    pts = np.atleast_2d(np.asarray(xs, dtype=float))
    ric = ricci_batch(metric, pts, h)
    ginv = inverse_metric_batch(metric, pts)
    return np.einsum("...sn,...sn->...", ginv, ric)


def riemann(metric: ChartedMetric, p: Any, h: float = DEFAULT_STEP) -> FloatArray:
    return riemann_batch(metric, as_coords(p)[None, :], h)[0]


def ricci(metric: ChartedMetric, p: Any, h: float = DEFAULT_STEP) -> FloatArray:
    return ricci_batch(metric, as_coords(p)[None, :], h)[0]


def scalar_curvature(metric: ChartedMetric, p: Any, h: float = DEFAULT_STEP) -> float:
    """Scalar curvature S at a single point.

    Raises:
        DomainError: the stencil of radius 4h leaves the chart domain
    """
    return float(scalar_curvature_batch(metric, as_coords(p)[None, :], h)[0])


def connection_evaluator(
    metric: ChartedMetric, h: float = DEFAULT_STEP
) -> Callable[[FloatArray], FloatArray]:
    """Unchecked single-point Christoffel evaluator for use inside ODE right-hand sides.

    Skips signature and domain validation; callers check the domain margin.
    Non-finite results raise DomainError.
    """
    d = metric.dim
    shifts = np.einsum("k,ab->kab", _OFFSETS * h, np.eye(d)).reshape(-1, d)

    def gamma(x: FloatArray) -> FloatArray:
        if metric.derivatives is not None:
            xs = x[None, :]
            g = np.asarray(metric.components(xs), dtype=float)[0]
            dg = np.asarray(metric.derivatives(xs), dtype=float)[0]
        else:
            pts = np.vstack([x[None, :], x[None, :] + shifts])
            vals = np.asarray(metric.components(pts), dtype=float)
            g = vals[0]
            dg = np.einsum("k,kamn->amn", _WEIGHTS, vals[1:].reshape(len(_OFFSETS), d, d, d)) / h
        ginv = np.linalg.inv(g)
        lowered = np.einsum("msn->smn", dg) + np.einsum("nsm->smn", dg) - dg
        out = 0.5 * np.einsum("ls,smn->lmn", ginv, lowered)
        if not np.all(np.isfinite(out)):
            raise DomainError(f"{metric.label}: non-finite connection")
        return out

    return gamma
