"""Pointwise evaluation of charted metrics.

Checked evaluation (domain, finiteness, symmetry and Lorentzian signature),
inverses, causal classification of vectors, covector norms and pullbacks
along chart maps.
"""

from typing import Any

import numpy as np
from numpy.typing import ArrayLike

from src.errors import ChartError, DomainError, SignatureError, SingularMetricError
from src.geometry.types import (
    CausalClass,
    CausalKind,
    ChartedMetric,
    ChartMap,
    FloatArray,
    Tangent,
    TimeSense,
    as_coords,
)

SIGNATURE_THRESHOLD = 1e-12
MAX_CONDITION = 1e12
MIN_JACOBIAN_DET = 1e-12
NULL_EPSILON = 1e-10


def check_domain(metric: ChartedMetric, xs: ArrayLike) -> FloatArray:
    """Return ``xs`` as an array, raising DomainError if any point is outside the chart."""
    arr = np.asarray(xs, dtype=float)
    if arr.shape[-1] != metric.dim:
        raise DomainError(f"{metric.label}: expected {metric.dim} coordinates, got {arr.shape[-1]}")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{metric.label}: non-finite coordinates")
    if not np.all(metric.in_domain(arr)):
        raise DomainError(f"{metric.label}: point outside chart domain")
    return arr


def signature_counts(g: FloatArray) -> tuple[FloatArray, FloatArray]:
    """Count negative and positive eigenvalues of a batch of symmetric matrices.

    Eigenvalues within ``SIGNATURE_THRESHOLD`` times the largest eigenvalue
    magnitude count as neither.
    """
    eig = np.linalg.eigvalsh(g)
    thr = SIGNATURE_THRESHOLD * np.max(np.abs(eig), axis=-1, keepdims=True)
    return np.sum(eig < -thr, axis=-1), np.sum(eig > thr, axis=-1)


def metric_batch(metric: ChartedMetric, xs: ArrayLike, check_signature: bool = True) -> FloatArray:
    """Evaluate metric components on a batch of points with validation.

    Args:
        metric: The metric to evaluate
        xs: Points, shape ``(..., d)``
        check_signature: Whether to verify the (-, +, ..., +) signature

    Returns:
        Components, shape ``(..., d, d)``

    Raises:
        DomainError: A point is outside the chart or a component is non-finite
        SignatureError: A matrix is asymmetric or not Lorentzian
    """
    arr = check_domain(metric, xs)
    g = np.asarray(metric.components(arr), dtype=float)
    if not np.all(np.isfinite(g)):
        raise DomainError(f"{metric.label}: non-finite metric components")
    scale = np.max(np.abs(g), axis=(-2, -1))
    asym = np.max(np.abs(g - np.swapaxes(g, -1, -2)), axis=(-2, -1))
    if np.any(asym > SIGNATURE_THRESHOLD * np.maximum(scale, 1.0)):
        raise SignatureError(f"{metric.label}: metric components are not symmetric")
    if check_signature:
        neg, pos = signature_counts(g)
        if np.any(neg != 1) or np.any(pos != metric.dim - 1):
            raise SignatureError(f"{metric.label}: metric is not Lorentzian (-, +, ..., +)")
    return g


def metric_at(metric: ChartedMetric, p: Any) -> FloatArray:
    """Evaluate g_{mu nu} at a single point.

    Args:
        metric: The metric to evaluate
        p: A Point or coordinate sequence

    Returns:
        Symmetric ``(d, d)`` matrix with Lorentzian signature

    Raises:
        DomainError: p is outside the chart or components are non-finite
        SignatureError: the matrix is not Lorentzian
    """
    return metric_batch(metric, as_coords(p)[None, :])[0]


def inverse_metric_at(metric: ChartedMetric, p: Any) -> FloatArray:
    """Evaluate the inverse metric g^{mu nu} at a single point.

    Raises:
        SingularMetricError: the metric matrix is numerically singular
    """
    g = metric_at(metric, p)
    cond = np.linalg.cond(g)
    if not np.isfinite(cond) or cond > MAX_CONDITION:
        raise SingularMetricError(f"{metric.label}: condition number {cond:.3e}")
    inv = np.linalg.inv(g)
    return 0.5 * (inv + inv.T)


def inverse_metric_batch(metric: ChartedMetric, xs: ArrayLike) -> FloatArray:
    """Batched inverse metric, shape ``(..., d, d)``."""
    g = metric_batch(metric, xs)
    cond = np.linalg.cond(g)
    if not np.all(np.isfinite(cond)) or np.any(cond > MAX_CONDITION):
        raise SingularMetricError(f"{metric.label}: metric is numerically singular")
    inv = np.linalg.inv(g)
    return 0.5 * (inv + np.swapaxes(inv, -1, -2))


def causal_class(
    metric: ChartedMetric, v: Tangent, eps_null: float = NULL_EPSILON
) -> CausalClass:
    """Classify a tangent vector as timelike, null, spacelike or zero.

    A vector is null when |g(v, v)| <= eps_null * |v|^2 with |v| the
    Euclidean norm of its components. Time sense is read from the sign of
    g(v, T) with T the orientation field: negative means future pointing.
    """
    comps = v.as_array()
    if not np.any(comps):
        return CausalClass(kind=CausalKind.ZERO, time_sense=TimeSense.NONE)
    x = v.base.as_array()
    g = metric_at(metric, x)
    norm = float(comps @ g @ comps)
    aux = float(comps @ comps)
    if abs(norm) <= eps_null * aux:
        kind = CausalKind.NULL
    elif norm < 0.0:
        kind = CausalKind.TIMELIKE
    else:
        return CausalClass(kind=CausalKind.SPACELIKE, time_sense=TimeSense.NONE)
    orient = np.asarray(metric.orientation(x[None, :]), dtype=float)[0]
    sense = TimeSense.FUTURE if float(comps @ g @ orient) < 0.0 else TimeSense.PAST
    return CausalClass(kind=kind, time_sense=sense)


def covector_norm2(metric: ChartedMetric, p: Any, omega: ArrayLike) -> float:
    """Return g^{mu nu} omega_mu omega_nu at p."""
    w = np.asarray(omega, dtype=float)
    return float(w @ inverse_metric_at(metric, p) @ w)


def pullback_metric(
    chart: ChartMap, metric: ChartedMetric, label: str | None = None
) -> ChartedMetric:
    """Pull a metric back along a chart map.

    The pulled-back components are J^T g(F(q)) J and the orientation field is
    J^{-1} T(F(q)). Derivatives are left to finite differences.

    Raises:
        ChartError: (at evaluation) the Jacobian is singular somewhere in the batch
    """

    def jacobian(q: FloatArray) -> FloatArray:
        jac = np.asarray(chart.jacobian(q), dtype=float)
        if np.any(np.abs(np.linalg.det(jac)) < MIN_JACOBIAN_DET):
            raise ChartError(f"{chart.label}: Jacobian is singular")
        return jac

    def components(q: FloatArray) -> FloatArray:
        jac = jacobian(q)
        g = metric.components(np.asarray(chart.forward(q), dtype=float))
        return np.einsum("...am,...ab,...bn->...mn", jac, g, jac)

    def orientation(q: FloatArray) -> FloatArray:
        jac = jacobian(q)
        t_vec = metric.orientation(np.asarray(chart.forward(q), dtype=float))
        return np.linalg.solve(jac, t_vec[..., None])[..., 0]

    def domain_margin(q: FloatArray) -> FloatArray:
        flat = q.reshape(-1, q.shape[-1])
        if chart.domain_margin is None:
            out = np.full(flat.shape[0], np.inf)
        else:
            out = np.array(chart.domain_margin(flat), dtype=float).reshape(-1)
        ok = out > 0.0
        if np.any(ok):
            target = metric.margin(np.asarray(chart.forward(flat[ok]), dtype=float))
            out[ok] = np.minimum(out[ok], target)
        return out.reshape(q.shape[:-1])

    return ChartedMetric(
        dim=metric.dim,
        coord_names=chart.coord_names,
        components=components,
        orientation=orientation,
        domain_margin=domain_margin,
        edge_kind=metric.edge_kind,
        label=label or f"{metric.label}|{chart.label}",
    )
