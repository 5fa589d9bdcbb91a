"""Geodesic integration with boundary, chart-edge and time-limit events.

The geodesic equation x'' + Gamma(x', x') = 0 is stepped with scipy's
embedded Dormand-Prince 8(5,3) pair. Each accepted step is checked for
events and the event location is refined on the step's dense output.
"""

import logging
from collections.abc import Callable
from enum import Enum
from typing import Any

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field
from scipy.integrate import DOP853, OdeSolution
from scipy.optimize import brentq

from src.errors import (
    ChartExitError,
    DomainError,
    PreconditionError,
    SingularityApproachError,
    SingularMetricError,
)
from src.geometry.curvature import DEFAULT_STEP, connection_evaluator
from src.geometry.metric import causal_class
from src.geometry.types import CausalKind, ChartedMetric, FloatArray, Point, Tangent, as_coords
from src.spacetimes.cylinders import CylinderDomain

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-10
EDGE_MARGIN = 1e-6
BOUNDARY_TOLERANCE = 1e-12
ROOT_XTOL = 1e-14


class Termination(str, Enum):
    """Why a geodesic integration stopped."""

    BOUNDARY_HIT = "BoundaryHit"
    PARAMETER_LIMIT = "ParameterLimit"
    CHART_EXIT = "ChartExit"
    SINGULARITY_APPROACH = "SingularityApproach"


class GeodesicPath(BaseModel):
    """A sampled geodesic with its affine parameter, tangent and constraint drift.

    Attributes:
        s: Affine parameter at each sample, strictly increasing
        points: Coordinates at each sample, shape ``(N, d)``
        tangents: Tangent components at each sample, shape ``(N, d)``
        initial_norm: g(v, v) at the start
        constraint_drift: max |g(x', x') - initial_norm| over samples
        relative_drift: constraint_drift divided by the scale of g(x', x')
        termination: Reason the integration stopped
        metric_label: Label of the metric integrated on
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    s: np.ndarray
    points: np.ndarray
    tangents: np.ndarray
    initial_norm: float
    constraint_drift: float
    relative_drift: float
    termination: Termination
    metric_label: str
    dense: Any = Field(default=None, exclude=True, repr=False)

    @property
    def dim(self) -> int:
        return int(self.points.shape[1])

    @property
    def end_point(self) -> FloatArray:
        return np.asarray(self.points[-1])

    @property
    def samples(self) -> list[tuple[float, Point, Tangent]]:
        """Samples as (s, Point, Tangent) triples."""
        out = []
        for s, x, v in zip(self.s, self.points, self.tangents, strict=True):
            base = Point(coords=tuple(float(c) for c in x))
            out.append((float(s), base, Tangent(base=base, components=tuple(float(c) for c in v))))
        return out

    def interpolate(self, s: ArrayLike) -> FloatArray:
        """Coordinates at affine parameter ``s`` (dense output when available)."""
        sv = np.asarray(s, dtype=float)
        if self.dense is not None:
            return np.asarray(self.dense(sv), dtype=float)[: self.dim].T
        return np.stack(
            [np.interp(sv, self.s, self.points[:, k]) for k in range(self.dim)], axis=-1
        )


class _LeftChart(Exception):
    """Raised inside the right-hand side when the trial point is off the chart."""


def _edge_termination(metric: ChartedMetric) -> Termination:
    if metric.edge_kind == "singularity":
        return Termination.SINGULARITY_APPROACH
    return Termination.CHART_EXIT


def _geodesic_rhs(metric: ChartedMetric, h: float) -> Callable[[float, FloatArray], FloatArray]:
    d = metric.dim
    gamma = connection_evaluator(metric, h)

    def rhs(_s: float, y: FloatArray) -> FloatArray:
        x, v = y[:d], y[d:]
        if not np.all(np.isfinite(y)) or metric.margin(x[None, :])[0] <= 0.0:
            raise _LeftChart
        try:
            acc = -np.einsum("lmn,m,n->l", gamma(x), v, v)
        except (DomainError, SingularMetricError, np.linalg.LinAlgError) as exc:
            raise _LeftChart from exc
        return np.concatenate([v, acc])

    return rhs


def _locate(fn: Callable[[float], float], lo: float, hi: float) -> float:
    """Root of ``fn`` in [lo, hi] assuming fn(lo) < 0; returns hi when fn(hi) <= 0."""
    if fn(hi) <= 0.0:
        return hi
    return float(brentq(fn, lo, hi, xtol=ROOT_XTOL, rtol=4 * np.finfo(float).eps))


def _norms(
    metric: ChartedMetric, points: FloatArray, tangents: FloatArray
) -> tuple[FloatArray, FloatArray]:
    g = np.asarray(metric.components(points), dtype=float)
    q = np.einsum("nm,nmk,nk->n", tangents, g, tangents)
    scale = np.max(np.abs(g), axis=(-2, -1)) * np.einsum("nm,nm->n", tangents, tangents)
    return q, scale


def integrate_geodesic(
    metric: ChartedMetric,
    p: Any,
    v: ArrayLike,
    s_max: float,
    tol: float = DEFAULT_TOLERANCE,
    cylinder: CylinderDomain | None = None,
    time_limit: float | None = None,
    max_step: float | None = None,
    h: float = DEFAULT_STEP,
) -> GeodesicPath:
    """Integrate a causal geodesic from (p, v).

    Integration stops at the first of: the cylinder's clearance crossing zero
    upwards (BoundaryHit), |x^0| reaching ``time_limit`` or s reaching
    ``s_max`` (ParameterLimit), the chart edge (ChartExit, or
    SingularityApproach when the edge is a curvature singularity), or step
    size underflow (SingularityApproach).

    Args:
        metric: Metric to integrate on
        p: Starting point
        v: Initial tangent, timelike or null
        s_max: Affine parameter budget
        tol: Relative and absolute local error tolerance
        cylinder: Optional cylinder whose boundary stops the ray
        time_limit: Optional bound on |x^0|
        max_step: Largest affine step (default s_max / 100)
        h: Finite-difference step for metrics without exact derivatives

    Returns:
        The sampled path

    Raises:
        PreconditionError: v is spacelike or zero
        ChartExitError: p is outside (or on the edge of) the chart
        SingularityApproachError: p is at the singular edge of the chart
    """
    x0 = as_coords(p)
    v0 = np.asarray(v, dtype=float)
    d = metric.dim
    if metric.margin(x0[None, :])[0] <= EDGE_MARGIN:
        if metric.edge_kind == "singularity":
            raise SingularityApproachError(f"{metric.label}: start point at the singularity")
        raise ChartExitError(f"{metric.label}: start point outside the chart")
    base = Point(coords=tuple(float(c) for c in x0))
    kind = causal_class(metric, Tangent(base=base, components=tuple(float(c) for c in v0))).kind
    if kind not in (CausalKind.TIMELIKE, CausalKind.NULL):
        raise PreconditionError(f"geodesic tangent must be causal, got {kind.value}")

    rhs = _geodesic_rhs(metric, h)
    y0 = np.concatenate([x0, v0])
    step = s_max / 100.0 if max_step is None else max_step
    solver = DOP853(rhs, 0.0, y0, s_max, rtol=tol, atol=tol, max_step=step)

    def margin_at(y: FloatArray) -> float:
        return float(metric.margin(y[None, :d])[0]) - EDGE_MARGIN

    def clearance_at(y: FloatArray) -> float:
        assert cylinder is not None
        return float(cylinder.clearance_at(y[None, :d])[0])

    ts = [0.0]
    ys = [y0]
    interpolants: list[Any] = []
    termination = Termination.PARAMETER_LIMIT
    prev_clear = clearance_at(y0) if cylinder is not None else -1.0

    while solver.status == "running":
        s_prev, y_prev = solver.t, solver.y.copy()
        try:
            solver.step()
        except _LeftChart:
            termination = _edge_termination(metric)
            break
        if solver.status == "failed":
            logger.debug("step size underflow at s=%.6g", s_prev)
            termination = Termination.SINGULARITY_APPROACH
            break
        dense = solver.dense_output()
        s_new, y_new = solver.t, solver.y.copy()
        events: list[tuple[float, Termination]] = []

        finite = bool(np.all(np.isfinite(y_new)))
        if not finite or margin_at(y_new) <= 0.0:

            def edge_fn(s: float) -> float:
                return -margin_at(dense(s))

            s_edge = _locate(edge_fn, s_prev, s_new) if finite else s_prev
            events.append((s_edge, _edge_termination(metric)))
        else:
            if cylinder is not None:
                clear = clearance_at(y_new)
                if prev_clear < 0.0 <= clear:

                    def boundary_fn(s: float) -> float:
                        return clearance_at(dense(s))

                    s_hit = _locate(boundary_fn, s_prev, s_new)
                    events.append((s_hit, Termination.BOUNDARY_HIT))
                prev_clear = clear
            if time_limit is not None and abs(y_new[0]) >= time_limit > abs(y_prev[0]):
                limit = float(time_limit)

                def time_fn(s: float) -> float:
                    return abs(float(dense(s)[0])) - limit

                events.append((_locate(time_fn, s_prev, s_new), Termination.PARAMETER_LIMIT))

        interpolants.append(dense)
        if events:
            s_evt, termination = min(events, key=lambda e: e[0])
            if s_evt > s_prev:
                ts.append(s_evt)
                ys.append(np.asarray(dense(s_evt), dtype=float))
            else:
                interpolants.pop()
            break
        ts.append(s_new)
        ys.append(y_new)

    s_arr = np.asarray(ts)
    y_arr = np.asarray(ys)
    points, tangents = y_arr[:, :d], y_arr[:, d:]
    q, scale = _norms(metric, points, tangents)
    drift = float(np.max(np.abs(q - q[0])))
    rel = drift / max(float(np.max(scale)), np.finfo(float).tiny)
    dense_sol = None
    if interpolants and len(interpolants) == len(s_arr) - 1:
        dense_sol = OdeSolution(s_arr, interpolants)
    return GeodesicPath(
        s=s_arr,
        points=points,
        tangents=tangents,
        initial_norm=float(q[0]),
        constraint_drift=drift,
        relative_drift=rel,
        termination=termination,
        metric_label=metric.label,
        dense=dense_sol,
    )


def boundary_hit(path: GeodesicPath, cylinder: CylinderDomain) -> tuple[float, Point] | None:
    """First crossing of the cylinder boundary along a path.

    A path starting on the boundary is allowed; the crossing at s = 0 is not
    reported. The crossing is refined by bracketed root finding on the dense
    output to |clearance| <= 1e-10.

    Raises:
        PreconditionError: the path starts outside the cylinder
    """
    clear = cylinder.clearance_at(path.points)
    if clear[0] > BOUNDARY_TOLERANCE:
        raise PreconditionError(f"path starts outside {cylinder.label}")
    for i in range(1, len(clear)):
        if clear[i - 1] < -BOUNDARY_TOLERANCE and clear[i] >= -BOUNDARY_TOLERANCE:
            lo, hi = float(path.s[i - 1]), float(path.s[i])

            def fn(s: float) -> float:
                return float(cylinder.clearance_at(path.interpolate(s)[None, :])[0])

            s_star = _locate(fn, lo, hi)
            x_star = path.interpolate(s_star)
            return s_star, Point(coords=tuple(float(c) for c in x_star))
    return None
