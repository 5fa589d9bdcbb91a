"""Three-level finite-difference solver for Box_g u = f in 1+1 dimensions.

The operator is written in flux form

    -d_mu(A^{mu nu} d_nu u) = sqrt|g| f,   A^{mu nu} = sqrt|g| g^{mu nu},

with A^{tt} and A^{xx} sampled at half levels and half nodes, and the mixed
terms discretised with centred differences. The newest level enters through
A^{tt} on the diagonal and through A^{tx} on the neighbouring nodes, so each
step solves a tridiagonal system. When A^{tx} vanishes on the whole grid the
system is diagonal and the step is a pointwise division.
"""

import logging
from typing import NamedTuple

import numpy as np
from scipy.linalg import solve_banded

from src.errors import DataError, DomainError, GridError, SignatureError, StabilityError
from src.geometry.types import ChartedMetric, FloatArray
from src.observability.tracing import traced
from src.waves.fields import BoundaryTrace, SourceSpec, WaveField
from src.waves.grid import WaveGrid, characteristic_speed

logger = logging.getLogger(__name__)

# Relative slack on the CFL limit before a grid is rejected
CFL_SLACK = 1e-12


class _Coefficients(NamedTuple):
    att: FloatArray
    atx: FloatArray
    axx: FloatArray
    root: FloatArray


def _coefficients(metric: ChartedMetric, ts: FloatArray, xs: FloatArray) -> _Coefficients:
    """Flux coefficients sqrt|g| g^{mu nu} on the tensor grid ts x xs."""
    T, X = np.meshgrid(ts, xs, indexing="ij")
    pts = np.stack([T, X], axis=-1)
    if not np.all(metric.in_domain(pts)):
        raise DomainError(f"{metric.label}: grid leaves the chart domain")
    g = np.asarray(metric.components(pts), dtype=float)
    if not np.all(np.isfinite(g)):
        raise DomainError(f"{metric.label}: non-finite metric components on the grid")
    det = g[..., 0, 0] * g[..., 1, 1] - g[..., 0, 1] ** 2
    if np.any(det >= 0.0):
        raise SignatureError(f"{metric.label}: metric is not Lorentzian on the grid")
    root = np.sqrt(-det)
    att = root * g[..., 1, 1] / det
    if np.any(att >= 0.0):
        raise SignatureError(f"{metric.label}: the time coordinate is not a time function")
    atx = -root * g[..., 0, 1] / det
    axx = root * g[..., 0, 0] / det
    return _Coefficients(att=att, atx=atx, axx=axx, root=root)


def _check_cfl(metric: ChartedMetric, grid: WaveGrid) -> None:
    limit = grid.dx / characteristic_speed(metric, grid)
    if grid.dt > limit * (1.0 + CFL_SLACK):
        raise StabilityError(f"{metric.label}: dt={grid.dt:.3e} exceeds the CFL limit {limit:.3e}")


def _march(
    metric: ChartedMetric,
    grid: WaveGrid,
    forcing: FloatArray | None,
    left: FloatArray,
    right: FloatArray,
) -> FloatArray:
    """Advance zero data on the first two levels through the whole grid.

    Args:
        metric: 1+1 metric in the grid's chart
        grid: The grid
        forcing: sqrt|g| f on the nodes, or None for f = 0
        left: Dirichlet values at x_range[0], one per level
        right: Dirichlet values at x_range[1], one per level

    Returns:
        Array of shape ``(nt, nx)``
    """
    dt, dx = grid.dt, grid.dx
    ts, xs = grid.times, grid.xs
    full = _coefficients(metric, ts, xs)
    half_t = _coefficients(metric, ts[:-1] + 0.5 * dt, xs)
    half_x = _coefficients(metric, ts, xs[:-1] + 0.5 * dx)
    cross = bool(np.any(full.atx != 0.0))
    mixed = 1.0 / (4.0 * dt * dx)

    u = np.zeros((grid.nt, grid.nx))
    u[:, 0] = left
    u[:, -1] = right
    for n in range(1, grid.nt - 1):
        un, um = u[n], u[n - 1]
        att_p = half_t.att[n, 1:-1]
        att_m = half_t.att[n - 1, 1:-1]
        flux = half_x.axx[n] * (un[1:] - un[:-1])
        known = (-att_p * un[1:-1] - att_m * (un[1:-1] - um[1:-1])) / dt**2
        known += (flux[1:] - flux[:-1]) / dx**2
        if cross:
            a_prev, a_now, a_next = full.atx[n - 1], full.atx[n], full.atx[n + 1]
            known -= a_prev[1:-1] * (um[2:] - um[:-2]) * mixed
            known -= (a_now[2:] * um[2:] - a_now[:-2] * um[:-2]) * mixed
        rhs = -known
        if forcing is not None:
            rhs -= forcing[n, 1:-1]
        diag = att_p / dt**2
        if not cross:
            u[n + 1, 1:-1] = rhs / diag
            continue
        upper = (a_next[1:-1] + a_now[2:]) * mixed
        lower = -(a_next[1:-1] + a_now[:-2]) * mixed
        rhs[0] -= lower[0] * u[n + 1, 0]
        rhs[-1] -= upper[-1] * u[n + 1, -1]
        banded = np.zeros((3, diag.size))
        banded[0, 1:] = upper[:-1]
        banded[1] = diag
        banded[2, :-1] = lower[1:]
        u[n + 1, 1:-1] = solve_banded((1, 1), banded, rhs, check_finite=False)
    if not np.all(np.isfinite(u)):
        raise StabilityError(f"{metric.label}: solution blew up")
    return u


@traced("solve_cauchy")
def solve_cauchy(metric: ChartedMetric, grid: WaveGrid, src: SourceSpec) -> WaveField:
    """Solve Box_g u = f with u = 0 before the source and zero values at the spatial edges.

    The zero edge values reflect outgoing waves back into the grid; the
    solver does not guard against that. Readers of the field decide which
    nodes are clean: ``source_to_solution`` rejects probes that a reflection
    can reach.

    Args:
        metric: 1+1 metric on the grid rectangle
        grid: Grid whose first two levels lie before the source support
        src: The source

    Returns:
        The solution on every node

    Raises:
        StabilityError: dt violates the CFL limit or the solution is non-finite
        GridError: the source support is not strictly inside the grid
    """
    (t_lo, t_hi), (x_lo, x_hi) = src.support
    t0, t1 = grid.t_range
    if t_lo <= t0 + grid.dt or x_lo <= grid.x_range[0] or x_hi >= grid.x_range[1]:
        raise GridError(f"source {src.label} is not strictly inside the grid")
    if t_hi > t1:
        logger.debug("source %s extends past the last level", src.label)
    _check_cfl(metric, grid)
    f = src.values(grid)
    forcing = None
    if np.any(f):
        forcing = _coefficients(metric, grid.times, grid.xs).root * f
    zeros = np.zeros(grid.nt)
    values = _march(metric, grid, forcing, zeros, zeros)
    return WaveField(grid=grid, values=values, metric_label=metric.label)


@traced("solve_ibvp")
def solve_ibvp(
    metric: ChartedMetric, grid: WaveGrid, phi: tuple[BoundaryTrace, BoundaryTrace]
) -> WaveField:
    """Solve Box_g u = 0 on the strip with Dirichlet data phi at xi = -1 and xi = +1.

    Args:
        metric: Metric pulled back to the strip chart, grid x range [-1, 1]
        grid: Strip grid
        phi: Dirichlet traces for the sides xi = -1 and xi = +1, sampled at the grid times

    Raises:
        DataError: the data are nonzero on the first two levels or mis-sampled
        StabilityError: dt violates the CFL limit
    """
    left, right = sorted(phi, key=lambda tr: tr.side)
    if (left.side, right.side) != (-1, 1):
        raise DataError("boundary data must cover both sides of the strip")
    for trace in (left, right):
        if trace.kind != "Dirichlet" or trace.values.shape != (grid.nt,):
            raise DataError("boundary data must be Dirichlet traces sampled on the grid times")
        if np.any(trace.values[:2] != 0.0):
            raise DataError("boundary data must vanish on the first two levels")
    _check_cfl(metric, grid)
    values = _march(metric, grid, None, left.values, right.values)
    return WaveField(grid=grid, values=values, metric_label=metric.label)
