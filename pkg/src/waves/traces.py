"""Neumann traces on the strip and the hyperbolic Dirichlet-to-Neumann map."""

from typing import Literal

import numpy as np

from src.errors import DataError, SignatureError
from src.geometry.metric import metric_batch
from src.geometry.types import ChartedMetric
from src.observability.tracing import traced
from src.waves.fields import BoundaryData, BoundaryTrace, WaveField
from src.waves.grid import WaveGrid
from src.waves.solver import solve_ibvp

NORMAL_TOLERANCE = 1e-10


def neumann_trace(u: WaveField, metric: ChartedMetric, side: Literal[-1, 1]) -> BoundaryTrace:
    """Inward normal derivative of a strip solution along xi = side.

    The inward g-unit normal is nu^mu = s g^{mu xi} / sqrt(g^{xi xi}) with
    s = +1 on xi = -1 and s = -1 on xi = +1. The xi derivative uses a
    three-point one-sided stencil, the t derivative second-order differences
    along the side.

    Raises:
        SignatureError: the side is not timelike, or nu fails its unit or
            orthogonality check by more than NORMAL_TOLERANCE
    """
    grid = u.grid
    if side not in (-1, 1):
        raise DataError(f"side must be -1 or +1, got {side}")
    times = grid.times
    xi = grid.x_range[0] if side == -1 else grid.x_range[1]
    pts = np.stack([times, np.full_like(times, xi)], axis=-1)
    g = metric_batch(metric, pts)
    ginv = np.linalg.inv(g)
    gxx = ginv[:, 1, 1]
    if np.any(gxx <= 0.0):
        raise SignatureError(f"{metric.label}: boundary xi={xi:g} is not timelike")
    sign = 1.0 if side == -1 else -1.0
    nu = sign * ginv[:, :, 1] / np.sqrt(gxx)[:, None]

    unit = np.abs(np.einsum("na,nab,nb->n", nu, g, nu) - 1.0)
    ortho = np.abs(np.einsum("na,na->n", nu, g[:, :, 0]))
    residual = float(max(unit.max(), ortho.max()))
    if residual > NORMAL_TOLERANCE:
        raise SignatureError(
            f"{metric.label}: normal certificate failed with residual {residual:.3e}"
        )

    vals = u.values
    if side == -1:
        d_xi = (-3.0 * vals[:, 0] + 4.0 * vals[:, 1] - vals[:, 2]) / (2.0 * grid.dx)
        edge = vals[:, 0]
    else:
        d_xi = (3.0 * vals[:, -1] - 4.0 * vals[:, -2] + vals[:, -3]) / (2.0 * grid.dx)
        edge = vals[:, -1]
    d_t = np.gradient(edge, grid.dt, edge_order=2)
    return BoundaryTrace(
        side=side,
        times=times,
        values=nu[:, 0] * d_t + nu[:, 1] * d_xi,
        kind="Neumann",
        normalization_residual=residual,
    )


@traced("dn_map")
def dn_map(
    metric: ChartedMetric, phi: BoundaryData | tuple[BoundaryTrace, BoundaryTrace], grid: WaveGrid
) -> tuple[BoundaryTrace, BoundaryTrace]:
    """Neumann traces on both sides of the solution with Dirichlet data phi.

    Args:
        metric: Metric pulled back to the strip chart
        phi: Dirichlet data, as functions of time or as traces on the grid times
        grid: Strip grid over xi in [-1, 1]

    Returns:
        Neumann traces for xi = -1 and xi = +1
    """
    traces = phi.traces(grid) if isinstance(phi, BoundaryData) else phi
    u = solve_ibvp(metric, grid, traces)
    return neumann_trace(u, metric, -1), neumann_trace(u, metric, 1)
