"""Manufactured-solution convergence study of the wave solver on Minkowski space."""

import numpy as np

from src.geometry.types import Evaluator, FloatArray
from src.models.run_report import ConvergenceCheck
from src.spacetimes.catalog import minkowski
from src.waves.fields import SourceSpec
from src.waves.grid import WaveGrid
from src.waves.solver import solve_cauchy

RATIO_RANGE = (3.0, 5.0)
# Gaussian width and support cut in widths
WIDTH = 0.4
CUT = 7.0


def gaussian_solution(t0: float, x0: float, width: float = WIDTH) -> tuple[SourceSpec, Evaluator]:
    """Source f = u_tt - u_xx for the Gaussian u = exp(-((t-t0)^2 + (x-x0)^2)/width^2).

    Returns:
        The source, truncated at CUT widths, and the exact solution evaluator
    """
    w2 = width * width

    def exact(x: FloatArray) -> FloatArray:
        dt, dx = x[..., 0] - t0, x[..., 1] - x0
        return np.exp(-(dt * dt + dx * dx) / w2)

    def f(x: FloatArray) -> FloatArray:
        dt, dx = x[..., 0] - t0, x[..., 1] - x0
        return exact(x) * 4.0 * (dt * dt - dx * dx) / (w2 * w2)

    reach = CUT * width
    src = SourceSpec(
        f=f,
        support=((t0 - reach, t0 + reach), (x0 - reach, x0 + reach)),
        label=f"gaussian({t0:g},{x0:g};{width:g})",
    )
    return src, exact


def manufactured_convergence(
    nx: int = 161,
    levels: int = 3,
    t_range: tuple[float, float] = (-1.0, 5.0),
    x_range: tuple[float, float] = (-5.0, 5.0),
) -> ConvergenceCheck:
    """Grid L2 errors against the Gaussian solution on successively halved grids."""
    metric = minkowski(1)
    src, exact = gaussian_solution(0.5 * sum(t_range), 0.5 * sum(x_range))
    grid = WaveGrid.for_metrics([metric], t_range, x_range, nx)
    sizes: list[int] = []
    errors: list[float] = []
    for _ in range(levels):
        u = solve_cauchy(metric, grid, src)
        diff = u.values - exact(grid.points())
        errors.append(float(np.sqrt(grid.dt * grid.dx * np.sum(diff * diff))))
        sizes.append(grid.nx)
        grid = grid.refined()
    ratios = [coarse / fine for coarse, fine in zip(errors, errors[1:], strict=False)]
    lo, hi = RATIO_RANGE
    passed = all(lo <= r <= hi for r in ratios)
    return ConvergenceCheck(nx=sizes, errors=errors, ratios=ratios, passed=passed)
