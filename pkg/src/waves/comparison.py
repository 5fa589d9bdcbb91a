"""Source-to-solution maps and the g versus g' comparison harness.

Both maps are compared level by level on a refinement sequence. The
exterior difference D_ext (source-to-solution probes) or boundary difference
D_bdy (Neumann traces) must stay at the scheme's error level while the
interior difference D_int, taken over J+(U) inside the cylinder, stays large.
"""

import logging
from collections.abc import Callable, Sequence
from typing import Literal

import numpy as np
from numpy.typing import ArrayLike, NDArray
from pydantic import BaseModel, ConfigDict, Field
from scipy.interpolate import RegularGridInterpolator

from src.errors import ConfigError, DataError, GridError
from src.geometry.types import ChartedMetric, ChartMap, FloatArray
from src.models.reports import ComparisonLevel, ComparisonReport
from src.observability.tracing import traced
from src.spacetimes.cylinders import CylinderDomain
from src.waves.fields import BoundaryData, SourceSpec, WaveField
from src.waves.grid import WaveGrid, characteristic_speed
from src.waves.solver import solve_cauchy, solve_ibvp
from src.waves.traces import neumann_trace

logger = logging.getLogger(__name__)

# Differences below this multiple of the data scale are treated as round-off
ROUNDOFF_FACTOR = 1e-13
MIN_CONVERGENCE_RATIO = 3.0
_SIDES: tuple[Literal[-1, 1], Literal[-1, 1]] = (-1, 1)


class ProbeSet(BaseModel):
    """A source together with the exterior points its solution is read at."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    source: SourceSpec
    probes: list[tuple[float, float]] = Field(..., min_length=1)


class ComparisonSetup(BaseModel):
    """What a comparison run measures and what counts as passing.

    Attributes:
        scenario: Scenario name for the report
        mode: "dn" compares Neumann traces, "sts" compares exterior probes
        cylinder: The cylinder M in ambient coordinates
        interior: Indicator of J+(U) in ambient coordinates
        to_ambient: Strip chart map, required in "dn" mode
        tolerance: Allowed finest-level D_ext or D_bdy relative to the data scale
        interior_factor: Required ratio D_int / D_bdy (or D_ext) at the finest level
        require_interior: Whether a visible interior difference is part of the verdict
        seeds: Seeds recorded in the report
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    scenario: str
    mode: Literal["dn", "sts"]
    cylinder: CylinderDomain
    interior: Callable[[FloatArray], NDArray[np.bool_]]
    to_ambient: ChartMap | None = None
    tolerance: float = Field(1e-5, gt=0.0)
    interior_factor: float = Field(1e3, gt=0.0)
    require_interior: bool = True
    seeds: list[int] = Field(default_factory=list)


def future_cone_indicator(
    center: Sequence[float], radius: float
) -> Callable[[FloatArray], NDArray[np.bool_]]:
    """Indicator of the Minkowski causal future of a coordinate disc in 1+1 dimensions."""
    tc, xc = float(center[0]), float(center[1])
    reach = np.sqrt(2.0) * radius

    def indicator(x: FloatArray) -> NDArray[np.bool_]:
        return np.abs(x[..., 1] - xc) <= x[..., 0] - tc + reach

    return indicator


def _check_source_outside(cylinder: CylinderDomain, src: SourceSpec, grid: WaveGrid) -> None:
    f = src.values(grid)
    active = f != 0.0
    if np.any(active) and np.any(cylinder.clearance_at(grid.points()[active]) <= 0.0):
        raise DataError(f"source {src.label} is not supported outside the cylinder")


def _check_edges(
    metric: ChartedMetric, src: SourceSpec, grid: WaveGrid, probes: FloatArray
) -> None:
    """Reject probes that edge reflections can reach within the grid's time range."""
    c_max = characteristic_speed(metric, grid)
    (t_lo, _), (x_lo, x_hi) = src.support
    left, right = grid.x_range
    for edge, gap in ((left, x_lo - left), (right, right - x_hi)):
        earliest = t_lo + (gap + np.abs(probes[:, 1] - edge)) / c_max
        if np.any(probes[:, 0] >= earliest):
            raise GridError(f"edge at x={edge:g} contaminates probes; widen the x range")


@traced("source_to_solution")
def source_to_solution(
    metric: ChartedMetric,
    cylinder: CylinderDomain,
    src: SourceSpec,
    grid: WaveGrid,
    probes: ArrayLike,
    field: WaveField | None = None,
) -> FloatArray:
    """Exterior values of the solution of Box_g u = f at probe points.

    Args:
        metric: Ambient 1+1 metric
        cylinder: The cylinder M; source and probes must lie outside it
        src: Source supported outside M
        grid: Ambient grid
        probes: Points ``(k, 2)`` outside M inside the grid
        field: Precomputed solution for this metric, grid and source

    Returns:
        Bilinearly interpolated solution values, shape ``(k,)``

    Raises:
        DataError: the source meets M, or a probe lies in M or off the grid
        GridError: an edge reflection can reach a probe
    """
    pts = np.atleast_2d(np.asarray(probes, dtype=float))
    _check_source_outside(cylinder, src, grid)
    if np.any(cylinder.clearance_at(pts) <= 0.0):
        raise DataError("probes must lie outside the cylinder")
    (t0, t1), (x0, x1) = grid.t_range, grid.x_range
    if np.any((pts[:, 0] < t0) | (pts[:, 0] > t1) | (pts[:, 1] < x0) | (pts[:, 1] > x1)):
        raise DataError("probes must lie on the grid")
    _check_edges(metric, src, grid, pts)
    u = field if field is not None else solve_cauchy(metric, grid, src)
    interp = RegularGridInterpolator((grid.times, grid.xs), u.values, method="linear")
    return np.asarray(interp(pts), dtype=float)


def _interior_difference(
    setup: ComparisonSetup, grid: WaveGrid, u: WaveField, v: WaveField
) -> float:
    pts = grid.points()
    if setup.mode == "dn":
        if setup.to_ambient is None:
            raise ConfigError("dn comparisons need the strip chart map")
        ambient = np.asarray(setup.to_ambient.forward(pts), dtype=float)
        mask = setup.interior(ambient)
    else:
        mask = setup.interior(pts) & setup.cylinder.contains(pts)
    diff = np.abs(u.values - v.values)
    return float(np.max(diff[mask], initial=0.0))


def _compare_level(
    g: ChartedMetric,
    g_prime: ChartedMetric,
    setup: ComparisonSetup,
    inputs: Sequence[BoundaryData] | Sequence[ProbeSet],
    grid: WaveGrid,
) -> ComparisonLevel:
    d_map = 0.0
    d_int = 0.0
    reference = 0.0
    for item in inputs:
        if isinstance(item, BoundaryData):
            traces = item.traces(grid)
            u = solve_ibvp(g, grid, traces)
            v = solve_ibvp(g_prime, grid, traces)
            for side in _SIDES:
                a = neumann_trace(u, g, side).values
                b = neumann_trace(v, g_prime, side).values
                d_map = max(d_map, float(np.max(np.abs(a - b))))
                reference = max(reference, float(np.max(np.abs(a))))
        else:
            u = solve_cauchy(g, grid, item.source)
            v = solve_cauchy(g_prime, grid, item.source)
            a = source_to_solution(g, setup.cylinder, item.source, grid, item.probes, field=u)
            b = source_to_solution(g_prime, setup.cylinder, item.source, grid, item.probes, field=v)
            d_map = max(d_map, float(np.max(np.abs(a - b))))
            reference = max(reference, float(np.max(np.abs(a))))
        d_int = max(d_int, _interior_difference(setup, grid, u, v))
    level = ComparisonLevel(
        nt=grid.nt,
        nx=grid.nx,
        dt=grid.dt,
        dx=grid.dx,
        d_int=d_int,
        reference_norm=reference,
        d_bdy=d_map if setup.mode == "dn" else None,
        d_ext=d_map if setup.mode == "sts" else None,
    )
    logger.info(
        "%s %s nx=%d: D=%.3e D_int=%.3e ref=%.3e",
        setup.scenario,
        setup.mode,
        grid.nx,
        d_map,
        d_int,
        reference,
    )
    return level


def _ratios(values: list[float]) -> list[float | None]:
    pairs = zip(values, values[1:], strict=False)
    return [coarse / fine if fine > 0.0 else None for coarse, fine in pairs]


def converging(values: Sequence[float], floor: float) -> bool:
    """Whether each refinement step shrinks the difference by MIN_CONVERGENCE_RATIO.

    Steps where either level is at or below ``floor`` are round-off and are
    not judged; faster-than-second-order decay passes.
    """
    pairs = zip(values, values[1:], strict=False)
    return all(
        fine > 0.0 and coarse / fine >= MIN_CONVERGENCE_RATIO
        for coarse, fine in pairs
        if coarse > floor and fine > floor
    )


@traced("compare_maps")
def compare_maps(
    g: ChartedMetric,
    g_prime: ChartedMetric,
    setup: ComparisonSetup,
    inputs: Sequence[BoundaryData] | Sequence[ProbeSet],
    grids: Sequence[WaveGrid],
) -> ComparisonReport:
    """Compare the boundary data maps of g and g' across refinement levels.

    Both metrics see the same grids and inputs. The run passes when the
    finest-level map difference is within ``tolerance`` of the data scale,
    every refinement step above the round-off floor shrinks it at least
    second-order, and (when required) the interior difference exceeds the
    map difference by ``interior_factor`` and is nonzero.

    Raises:
        ConfigError: no grids or inputs, or inputs of the wrong kind for the mode
    """
    if not grids or not inputs:
        raise ConfigError("comparison needs at least one grid and one input")
    expected = BoundaryData if setup.mode == "dn" else ProbeSet
    if not all(isinstance(item, expected) for item in inputs):
        raise ConfigError(f"{setup.mode} comparisons take {expected.__name__} inputs")
    levels = [_compare_level(g, g_prime, setup, inputs, grid) for grid in grids]

    d_values = [(lv.d_bdy if setup.mode == "dn" else lv.d_ext) or 0.0 for lv in levels]
    scale = max(lv.reference_norm for lv in levels)
    floor = ROUNDOFF_FACTOR * scale
    ratios = _ratios(d_values)
    finest, finest_int = d_values[-1], levels[-1].d_int

    map_ok = finest <= setup.tolerance * scale
    interior_ok = not setup.require_interior or (
        finest_int > 0.0 and finest_int >= setup.interior_factor * finest
    )
    return ComparisonReport(
        scenario=setup.scenario,
        mode=setup.mode,
        levels=levels,
        d_ext=None if setup.mode == "dn" else finest,
        d_bdy=finest if setup.mode == "dn" else None,
        d_int=finest_int,
        ratios_ext=[] if setup.mode == "dn" else ratios,
        ratios_bdy=ratios if setup.mode == "dn" else [],
        roundoff_floor=floor,
        seeds=setup.seeds,
        passed=bool(map_ok and converging(d_values, floor) and interior_ok),
    )
