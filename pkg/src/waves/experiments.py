"""Ready-made g versus g' wave comparisons on the 1+1 hyperboloid cylinder.

The perturbation glues a flat-slicing de Sitter patch into Minkowski space
with a bump centred in an unreachable wedge. In "dn" runs the pair is pulled
back to the strip chart; in "sts" runs it stays in ambient coordinates.

Case 2 places the bump in the future wedge, where waves entering from the
boundary or from exterior sources pass through it. Case 1 places it in the
past wedge with the source later in time, so the solution vanishes on the bump.
"""

from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy.optimize import brentq

from src.errors import ConfigError
from src.geometry.types import ChartedMetric
from src.spacetimes.bump import BumpCutoff
from src.spacetimes.catalog import de_sitter_flat_slicing, minkowski
from src.spacetimes.cylinders import (
    hyperboloid_cylinder,
    hyperboloid_half_width,
    hyperboloid_strip_chart,
    hyperboloid_strip_metric,
)
from src.spacetimes.perturbation import PerturbationSpec, perturbed_metric
from src.spacetimes.regions import future_wedge_region, past_wedge_region
from src.waves.comparison import ComparisonSetup, ProbeSet, future_cone_indicator
from src.waves.fields import BoundaryData, bump_source, pulse_boundary_data
from src.waves.grid import WaveGrid


class WaveExperiment(BaseModel):
    """Everything compare_maps needs for one run."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    g: ChartedMetric
    g_prime: ChartedMetric
    setup: ComparisonSetup
    inputs: list[BoundaryData] | list[ProbeSet]
    grids: list[WaveGrid] = Field(..., min_length=1)


def _refinements(grid: WaveGrid, levels: int) -> list[WaveGrid]:
    if levels < 1:
        raise ConfigError(f"levels must be >= 1, got {levels}")
    grids = [grid]
    for _ in range(levels - 1):
        grids.append(grids[-1].refined())
    return grids


def _emission_time(a: float, t_hit: float, x_hit: float = 0.0) -> float:
    """Time t_e at which a null ray leaving x = -b(t_e) reaches (t_hit, x_hit)."""

    def arrival(t: float) -> float:
        return t + float(hyperboloid_half_width(a, t)) + x_hit - t_hit

    lo = t_hit - 10.0 * (a + abs(t_hit))
    if arrival(lo) >= 0.0:
        raise ConfigError(f"no boundary ray reaches the bump centre at t={t_hit:g}")
    return float(brentq(arrival, lo, t_hit))


def _ambient_pair(
    a: float,
    center: tuple[float, float],
    r_in: float,
    r_out: float,
    R_c: float,
    case: Literal[1, 2],
    enabled: bool,
) -> tuple[ChartedMetric, ChartedMetric]:
    base = minkowski(1)
    region = (future_wedge_region if case == 2 else past_wedge_region)(a, center, r_out)
    cutoff = BumpCutoff(center=center, inner_radius=r_in, outer_radius=r_out, enabled=enabled)
    spec = PerturbationSpec(
        base=base,
        patch=de_sitter_flat_slicing(R_c, t_ref=center[0]),
        cutoff=cutoff,
        region=region,
    )
    return base, perturbed_metric(spec)


def hyperboloid_dn_experiment(
    a: float = 2.0,
    R_c: float = 1.0,
    nx: int = 81,
    levels: int = 3,
    center: tuple[float, float] = (3.0, 0.0),
    r_in: float = 0.25,
    r_out: float = 0.5,
    t_range: tuple[float, float] = (-1.0, 6.0),
    enabled: bool = True,
) -> WaveExperiment:
    """Dirichlet-to-Neumann comparison with the bump in the future wedge.

    The inputs are one pulse per side timed to cross the bump.
    """
    base, perturbed = _ambient_pair(a, center, r_in, r_out, R_c, 2, enabled)
    g = hyperboloid_strip_metric(a, base)
    g_prime = hyperboloid_strip_metric(a, perturbed)
    emit = _emission_time(a, center[0], center[1])
    inputs = [pulse_boundary_data(emit, 0.5, side=-1), pulse_boundary_data(emit, 0.5, side=1)]
    grid = WaveGrid.for_metrics([g, g_prime], t_range, (-1.0, 1.0), nx, chart="t,xi")
    setup = ComparisonSetup(
        scenario=f"hyperboloid-a{a:g}",
        mode="dn",
        cylinder=hyperboloid_cylinder(a),
        interior=future_cone_indicator(center, r_out),
        to_ambient=hyperboloid_strip_chart(a),
    )
    return WaveExperiment(
        g=g, g_prime=g_prime, setup=setup, inputs=inputs, grids=_refinements(grid, levels)
    )


def hyperboloid_sts_experiment(
    a: float = 2.0,
    R_c: float = 1.0,
    nx: int = 281,
    levels: int = 3,
    case: Literal[1, 2] = 2,
    center: tuple[float, float] | None = None,
    r_in: float = 0.25,
    r_out: float = 0.5,
    x_half_width: float = 14.0,
    t_range: tuple[float, float] = (-4.0, 6.0),
    enabled: bool = True,
) -> WaveExperiment:
    """Source-to-solution comparison on the ambient rectangle.

    Case 2 sends a wave from an exterior source in the past through the
    future-wedge bump. Case 1 puts the bump in the past wedge and the source
    after it, so both solutions agree bitwise.

    The source is a disc of radius 0.5 left of the cylinder, at t = -3 in
    Case 2 and t = 0 in Case 1.
    """
    src_time = -3.0 if case == 2 else 0.0
    if center is None:
        center = (3.0, 0.0) if case == 2 else (-3.0, 0.0)
    src_center = (src_time, -(float(hyperboloid_half_width(a, src_time)) + 1.5))
    base, perturbed = _ambient_pair(a, center, r_in, r_out, R_c, case, enabled)
    source = bump_source(src_center, 0.5)
    probe_times = (0.5, 2.0, 4.0, 5.5)
    probes = [
        (t, side * (float(hyperboloid_half_width(a, t)) + 0.5))
        for t in probe_times
        for side in (-1.0, 1.0)
    ]
    grid = WaveGrid.for_metrics([base, perturbed], t_range, (-x_half_width, x_half_width), nx)
    setup = ComparisonSetup(
        scenario=f"hyperboloid-a{a:g}-case{case}",
        mode="sts",
        cylinder=hyperboloid_cylinder(a),
        interior=future_cone_indicator(center, r_out),
        tolerance=1e-5 if case == 2 else 1e-13,
        require_interior=case == 2,
    )
    return WaveExperiment(
        g=base,
        g_prime=perturbed,
        setup=setup,
        inputs=[ProbeSet(source=source, probes=probes)],
        grids=_refinements(grid, levels),
    )
