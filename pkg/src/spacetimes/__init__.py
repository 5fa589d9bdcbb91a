"""Explicit spacetimes, cylinders, regions and the perturbed-metric construction."""

from src.spacetimes.bump import BumpCutoff, bump_cutoff, smooth_step
from src.spacetimes.catalog import (
    conformal_chart_map,
    conformal_time,
    conformal_time_span,
    cosmic_time,
    de_sitter_flat_slicing,
    de_sitter_patch,
    flrw_bounce,
    flrw_conformal,
    minkowski,
    schwarzschild_exterior,
)
from src.spacetimes.cylinders import (
    CylinderDomain,
    flrw_cylinder,
    hyperboloid_cylinder,
    hyperboloid_half_width,
    hyperboloid_half_width_rate,
    hyperboloid_strip_chart,
    hyperboloid_strip_metric,
    schwarzschild_cylinder,
    slab_cylinder,
    slab_strip_chart,
    strip_chart,
)
from src.spacetimes.kruskal import (
    black_hole,
    kruskal_metric,
    kruskal_r,
    kruskal_to_schwarzschild,
    schwarzschild_to_kruskal,
    white_hole,
)
from src.spacetimes.perturbation import PerturbationSpec, perturbed_metric
from src.spacetimes.regions import (
    Region,
    ball_region,
    diamond_region,
    flrw_future_region,
    flrw_past_region,
    future_wedge_region,
    kruskal_hole_region,
    past_wedge_region,
)
from src.spacetimes.scenarios import SCENARIOS, Scenario, build_scenario
