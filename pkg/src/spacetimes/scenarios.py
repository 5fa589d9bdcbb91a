"""Scenario registry: named bundles of metric, cylinder and unreachable regions."""

from collections.abc import Callable
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict

from src.errors import ConfigError
from src.geometry.types import ChartedMetric
from src.spacetimes.catalog import flrw_conformal, minkowski
from src.spacetimes.cylinders import (
    CylinderDomain,
    flrw_cylinder,
    hyperboloid_cylinder,
    schwarzschild_cylinder,
)
from src.spacetimes.kruskal import kruskal_metric
from src.spacetimes.regions import (
    Region,
    diamond_region,
    flrw_future_region,
    flrw_past_region,
    kruskal_hole_region,
)


class Scenario(BaseModel):
    """A counterexample geometry ready for causality checks.

    Attributes:
        name: Registry key
        metric: Metric in the chart used for ray shooting
        cylinder: Cylinder M with timelike boundary
        future_region: Region whose causal future misses the boundary
        past_region: Region whose causal past misses the boundary
        time_limit: Rays stop once |first coordinate| reaches this value (None: no limit)
        affine_budget: Affine parameter budget per ray
        params: Parameters the scenario was built from
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    metric: ChartedMetric
    cylinder: CylinderDomain
    future_region: Region
    past_region: Region
    time_limit: float | None = None
    affine_budget: float
    params: dict[str, float]


def hyperboloid_scenario(a: float = 2.0, n: int = 1, **_: Any) -> Scenario:
    """Minkowski space with the hyperboloid cylinder; rays run until |t| = 10a."""
    diamond = diamond_region(a, n)
    return Scenario(
        name="hyperboloid",
        metric=minkowski(n),
        cylinder=hyperboloid_cylinder(a, n),
        future_region=diamond,
        past_region=diamond,
        time_limit=10.0 * a,
        affine_budget=40.0 * a,
        params={"a": a, "n": n},
    )


def kruskal_scenario(r_S: float = 1.0, r0: float = 1.5, **_: Any) -> Scenario:
    """Kruskal plane with the cylinder {r <= r0}; rays run into the singularity."""
    return Scenario(
        name="kruskal",
        metric=kruskal_metric(r_S),
        cylinder=schwarzschild_cylinder(r_S, r0),
        future_region=kruskal_hole_region(future=True),
        past_region=kruskal_hole_region(future=False),
        affine_budget=1e3 * r_S**2,
        params={"r_S": r_S, "r0": r0},
    )


def flrw_scenario(
    H: float = 1.0, R_cylinder: float | None = None, n: int = 1, **_: Any
) -> Scenario:
    """Bounce cosmology in the conformal chart with the cylinder |x| <= R."""
    radius = np.pi / H + 0.5 if R_cylinder is None else R_cylinder
    return Scenario(
        name="flrw",
        metric=flrw_conformal(H, n),
        cylinder=flrw_cylinder(radius, H, n),
        future_region=flrw_future_region(H, radius, n),
        past_region=flrw_past_region(H, radius, n),
        affine_budget=1e4 / H,
        params={"H": H, "R_cylinder": radius, "n": n},
    )


SCENARIOS: dict[str, Callable[..., Scenario]] = {
    "hyperboloid": hyperboloid_scenario,
    "kruskal": kruskal_scenario,
    "flrw": flrw_scenario,
}


def build_scenario(name: str, **params: Any) -> Scenario:
    """Look up a scenario by name and build it from keyword parameters.

    Raises:
        ConfigError: unknown scenario name
    """
    try:
        builder = SCENARIOS[name]
    except KeyError:
        raise ConfigError(f"unknown scenario {name!r}; choose from {sorted(SCENARIOS)}") from None
    return builder(**{k: v for k, v in params.items() if v is not None})
