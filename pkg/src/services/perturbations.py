"""Scenario-aware construction of the perturbed metric g' from a run configuration."""

from typing import NamedTuple

from src.geometry.types import ChartedMetric
from src.models.run_config import RunConfig
from src.spacetimes.bump import BumpCutoff
from src.spacetimes.catalog import de_sitter_flat_slicing, de_sitter_patch
from src.spacetimes.perturbation import PerturbationSpec, perturbed_metric
from src.spacetimes.regions import Region, future_wedge_region
from src.spacetimes.scenarios import Scenario


class BumpChoice(NamedTuple):
    center: tuple[float, ...]
    r_in: float
    r_out: float
    R_c: float


# Bumps inside each scenario's future-unreachable region: (centre, r_in, r_out, R_c)
SCENARIO_BUMPS: dict[str, BumpChoice] = {
    "hyperboloid": BumpChoice((3.0, 0.0), 0.25, 0.5, 1.0),
    "kruskal": BumpChoice((0.8, 0.0), 0.05, 0.1, 1.0),
    "flrw": BumpChoice((2.0, 0.0), 0.2, 0.4, 0.5),
}


def resolve_bump(config: RunConfig, dim: int) -> BumpChoice:
    """Fill unset bump parameters from the scenario defaults and pad the centre to ``dim``."""
    default = SCENARIO_BUMPS[config.scenario]
    bump = config.bump
    center = tuple(bump.center) if bump.center is not None else default.center
    center = center + (0.0,) * (dim - len(center))
    return BumpChoice(
        center=center,
        r_in=bump.r_in if bump.r_in is not None else default.r_in,
        r_out=bump.r_out if bump.r_out is not None else default.r_out,
        R_c=bump.R_c if bump.R_c is not None else default.R_c,
    )


def perturbation_region(config: RunConfig, scenario: Scenario, choice: BumpChoice) -> Region:
    """The unreachable region the bump is meant to sit in."""
    if config.scenario == "hyperboloid":
        return future_wedge_region(config.geometry.a, choice.center, choice.r_out)
    return scenario.future_region


def build_perturbation(
    config: RunConfig, scenario: Scenario
) -> tuple[PerturbationSpec, ChartedMetric]:
    """The perturbation spec and g' for a scenario.

    The patch is the flat-slicing de Sitter metric referenced at the bump
    time, or the conformal patch when a pole is configured.

    Raises:
        ConfigError: the bump radii or the region are invalid
        PreconditionError: base or patch is not block-diagonal on supp chi
    """
    choice = resolve_bump(config, scenario.metric.dim)
    n = scenario.metric.dim - 1
    if config.bump.pole is None:
        patch = de_sitter_flat_slicing(choice.R_c, t_ref=choice.center[0], n=n)
    else:
        patch = de_sitter_patch(choice.R_c, pole=config.bump.pole, n=n)
    spec = PerturbationSpec(
        base=scenario.metric,
        patch=patch,
        cutoff=BumpCutoff(
            center=choice.center, inner_radius=choice.r_in, outer_radius=choice.r_out
        ),
        region=perturbation_region(config, scenario, choice),
    )
    return spec, perturbed_metric(spec)
