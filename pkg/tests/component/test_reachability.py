"""Component tests for sampled reachability scans.

This test verifies the causal confinement verdicts end to end, from seeded
start points through geodesic integration to the aggregated report:
- The diamond of the hyperboloid is confined in both time directions
- The black and white holes never reach the Schwarzschild cylinder
- The FLRW regions U and U' are confined in their time directions
- Negative controls do reach the boundary
- Reports are deterministic functions of the seed
- The perturbation g' leaves the hit pattern of its region unchanged
- A cutoff reaching outside its region fails the invariance verdict
"""

import pytest

from src.causality.certificates import hyperboloid_certificate
from src.causality.reachability import (
    TIMELIKE_EVERY,
    kruskal_confinement_check,
    kruskal_exterior_control,
    perturbation_reachability_invariance,
    reachability_scan,
    scenario_scan,
)
from src.models.reports import Direction
from src.models.run_config import RunConfig
from src.services.perturbations import build_perturbation
from src.spacetimes.catalog import minkowski
from src.spacetimes.cylinders import hyperboloid_cylinder
from src.spacetimes.regions import ball_region, future_wedge_region
from src.spacetimes.scenarios import build_scenario


@pytest.mark.component
@pytest.mark.parametrize("direction", [Direction.FUTURE, Direction.PAST])
def test_hyperboloid_diamond_is_confined(direction: Direction) -> None:
    """Test that no ray from the diamond reaches the hyperboloid and the certificate holds."""
    scenario = build_scenario("hyperboloid", a=2.0, n=1)
    n_points = 20

    report = scenario_scan(scenario, direction, n_points=n_points, seed=1)

    assert report.rays_total == 2 * n_points + n_points // TIMELIKE_EVERY
    assert report.rays_hit_boundary == 0
    assert report.min_boundary_clearance < 0.0
    assert report.certificate is not None and report.certificate.holds
    assert report.certificate.value is not None
    assert report.certificate.value <= -1.0 + 1e-6
    assert report.confined
    assert all(o.relative_drift <= 1e-8 for o in report.outcomes)
    assert len(report.witness_paths) == 1


@pytest.mark.component
def test_hyperboloid_diamond_is_confined_in_higher_dimension() -> None:
    """Test confinement of the diamond for the 1+2 hyperboloid."""
    scenario = build_scenario("hyperboloid", a=2.0, n=2)

    report = scenario_scan(scenario, Direction.FUTURE, n_points=10, seed=4)

    assert report.confined


@pytest.mark.component
def test_past_of_future_wedge_reaches_boundary() -> None:
    """Test the negative control: past null rays from the future wedge hit the hyperboloid."""
    a = 2.0
    region = future_wedge_region(a, (3.0, 0.0), 0.5)

    report = reachability_scan(
        minkowski(1),
        hyperboloid_cylinder(a),
        region,
        Direction.PAST,
        10,
        seed=2,
        time_limit=10.0 * a,
        certificate=hyperboloid_certificate(a),
    )

    null_hits = [o.hit for o in report.outcomes if o.kind == "null"]
    assert all(null_hits)
    assert not report.confined
    assert report.min_boundary_clearance >= 0.0


@pytest.mark.component
@pytest.mark.parametrize("direction", [Direction.FUTURE, Direction.PAST])
def test_kruskal_holes_are_confined(direction: Direction) -> None:
    """Test that rays from the black (white) hole end at the singularity inside r < r0."""
    report = kruskal_confinement_check(1.0, 1.5, n_points=20, seed=3, direction=direction)

    assert report.rays_hit_boundary == 0
    assert report.confined
    assert all(o.termination == "SingularityApproach" for o in report.outcomes)
    assert report.region == ("black-hole" if direction == Direction.FUTURE else "white-hole")


@pytest.mark.component
def test_kruskal_exterior_control_reaches_cylinder() -> None:
    """Test that an outgoing ray from an exterior point inside r0 reaches r = r0."""
    report = kruskal_exterior_control(1.0, 1.5)

    assert report.rays_hit_boundary >= 1
    assert not report.confined


@pytest.mark.component
@pytest.mark.parametrize("direction", [Direction.FUTURE, Direction.PAST])
def test_flrw_regions_are_confined(direction: Direction) -> None:
    """Test that U (future) and U' (past) of the bounce cosmology miss |x| = R."""
    scenario = build_scenario("flrw", H=1.0)

    report = scenario_scan(scenario, direction, n_points=5, seed=5)

    assert report.rays_hit_boundary == 0
    assert report.certificate is not None and report.certificate.holds


@pytest.mark.component
def test_scan_is_deterministic_and_independent_of_workers() -> None:
    """Test that the same seed gives the same report with one or several workers."""
    scenario = build_scenario("hyperboloid", a=2.0, n=1)

    first = scenario_scan(scenario, Direction.FUTURE, n_points=10, seed=9)
    second = scenario_scan(scenario, Direction.FUTURE, n_points=10, seed=9)
    threaded = scenario_scan(scenario, Direction.FUTURE, n_points=10, seed=9, workers=3)

    assert first.model_dump() == second.model_dump()
    assert first.model_dump() == threaded.model_dump()


@pytest.mark.component
def test_perturbation_keeps_hit_pattern() -> None:
    """Test that scanning the bump's region under g and g' gives the same verdict."""
    config = RunConfig(scenario="hyperboloid")
    scenario = build_scenario("hyperboloid", a=2.0, n=1)
    spec, g_prime = build_perturbation(config, scenario)

    verdict = perturbation_reachability_invariance(
        scenario.metric,
        g_prime,
        spec.region,
        scenario.cylinder,
        10,
        seed=6,
        spec=spec,
        scenario="hyperboloid",
        s_max=scenario.affine_budget,
        time_limit=scenario.time_limit,
    )

    assert verdict.support_in_region
    assert verdict.identical_hits
    assert verdict.verdict
    assert verdict.report_g.confined and verdict.report_g_prime.confined


@pytest.mark.component
def test_invariance_fails_when_support_leaves_region() -> None:
    """Test that supp chi outside the region fails the invariance verdict even with equal hits."""
    config = RunConfig(scenario="hyperboloid")
    scenario = build_scenario("hyperboloid", a=2.0, n=1)
    spec, g_prime = build_perturbation(config, scenario)
    narrow = spec.model_copy(update={"region": ball_region((3.0, 0.0), 0.3)})

    verdict = perturbation_reachability_invariance(
        scenario.metric,
        g_prime,
        spec.region,
        scenario.cylinder,
        10,
        seed=6,
        spec=narrow,
        scenario="hyperboloid",
        s_max=scenario.affine_budget,
        time_limit=scenario.time_limit,
    )

    assert not verdict.support_in_region
    assert verdict.identical_hits
    assert not verdict.verdict
