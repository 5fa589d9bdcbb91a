"""Unit tests for geodesic integration.

This test explains what the integrator should do:
- Follow straight lines in Minkowski space with no constraint drift
- Follow 45 degree lines in the conformally flat FLRW and Kruskal charts
- Keep g(x', x') constant to the integration tolerance on curved metrics
- Stop at the cylinder boundary, the chart edge, the singularity and the time limit
- Reject spacelike tangents and start points off the chart
"""

import numpy as np
import pytest

from src.causality.geodesics import Termination, boundary_hit, integrate_geodesic
from src.errors import ChartExitError, PreconditionError, SingularityApproachError
from src.spacetimes.catalog import flrw_bounce, flrw_conformal, minkowski
from src.spacetimes.cylinders import slab_cylinder
from src.spacetimes.kruskal import black_hole, kruskal_metric


@pytest.mark.unit
def test_minkowski_null_geodesic_is_a_straight_line() -> None:
    """Test that a null ray in Minkowski space is x = t with zero drift."""
    path = integrate_geodesic(minkowski(1), (0.0, 0.0), (1.0, 1.0), s_max=5.0)

    assert path.termination == Termination.PARAMETER_LIMIT
    np.testing.assert_allclose(path.end_point, (5.0, 5.0), atol=1e-10)
    np.testing.assert_allclose(path.points[:, 0], path.points[:, 1], atol=1e-12)
    assert path.initial_norm == 0.0
    assert path.constraint_drift <= 1e-12


@pytest.mark.unit
def test_bounce_null_geodesic_keeps_constraint() -> None:
    """Test that a null ray of the bounce cosmology stays null to 1e-8 relative drift."""
    path = integrate_geodesic(flrw_bounce(1.0), (0.0, 0.0), (1.0, 1.0), s_max=3.0)

    assert path.relative_drift <= 1e-8
    assert np.all(np.diff(path.s) > 0.0)


@pytest.mark.unit
def test_spacelike_tangent_is_rejected() -> None:
    """Test that a spacelike initial tangent raises PreconditionError."""
    with pytest.raises(PreconditionError):
        integrate_geodesic(minkowski(1), (0.0, 0.0), (0.5, 1.0), s_max=1.0)


@pytest.mark.unit
def test_zero_tangent_is_rejected() -> None:
    """Test that a zero tangent raises PreconditionError."""
    with pytest.raises(PreconditionError):
        integrate_geodesic(minkowski(1), (0.0, 0.0), (0.0, 0.0), s_max=1.0)


@pytest.mark.unit
def test_start_outside_chart_raises_chart_exit() -> None:
    """Test that a start point before the big bang of the conformal chart raises ChartExitError."""
    with pytest.raises(ChartExitError):
        integrate_geodesic(flrw_conformal(1.0), (-0.5, 0.0), (1.0, 1.0), s_max=1.0)


@pytest.mark.unit
def test_start_beyond_singularity_raises_singularity_approach() -> None:
    """Test that a start point with T^2 - R^2 >= 1 raises SingularityApproachError."""
    with pytest.raises(SingularityApproachError):
        integrate_geodesic(kruskal_metric(1.0), (1.2, 0.0), (1.0, 0.0), s_max=1.0)


@pytest.mark.unit
def test_ray_stops_at_slab_boundary() -> None:
    """Test that a ray from the slab centre hits |x| = 1 at s = 1."""
    slab = slab_cylinder(1.0)

    path = integrate_geodesic(minkowski(1), (0.0, 0.0), (1.0, 1.0), s_max=5.0, cylinder=slab)
    hit = boundary_hit(path, slab)

    assert path.termination == Termination.BOUNDARY_HIT
    assert path.s[-1] == pytest.approx(1.0, abs=1e-10)
    assert hit is not None
    assert hit[0] == pytest.approx(1.0, abs=1e-10)
    assert hit[1].coords[1] == pytest.approx(1.0, abs=1e-10)


@pytest.mark.unit
def test_boundary_hit_rejects_path_starting_outside() -> None:
    """Test that a path starting outside the cylinder raises PreconditionError."""
    path = integrate_geodesic(minkowski(1), (0.0, 2.0), (1.0, 1.0), s_max=1.0)

    with pytest.raises(PreconditionError):
        boundary_hit(path, slab_cylinder(1.0))


@pytest.mark.unit
def test_time_limit_stops_ray() -> None:
    """Test that reaching |t| = time_limit ends the ray with ParameterLimit."""
    path = integrate_geodesic(minkowski(1), (0.0, 0.3), (1.0, 0.0), s_max=10.0, time_limit=2.0)

    assert path.termination == Termination.PARAMETER_LIMIT
    assert path.end_point[0] == pytest.approx(2.0, abs=1e-10)
    assert path.s[-1] < 10.0


@pytest.mark.unit
def test_black_hole_ray_ends_at_singularity() -> None:
    """Test that a future null ray inside the black hole ends with SingularityApproach."""
    path = integrate_geodesic(kruskal_metric(1.0), (0.5, 0.0), (1.0, 1.0), s_max=50.0)

    assert path.termination == Termination.SINGULARITY_APPROACH
    assert black_hole(path.end_point)


@pytest.mark.unit
def test_conformal_flrw_null_ray_is_straight() -> None:
    """Test that a null ray in conformal coordinates (eta, x) keeps x - eta constant."""
    eta0 = 0.5 * np.pi
    path = integrate_geodesic(flrw_conformal(1.0), (eta0, 0.0), (1.0, 1.0), s_max=3.0)

    assert path.termination == Termination.PARAMETER_LIMIT
    np.testing.assert_allclose(path.points[:, 1], path.points[:, 0] - eta0, atol=1e-9)
    assert path.end_point[0] > eta0


@pytest.mark.unit
def test_kruskal_null_ray_is_straight_until_singularity() -> None:
    """Test that a 45 degree Kruskal null ray keeps R - T constant and ends at the singularity."""
    path = integrate_geodesic(kruskal_metric(1.0), (0.5, 0.0), (1.0, 1.0), s_max=50.0)

    assert path.termination == Termination.SINGULARITY_APPROACH
    np.testing.assert_allclose(path.points[:, 1] - path.points[:, 0], -0.5, atol=1e-9)
