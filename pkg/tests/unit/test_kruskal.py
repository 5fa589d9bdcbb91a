"""Unit tests for Kruskal coordinates.

This test explains what the Kruskal layer should do:
- Solve the implicit radius relation to round-off
- Map the Schwarzschild exterior to Kruskal coordinates and back
- Reject points at or beyond the singularity
- Identify the black-hole and white-hole regions
"""

import numpy as np
import pytest

from src.errors import ConfigError, DomainError
from src.spacetimes.kruskal import (
    black_hole,
    kruskal_metric,
    kruskal_r,
    kruskal_r_from_w,
    kruskal_residual,
    kruskal_to_schwarzschild,
    schwarzschild_to_kruskal,
    white_hole,
)


@pytest.mark.unit
def test_implicit_radius_residual_on_random_points() -> None:
    """Test that (1 - r/r_S) exp(r/r_S) = T^2 - R^2 holds to 1e-12 on 10^4 points."""
    rng = np.random.default_rng(0)
    T, R = rng.uniform(-2.0, 2.0, size=(2, 40_000))
    w = T * T - R * R
    keep = w < 0.99
    T, R, w = T[keep][:10_000], R[keep][:10_000], w[keep][:10_000]

    r = kruskal_r(T, R, 1.0)

    assert np.max(kruskal_residual(r, w, 1.0)) <= 1e-12


@pytest.mark.unit
def test_radius_at_horizon_and_singularity_limits() -> None:
    """Test that w = 0 gives r = r_S and w close to 1 gives r close to 0."""
    r_S = 2.0

    assert kruskal_r_from_w(0.0, r_S) == pytest.approx(r_S, rel=1e-14)
    assert kruskal_r_from_w(1.0 - 1e-10, r_S) < 1e-3


@pytest.mark.unit
def test_radius_rejects_singularity() -> None:
    """Test that T^2 - R^2 >= 1 raises DomainError."""
    with pytest.raises(DomainError):
        kruskal_r(1.0, 0.0, 1.0)


@pytest.mark.unit
@pytest.mark.parametrize("t,r", [(0.0, 1.5), (2.0, 3.0), (-3.0, 10.0), (0.5, 1.01)])
def test_schwarzschild_round_trip(t: float, r: float) -> None:
    """Test that (t, r) -> (T, R) -> (t, r) recovers r within 1e-9."""
    r_S = 1.0

    T, R = schwarzschild_to_kruskal(t, r, r_S)
    t_back, r_back = kruskal_to_schwarzschild(T, R, r_S)

    assert r_back == pytest.approx(r, abs=1e-9)
    assert t_back == pytest.approx(t, abs=1e-9)


@pytest.mark.unit
def test_schwarzschild_to_kruskal_rejects_interior() -> None:
    """Test that r <= r_S raises DomainError."""
    with pytest.raises(DomainError):
        schwarzschild_to_kruskal(0.0, 0.5, 1.0)


@pytest.mark.unit
def test_kruskal_to_schwarzschild_rejects_non_exterior() -> None:
    """Test that points with R <= |T| raise DomainError."""
    with pytest.raises(DomainError):
        kruskal_to_schwarzschild(0.5, 0.2, 1.0)


@pytest.mark.unit
def test_hole_predicates() -> None:
    """Test the black-hole and white-hole regions."""
    assert black_hole((0.5, 0.1))
    assert not black_hole((-0.5, 0.1))
    assert white_hole((-0.5, 0.1))
    assert not white_hole((0.1, 0.5))


@pytest.mark.unit
def test_kruskal_metric_edge_is_the_singularity() -> None:
    """Test that the chart edge T^2 - R^2 = 1 is marked as a curvature singularity."""
    metric = kruskal_metric(1.0)

    assert metric.edge_kind == "singularity"
    assert metric.in_domain(np.array([0.9, 0.0]))
    assert not metric.in_domain(np.array([1.1, 0.0]))


@pytest.mark.unit
def test_kruskal_rejects_nonpositive_radius() -> None:
    """Test that r_S <= 0 raises ConfigError."""
    with pytest.raises(ConfigError):
        kruskal_metric(0.0)
