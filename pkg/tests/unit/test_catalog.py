"""Unit tests for the spacetime catalog.

This test explains what the catalog should do:
- Validate constructor parameters
- Provide conformal time of the bounce cosmology with range (0, pi/H)
- Relate the cosmic and conformal charts by a chart map
- Keep the exponential de Sitter slicing block-diagonal in time
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.errors import ConfigError, DomainError
from src.geometry.metric import metric_batch, pullback_metric
from src.geometry.types import FoliatedMetric
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
)


@pytest.mark.unit
@pytest.mark.parametrize("H", [0.5, 1.0, 3.0])
def test_conformal_time_span_is_pi_over_h(H: float) -> None:
    """Test that the integral of sech(Ht) over R equals pi/H to 1e-8."""
    assert abs(conformal_time_span(H) - np.pi / H) <= 1e-8


@pytest.mark.unit
def test_conformal_time_is_increasing_with_bounded_range() -> None:
    """Test that eta(t) increases strictly and stays inside (0, pi/H)."""
    H = 2.0
    t = np.linspace(-5.0, 5.0, 101)

    eta = conformal_time(H, t)

    assert np.all(np.diff(eta) > 0.0)
    assert np.all((eta > 0.0) & (eta < np.pi / H))
    assert conformal_time(H, 0.0) == pytest.approx(0.5 * np.pi / H, abs=1e-15)


@pytest.mark.unit
@settings(deadline=None, max_examples=50)
@given(t=st.floats(-8.0, 8.0))
def test_cosmic_time_inverts_conformal_time(t: float) -> None:
    """Test that cosmic_time(conformal_time(t)) = t."""
    H = 1.0

    assert cosmic_time(H, conformal_time(H, t)) == pytest.approx(t, abs=1e-8)


@pytest.mark.unit
def test_cosmic_time_rejects_out_of_range_eta() -> None:
    """Test that eta outside (0, pi/H) raises DomainError."""
    with pytest.raises(DomainError):
        cosmic_time(1.0, np.pi)


@pytest.mark.unit
def test_conformal_chart_pulls_back_bounce_to_conformal_form() -> None:
    """Test that the conformal chart map pulls the bounce back to a^2 (-d eta^2 + dx^2)."""
    H = 1.0
    pulled = pullback_metric(conformal_chart_map(H), flrw_bounce(H))
    pts = np.array([[0.4, 0.0], [1.5, 2.0], [2.9, -1.0]])

    np.testing.assert_allclose(
        metric_batch(pulled, pts), metric_batch(flrw_conformal(H), pts), rtol=1e-10
    )


@pytest.mark.unit
def test_conformal_chart_excludes_the_ends_of_time() -> None:
    """Test that eta = 0 and eta = pi/H lie outside the conformal chart."""
    metric = flrw_conformal(1.0)

    inside = metric.in_domain(np.array([[0.0, 0.0], [np.pi, 0.0], [1.0, 5.0]]))

    assert inside.tolist() == [False, False, True]


@pytest.mark.unit
@pytest.mark.parametrize(
    "build",
    [
        lambda: flrw_bounce(0.0),
        lambda: flrw_bounce(-1.0),
        lambda: de_sitter_patch(0.0),
        lambda: de_sitter_flat_slicing(-2.0),
        lambda: minkowski(0),
    ],
)
def test_constructors_reject_invalid_parameters(build: object) -> None:
    """Test that nonpositive rates, radii and dimensions raise ConfigError."""
    with pytest.raises(ConfigError):
        build()  # type: ignore[operator]


@pytest.mark.unit
def test_de_sitter_patch_excludes_pole() -> None:
    """Test that the pole hyperplane is outside the conformal patch."""
    metric = de_sitter_patch(1.0, pole=2.0)

    assert not metric.in_domain(np.array([2.0, 0.3]))
    assert metric.in_domain(np.array([2.5, 0.3]))


@pytest.mark.unit
@pytest.mark.parametrize("metric", [de_sitter_flat_slicing(1.0, t_ref=3.0), flrw_bounce(1.0)])
def test_time_dependent_metrics_are_block_diagonal(metric: object) -> None:
    """Test that the catalog metrics used as patches have the split form -kappa dt^2 + g_t."""
    pts = np.array([[2.5, -0.4], [3.0, 0.0], [3.5, 0.4]])

    defect = FoliatedMetric.from_charted(metric).block_form_defect(pts)  # type: ignore[arg-type]

    assert defect == 0.0
