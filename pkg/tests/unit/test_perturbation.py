"""Unit tests for the perturbed metric.

This test explains what the gluing construction should do:
- Leave the base metric untouched where chi = 0
- Equal the patch exactly where chi = 1
- Refuse patches that are not block-diagonal in the shared time coordinate
- Report whether supp chi lies inside the unreachable region, warning but not failing when not
"""

import logging

import numpy as np
import pytest

from src.errors import PreconditionError
from src.geometry.curvature import scalar_curvature
from src.geometry.metric import metric_batch
from src.spacetimes.bump import bump_cutoff
from src.spacetimes.catalog import de_sitter_flat_slicing, minkowski
from src.spacetimes.cylinders import hyperboloid_strip_metric
from src.spacetimes.perturbation import PerturbationSpec, perturbed_metric
from src.spacetimes.regions import ball_region, future_wedge_region


def _spec(center: tuple[float, float] = (3.0, 0.0), region_radius: float = 0.6) -> PerturbationSpec:
    return PerturbationSpec(
        base=minkowski(1),
        patch=de_sitter_flat_slicing(1.0, t_ref=center[0]),
        cutoff=bump_cutoff(center, 0.25, 0.5),
        region=future_wedge_region(2.0, center, region_radius),
    )


@pytest.mark.unit
def test_perturbed_metric_equals_base_off_support() -> None:
    """Test that g' = g exactly where chi = 0."""
    g_prime = perturbed_metric(_spec())
    pts = np.array([[0.0, 0.0], [3.0, 0.6], [5.0, -1.0]])

    np.testing.assert_array_equal(metric_batch(g_prime, pts), metric_batch(minkowski(1), pts))


@pytest.mark.unit
def test_perturbed_metric_equals_patch_on_core() -> None:
    """Test that g' = h exactly where chi = 1."""
    spec = _spec()
    g_prime = perturbed_metric(spec)
    pts = np.array([[3.0, 0.0], [3.1, 0.1], [2.85, -0.1]])

    np.testing.assert_array_equal(metric_batch(g_prime, pts), metric_batch(spec.patch, pts))


@pytest.mark.unit
def test_perturbed_metric_is_lorentzian_in_transition_band() -> None:
    """Test that g' passes the signature check where 0 < chi < 1."""
    g_prime = perturbed_metric(_spec())
    band = np.array([[3.0, 0.3], [3.0, -0.45], [3.35, 0.0]])

    g = metric_batch(g_prime, band)

    assert np.all(g[:, 0, 1] == 0.0)


@pytest.mark.unit
def test_perturbed_metric_carries_patch_curvature() -> None:
    """Test that S_g' = 2/R_c^2 at the bump centre and 0 far away."""
    g_prime = perturbed_metric(_spec())

    assert scalar_curvature(g_prime, (3.0, 0.0)) == pytest.approx(2.0, abs=1e-5)
    assert scalar_curvature(g_prime, (0.0, 0.0)) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.unit
def test_perturbed_metric_rejects_non_block_diagonal_patch() -> None:
    """Test that a patch with mixed time-space components raises PreconditionError."""
    spec = PerturbationSpec(
        base=minkowski(1),
        patch=hyperboloid_strip_metric(2.0, minkowski(1)),
        cutoff=bump_cutoff((3.0, 0.5), 0.1, 0.2),
        region=ball_region((3.0, 0.5), 0.3),
    )

    with pytest.raises(PreconditionError):
        perturbed_metric(spec)


@pytest.mark.unit
def test_support_in_region() -> None:
    """Test the containment report of supp chi in U."""
    inside = _spec()
    outside = inside.model_copy(update={"region": ball_region((3.0, 0.0), 0.3)})
    disabled = inside.model_copy(update={"cutoff": inside.cutoff.disabled()})

    assert inside.support_in_region()
    assert not outside.support_in_region()
    assert disabled.support_in_region()


@pytest.mark.unit
def test_disabled_cutoff_reproduces_base() -> None:
    """Test that chi = 0 gives g' = g everywhere, including the bump centre."""
    spec = _spec()
    g_prime = perturbed_metric(spec.model_copy(update={"cutoff": spec.cutoff.disabled()}))

    centre = np.array([[3.0, 0.0]])
    np.testing.assert_array_equal(metric_batch(g_prime, centre), metric_batch(minkowski(1), centre))
    assert g_prime.label == minkowski(1).label


@pytest.mark.unit
def test_support_outside_region_is_logged_not_raised(caplog: pytest.LogCaptureFixture) -> None:
    """Test that supp chi leaving the region only warns and still builds g'."""
    spec = _spec().model_copy(update={"region": ball_region((3.0, 0.0), 0.3)})

    with caplog.at_level(logging.WARNING, logger="src.spacetimes.perturbation"):
        g_prime = perturbed_metric(spec)

    assert "not contained in region" in caplog.text
    np.testing.assert_array_equal(
        metric_batch(g_prime, np.array([[3.0, 0.0]])), metric_batch(spec.patch, [[3.0, 0.0]])
    )
