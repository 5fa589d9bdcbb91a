"""Unit tests for Christoffel symbols and curvature.

This test explains what the curvature layer should do:
- Return symmetric Christoffel symbols from exact or finite-difference derivatives
- Reproduce the scalar curvature of the catalog metrics
- Report vanishing Ricci curvature for the Schwarzschild exterior
"""

import numpy as np
import pytest

from src.errors import DomainError
from src.geometry.curvature import (
    christoffel,
    metric_derivatives,
    ricci_batch,
    scalar_curvature,
    scalar_curvature_batch,
)
from src.spacetimes.catalog import (
    de_sitter_flat_slicing,
    de_sitter_patch,
    flrw_bounce,
    flrw_conformal,
    minkowski,
    schwarzschild_exterior,
)


@pytest.mark.unit
def test_minkowski_scalar_curvature_vanishes() -> None:
    """Test that Minkowski space has S = 0."""
    pts = np.array([[0.0, 0.0], [1.0, -2.0], [-3.0, 4.0]])

    values = scalar_curvature_batch(minkowski(1), pts)

    np.testing.assert_allclose(values, 0.0, atol=1e-8)


@pytest.mark.unit
@pytest.mark.parametrize("H", [0.5, 1.0, 2.0])
def test_bounce_scalar_curvature_is_two_h_squared(H: float) -> None:
    """Test that -dt^2 + cosh^2(Ht) dx^2 has S = 2 H^2."""
    S = scalar_curvature(flrw_bounce(H), (0.3 / H, 1.0))

    assert S == pytest.approx(2.0 * H * H, abs=1e-6)


@pytest.mark.unit
def test_conformal_chart_has_same_curvature_as_cosmic_chart() -> None:
    """Test that the conformal-time form of the bounce also has S = 2 H^2."""
    H = 1.0

    S = scalar_curvature(flrw_conformal(H), (2.0, 0.5))

    assert S == pytest.approx(2.0 * H * H, abs=1e-6)


@pytest.mark.unit
@pytest.mark.parametrize("R_c", [0.5, 1.0, 2.0])
def test_de_sitter_patch_has_constant_curvature(R_c: float) -> None:
    """Test that the conformal de Sitter patch has S = 2/R_c^2 in 1+1 dimensions."""
    S = scalar_curvature(de_sitter_patch(R_c, pole=0.0), (1.5, 0.2))

    assert S == pytest.approx(2.0 / R_c**2, abs=1e-6)


@pytest.mark.unit
@pytest.mark.parametrize("R_c", [0.5, 1.0, 2.0])
def test_flat_slicing_has_constant_curvature(R_c: float) -> None:
    """Test that the exponential slicing of de Sitter space has S = 2/R_c^2."""
    S = scalar_curvature(de_sitter_flat_slicing(R_c, t_ref=3.0), (3.1, -0.2))

    assert S == pytest.approx(2.0 / R_c**2, abs=1e-6)


@pytest.mark.unit
def test_flat_slicing_curvature_in_higher_dimension() -> None:
    """Test that the 1+2 exponential slicing has S = n(n+1)/R_c^2 = 6/R_c^2."""
    S = scalar_curvature(de_sitter_flat_slicing(1.0, n=2), (0.1, 0.2, -0.3))

    assert S == pytest.approx(6.0, abs=1e-6)


@pytest.mark.unit
def test_schwarzschild_exterior_is_ricci_flat() -> None:
    """Test that sampled Ricci components of Schwarzschild vanish to 1e-5 / r_S^2."""
    r_S = 2.0
    pts = np.array([[0.0, 3.0, 1.0, 0.0], [1.0, 5.0, 2.0, 1.0], [-2.0, 8.0, 0.7, 3.0]])

    ric = ricci_batch(schwarzschild_exterior(r_S), pts)

    assert np.max(np.abs(ric)) <= 1e-5 / r_S**2


@pytest.mark.unit
def test_christoffel_symbols_are_symmetric() -> None:
    """Test that Gamma^l_{mn} is symmetric in its lower indices."""
    gamma = christoffel(schwarzschild_exterior(1.0), (0.0, 2.5, 1.1, 0.4))

    np.testing.assert_allclose(gamma, np.swapaxes(gamma, 1, 2), atol=1e-14)


@pytest.mark.unit
def test_bounce_christoffel_symbols_match_closed_form() -> None:
    """Test that Gamma^t_{xx} = a a' and Gamma^x_{tx} = a'/a for a = cosh(Ht)."""
    H, t = 1.0, 0.4
    a, da = np.cosh(H * t), H * np.sinh(H * t)

    gamma = christoffel(flrw_bounce(H), (t, 0.0))

    assert gamma[0, 1, 1] == pytest.approx(a * da, rel=1e-12)
    assert gamma[1, 0, 1] == pytest.approx(da / a, rel=1e-12)


@pytest.mark.unit
def test_finite_difference_derivatives_match_exact_ones() -> None:
    """Test that the fourth-order stencil reproduces exact metric derivatives."""
    exact = schwarzschild_exterior(1.0)
    numeric = exact.model_copy(update={"derivatives": None})
    pts = np.array([[0.0, 2.0, 1.0, 0.5]])

    np.testing.assert_allclose(
        metric_derivatives(numeric, pts), metric_derivatives(exact, pts), atol=1e-9
    )


@pytest.mark.unit
def test_curvature_stencil_outside_chart_raises() -> None:
    """Test that a stencil crossing the chart edge raises DomainError."""
    metric = flrw_conformal(1.0)

    with pytest.raises(DomainError):
        scalar_curvature(metric, (1e-3, 0.0))
