"""Component tests for the manufactured-solution convergence study.

This test explains what the solver self-check should do:
- Reproduce the Gaussian source term exactly
- Show second-order error decay under grid halving on Minkowski space
"""

import numpy as np
import pytest

from src.waves.convergence import RATIO_RANGE, gaussian_solution, manufactured_convergence


@pytest.mark.component
def test_gaussian_solution_peaks_at_its_centre() -> None:
    """Test that the exact solution is 1 at the centre and the source support is symmetric."""
    src, exact = gaussian_solution(2.0, 0.0, width=0.4)

    assert float(exact(np.array([2.0, 0.0]))) == pytest.approx(1.0)
    assert src.support[0] == pytest.approx((2.0 - 2.8, 2.0 + 2.8))
    assert src.support[1] == pytest.approx((-2.8, 2.8))


@pytest.mark.component
def test_gaussian_source_vanishes_on_the_light_cone() -> None:
    """Test that f = u_tt - u_xx is zero where |t - t0| = |x - x0|."""
    src, _ = gaussian_solution(2.0, 0.0)

    values = src.f(np.array([[2.3, 0.3], [1.5, 0.5], [2.0, 0.0]]))

    np.testing.assert_allclose(values, 0.0, atol=1e-12)


@pytest.mark.component
def test_manufactured_convergence_is_second_order() -> None:
    """Test that errors fall by a factor between 3 and 5 per halving."""
    check = manufactured_convergence(nx=161, levels=3)

    assert check.nx == [161, 321, 641]
    assert check.passed
    assert len(check.ratios) == 2
    assert all(RATIO_RANGE[0] <= r <= RATIO_RANGE[1] for r in check.ratios)
    assert check.errors[0] > check.errors[1] > check.errors[2]
