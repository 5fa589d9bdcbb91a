"""Unit tests for the geometry tables behind the figures.

This test explains what the tables should contain:
- The hyperboloid boundary and the closed outline of the diamond
- Horizons, singularity and the cylinder {r = r0} in the Kruskal plane
- The cone boundaries of U and U' in the conformal FLRW chart
"""

import numpy as np
import pytest

from src.models.run_config import RunConfig
from src.services.figures import (
    SAMPLES,
    flrw_tables,
    hyperboloid_tables,
    kruskal_tables,
    scenario_tables,
)
from src.spacetimes.kruskal import kruskal_r


@pytest.mark.unit
def test_hyperboloid_tables() -> None:
    """Test the boundary half width at t = 0 and the closed diamond outline."""
    tables = hyperboloid_tables(2.0)

    header, rows = tables["hyperboloid-boundary"]
    middle = rows[SAMPLES // 2]
    assert header == ("t", "x_right", "x_left")
    assert len(rows) == SAMPLES
    assert middle == pytest.approx((0.0, 2.0, -2.0))

    _, outline = tables["hyperboloid-diamond"]
    assert outline[0] == outline[-1]
    assert max(abs(t) + abs(x) for t, x in outline) == pytest.approx(1.0)


@pytest.mark.unit
def test_kruskal_tables() -> None:
    """Test that the singularity has T^2 - R^2 = 1 and the cylinder curve has r = r0."""
    tables = kruskal_tables(1.0, 1.5)

    _, horizons = tables["kruskal-horizons"]
    _, singularity = tables["kruskal-singularity"]
    _, cylinder = tables["kruskal-cylinder"]
    assert all(T == R and past == -R for R, T, past in horizons)
    np.testing.assert_allclose([T * T - R * R for R, T, _ in singularity], 1.0, rtol=1e-12)
    T = np.array([row[0] for row in cylinder])
    R = np.array([row[1] for row in cylinder])
    np.testing.assert_allclose(kruskal_r(T, R, 1.0), 1.5, atol=1e-9)


@pytest.mark.unit
def test_flrw_tables() -> None:
    """Test the cone radii at the ends of conformal time."""
    R = np.pi + 0.5

    header, rows = flrw_tables(1.0, R)["flrw-cones"]

    assert header == ("eta", "r_U", "r_U_prime", "r_cylinder")
    assert rows[0] == pytest.approx((0.0, 0.5, R, R))
    assert rows[-1] == pytest.approx((np.pi, R, 0.5, R))
    assert all(0.0 <= r <= R for row in rows for r in row[1:3])


@pytest.mark.unit
@pytest.mark.parametrize(
    "scenario,names",
    [
        ("hyperboloid", {"hyperboloid-boundary", "hyperboloid-diamond"}),
        ("kruskal", {"kruskal-horizons", "kruskal-singularity", "kruskal-cylinder"}),
        ("flrw", {"flrw-cones"}),
    ],
)
def test_scenario_tables_select_scenario(scenario: str, names: set[str]) -> None:
    """Test that each scenario gets its own tables."""
    config = RunConfig.model_validate({"scenario": scenario})

    assert set(scenario_tables(config)) == names
