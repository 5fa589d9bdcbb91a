"""Integration tests: full-size acceptance runs.

This test explains what the default configuration should establish:
- 1000-ray scans confine every scenario's regions
- The DN and source-to-solution maps of g and g' agree at the scheme's error level
- The interior solutions differ visibly on the causal future of the bump
- The curvature witness separates g and g'
"""

import pytest

from src.models.reports import WitnessStatus
from src.models.run_config import RunConfig
from src.services.causality_suite import run_causality_suite
from src.services.wave_suite import run_wave_suite
from src.services.witness_suite import run_witness_suite


@pytest.mark.integration
@pytest.mark.parametrize("scenario", ["hyperboloid", "kruskal", "flrw"])
def test_causality_acceptance(scenario: str) -> None:
    """Test that no ray of 1000 reaches the boundary and every check passes."""
    result = run_causality_suite(RunConfig(scenario=scenario))

    assert result.passed
    for scan in result.scans:
        assert scan.rays_total >= 1000
        assert scan.rays_hit_boundary == 0
    assert result.invariance is not None
    assert result.invariance.verdict


@pytest.mark.integration
def test_wave_acceptance_for_hyperboloid() -> None:
    """Test the convergence check and the DN and source-to-solution comparisons."""
    result = run_wave_suite(RunConfig(scenario="hyperboloid"))

    assert result.status == "ran"
    assert result.convergence is not None
    assert result.convergence.passed
    assert [c.mode for c in result.comparisons] == ["dn", "sts", "sts"]
    dn, case2, case1 = result.comparisons
    assert dn.passed
    assert dn.d_int > 0.0
    assert case2.passed
    assert case1.passed
    assert case1.d_ext == 0.0
    assert {side for side in (t.side for t in result.traces)} == {-1, 1}


@pytest.mark.integration
@pytest.mark.parametrize("scenario", ["hyperboloid", "flrw"])
def test_witness_acceptance(scenario: str) -> None:
    """Test that the curvature witness is conclusive for the flat-sliced patch."""
    result = run_witness_suite(RunConfig(scenario=scenario))

    assert result.verdict.status == WitnessStatus.NON_ISOMETRIC
    assert result.passed
