"""Causality suite: analytic checks, reachability scans and the perturbation spot-check."""

import logging

import numpy as np

from src.causality.certificates import certificate_for
from src.causality.reachability import (
    kruskal_confinement_check,
    perturbation_reachability_invariance,
    scenario_scan,
)
from src.geometry.metric import inverse_metric_batch
from src.models.reports import Direction, ReachabilityReport
from src.models.run_config import RunConfig
from src.models.run_report import CausalitySuiteResult, CheckResult
from src.observability.tracing import traced
from src.services.perturbations import build_perturbation
from src.spacetimes.catalog import conformal_time_span
from src.spacetimes.kruskal import (
    kruskal_r,
    kruskal_r_from_w,
    kruskal_residual,
    schwarzschild_to_kruskal,
)
from src.spacetimes.scenarios import Scenario, build_scenario

logger = logging.getLogger(__name__)

NORMAL_TOLERANCE = 1e-10
SPAN_TOLERANCE = 1e-8
RESIDUAL_TOLERANCE = 1e-12
ROUND_TRIP_TOLERANCE = 1e-9
KRUSKAL_SAMPLES = 10_000


def scenario_from_config(config: RunConfig) -> Scenario:
    geo = config.geometry
    return build_scenario(
        config.scenario,
        a=geo.a,
        n=geo.n,
        r_S=geo.r_S,
        r0=geo.r0,
        H=geo.H,
        R_cylinder=geo.R_cylinder,
    )


def _check(name: str, value: float, bound: float, detail: str = "") -> CheckResult:
    return CheckResult(
        name=name, value=value, bound=bound, passed=bool(value <= bound), detail=detail
    )


def boundary_normal_check(scenario: Scenario, a: float, n_points: int, seed: int) -> CheckResult:
    """max |g(df, df) - a^2| over seeded samples of the hyperboloid boundary."""
    pts = scenario.cylinder.sample_boundary(n_points, seed)
    df = scenario.cylinder.gradient(pts)
    ginv = inverse_metric_batch(scenario.metric, pts)
    norms = np.einsum("na,nab,nb->n", df, ginv, df)
    err = float(np.max(np.abs(norms - a * a)))
    return _check("boundary-normal-norm", err, NORMAL_TOLERANCE, f"{n_points} boundary points")


def conformal_span_check(H: float) -> CheckResult:
    """|eta(+inf) - eta(-inf) - pi/H| by quadrature."""
    err = abs(conformal_time_span(H) - np.pi / H)
    return _check("conformal-time-span", err, SPAN_TOLERANCE, "quadrature of sech(Ht) over R")


def kruskal_checks(r_S: float, seed: int) -> list[CheckResult]:
    """Implicit-radius residual on random (T, R) and the exterior round trip."""
    rng = np.random.default_rng(seed)
    T, R = rng.uniform(-2.0, 2.0, size=(2, 4 * KRUSKAL_SAMPLES))
    w = T * T - R * R
    keep = w < 0.99
    T, R, w = T[keep][:KRUSKAL_SAMPLES], R[keep][:KRUSKAL_SAMPLES], w[keep][:KRUSKAL_SAMPLES]
    residual = float(np.max(kruskal_residual(kruskal_r_from_w(w, r_S), w, r_S)))

    t = rng.uniform(-5.0, 5.0, size=KRUSKAL_SAMPLES)
    r = r_S * rng.uniform(1.01, 5.0, size=KRUSKAL_SAMPLES)
    T_ext, R_ext = schwarzschild_to_kruskal(t, r, r_S)
    round_trip = float(np.max(np.abs(kruskal_r(T_ext, R_ext, r_S) - r)))
    return [
        _check(
            "implicit-radius-residual",
            residual,
            RESIDUAL_TOLERANCE,
            f"{len(w)} points, relative",
        ),
        _check(
            "schwarzschild-round-trip",
            round_trip,
            ROUND_TRIP_TOLERANCE,
            f"{KRUSKAL_SAMPLES} exterior points",
        ),
    ]


def _scans(config: RunConfig, scenario: Scenario) -> list[ReachabilityReport]:
    rays = config.rays
    if config.scenario == "kruskal":
        geo = config.geometry
        return [
            kruskal_confinement_check(
                geo.r_S,
                geo.r0,
                rays.n_points,
                rays.seed,
                direction,
                workers=rays.workers,
                tol=rays.tolerance,
            )
            for direction in (Direction.FUTURE, Direction.PAST)
        ]
    return [
        scenario_scan(
            scenario, direction, rays.n_points, rays.seed, workers=rays.workers, tol=rays.tolerance
        )
        for direction in (Direction.FUTURE, Direction.PAST)
    ]


@traced("causality_suite")
def run_causality_suite(config: RunConfig) -> CausalitySuiteResult:
    """Run the causality suite for the configured scenario.

    The perturbation spot-check scans the bump's region under g and g' with
    a tenth of the configured rays (at least ten).
    """
    scenario = scenario_from_config(config)
    geo, rays = config.geometry, config.rays
    if config.scenario == "hyperboloid":
        checks = [boundary_normal_check(scenario, geo.a, 1000, rays.seed)]
    elif config.scenario == "flrw":
        checks = [conformal_span_check(geo.H)]
    else:
        checks = kruskal_checks(geo.r_S, rays.seed)
    scans = _scans(config, scenario)

    spec, g_prime = build_perturbation(config, scenario)
    invariance = perturbation_reachability_invariance(
        scenario.metric,
        g_prime,
        spec.region,
        scenario.cylinder,
        max(rays.n_points // 10, 10),
        rays.seed,
        direction=Direction.FUTURE,
        spec=spec,
        scenario=scenario.name,
        s_max=scenario.affine_budget,
        time_limit=scenario.time_limit,
        tol=rays.tolerance,
        certificate=certificate_for(scenario.name, scenario.params, future=True),
    )
    passed = (
        all(c.passed for c in checks)
        and all(report.confined for report in scans)
        and invariance.verdict
        and invariance.report_g.confined
    )
    logger.info("causality suite %s: passed=%s", scenario.name, passed)
    return CausalitySuiteResult(
        scenario=scenario.name, checks=checks, scans=scans, invariance=invariance, passed=passed
    )
