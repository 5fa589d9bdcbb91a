"""Sampling-based verification that J+(U) or J-(U) misses the cylinder boundary.

A scan shoots null rays (and a timelike sub-sample) from seeded points of U,
integrates each until it hits the boundary, exhausts its budget or leaves the
chart, and reduces the outcomes in ray order. Sampling can only falsify; the
per-scenario certificate is evaluated on the same rays alongside.
"""

import logging
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from numpy.typing import ArrayLike

from src.causality.certificates import Certificate, certificate_for, kruskal_certificate
from src.causality.geodesics import DEFAULT_TOLERANCE, GeodesicPath, Termination, integrate_geodesic
from src.errors import ConfigError
from src.geometry.metric import metric_at
from src.geometry.types import ChartedMetric, FloatArray
from src.models.reports import (
    CertificateSummary,
    Direction,
    InvarianceVerdict,
    RayOutcome,
    ReachabilityReport,
    WitnessPath,
)
from src.observability.tracing import traced
from src.spacetimes.cylinders import CylinderDomain, schwarzschild_cylinder
from src.spacetimes.kruskal import kruskal_metric
from src.spacetimes.perturbation import PerturbationSpec
from src.spacetimes.regions import Region
from src.spacetimes.scenarios import Scenario

logger = logging.getLogger(__name__)

TIMELIKE_EVERY = 10
TIMELIKE_SPEED = 0.5


def null_direction(
    metric: ChartedMetric, x: FloatArray, e: FloatArray, speed: float = 1.0
) -> FloatArray:
    """Future-pointing causal vector (1, c e) along spatial unit direction e.

    c is the positive root of g_00 + 2 c g_0e + c^2 g_ee = 0, scaled by
    ``speed``; speed 1 gives a null vector and 0 < speed < 1 a timelike one.
    """
    g = metric_at(metric, x)
    g00 = g[0, 0]
    g0e = float(g[0, 1:] @ e)
    gee = float(e @ g[1:, 1:] @ e)
    c = (-g0e + np.sqrt(g0e * g0e - g00 * gee)) / gee
    v = np.concatenate([[1.0], speed * c * e])
    orient = np.asarray(metric.orientation(x[None, :]), dtype=float)[0]
    if float(v @ g @ orient) > 0.0:
        v = -v
    return v


def _spatial_directions(rng: np.random.Generator, n: int) -> list[FloatArray]:
    if n == 1:
        return [np.array([1.0]), np.array([-1.0])]
    raw = rng.standard_normal(n)
    return [raw / np.linalg.norm(raw)]


def _ray_plan(
    metric: ChartedMetric, starts: FloatArray, direction: Direction, seed: int
) -> list[tuple[str, FloatArray, FloatArray]]:
    """Initial data for every ray, in a fixed order."""
    rng = np.random.default_rng(seed + 1)
    n = metric.dim - 1
    sign = 1.0 if direction == Direction.FUTURE else -1.0
    plan: list[tuple[str, FloatArray, FloatArray]] = []
    for i, x in enumerate(starts):
        dirs = _spatial_directions(rng, n)
        for e in dirs:
            plan.append(("null", x, sign * null_direction(metric, x, e)))
        if i % TIMELIKE_EVERY == 0:
            plan.append(("timelike", x, sign * null_direction(metric, x, dirs[0], TIMELIKE_SPEED)))
    return plan


def _witness(
    path: GeodesicPath, cylinder: CylinderDomain, metric: ChartedMetric, label: str
) -> WitnessPath:
    return WitnessPath(
        label=label,
        coord_names=list(metric.coord_names),
        s=[float(s) for s in path.s],
        coords=[[float(c) for c in x] for x in path.points],
        clearance=[float(c) for c in cylinder.clearance_at(path.points)],
    )


def scan_points(
    metric: ChartedMetric,
    cylinder: CylinderDomain,
    starts: ArrayLike,
    direction: Direction,
    seed: int,
    *,
    scenario: str = "custom",
    region_label: str = "points",
    s_max: float = 100.0,
    time_limit: float | None = None,
    tol: float = DEFAULT_TOLERANCE,
    certificate: Certificate | None = None,
    workers: int = 1,
) -> ReachabilityReport:
    """Shoot rays from explicit start points and aggregate a report.

    Args:
        metric: Metric to integrate on
        cylinder: Cylinder whose boundary counts as a hit
        starts: Start points, shape ``(N, d)``
        direction: Future or past
        seed: Seed for direction sampling (recorded in the report)
        scenario: Scenario label for the report
        region_label: Label of the start region
        s_max: Affine parameter budget per ray
        time_limit: Optional bound on |x^0|
        tol: Integrator tolerance
        certificate: Optional per-ray analytic certificate
        workers: Thread count; results are reduced in ray order

    Returns:
        The reachability report
    """
    pts = np.atleast_2d(np.asarray(starts, dtype=float))
    plan = _ray_plan(metric, pts, direction, seed)

    def run(item: tuple[str, FloatArray, FloatArray]) -> GeodesicPath:
        _, x, v = item
        return integrate_geodesic(
            metric, x, v, s_max, tol=tol, cylinder=cylinder, time_limit=time_limit
        )

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            paths = list(pool.map(run, plan))
    else:
        paths = [run(item) for item in plan]

    outcomes: list[RayOutcome] = []
    cert_values: list[float] = []
    for i, ((kind, x, v), path) in enumerate(zip(plan, paths, strict=True)):
        clear = float(np.max(cylinder.clearance_at(path.points)))
        hit = path.termination == Termination.BOUNDARY_HIT or clear >= 0.0
        if hit:
            clear = max(clear, 0.0)
        value = certificate.evaluate(path) if certificate is not None else None
        if value is not None:
            cert_values.append(value)
        outcomes.append(
            RayOutcome(
                index=i,
                kind=kind,
                start=[float(c) for c in x],
                tangent=[float(c) for c in v],
                end=[float(c) for c in path.end_point],
                termination=path.termination.value,
                hit=hit,
                max_clearance=clear,
                relative_drift=path.relative_drift,
                certificate_value=value,
            )
        )

    summary = None
    if certificate is not None:
        worst = max(cert_values) if cert_values else None
        summary = CertificateSummary(
            name=certificate.name,
            value=worst,
            bound=certificate.bound,
            holds=worst is None or worst < certificate.bound,
        )

    witnesses: list[WitnessPath] = []
    if paths:
        extremal = int(np.argmax([o.max_clearance for o in outcomes]))
        witnesses.append(_witness(paths[extremal], cylinder, metric, f"ray-{extremal}"))

    report = ReachabilityReport(
        scenario=scenario,
        metric=metric.label,
        cylinder=cylinder.label,
        region=region_label,
        direction=direction,
        rays_total=len(outcomes),
        rays_hit_boundary=sum(o.hit for o in outcomes),
        min_boundary_clearance=max((o.max_clearance for o in outcomes), default=0.0),
        certificate=summary,
        outcomes=outcomes,
        witness_paths=witnesses,
        seed=seed,
    )
    logger.info(
        "%s %s scan: %d rays, %d boundary hits, max clearance %.3e",
        scenario,
        direction.value,
        report.rays_total,
        report.rays_hit_boundary,
        report.min_boundary_clearance,
    )
    return report


@traced("reachability_scan")
def reachability_scan(
    metric: ChartedMetric,
    cylinder: CylinderDomain,
    region: Region,
    direction: Direction,
    n_points: int,
    seed: int,
    *,
    scenario: str = "custom",
    s_max: float = 100.0,
    time_limit: float | None = None,
    tol: float = DEFAULT_TOLERANCE,
    certificate: Certificate | None = None,
    workers: int = 1,
) -> ReachabilityReport:
    """Sample ``n_points`` start points from U and scan rays from each.

    In 1+1 dimensions every start point gets both null directions; in higher
    dimensions one uniformly random spatial direction. Every tenth start
    point adds a timelike ray. The report is a deterministic function of the
    seed.

    Raises:
        ConfigError: sampled start points are not inside the cylinder
    """
    starts = region.sample(n_points, seed)
    if len(starts) and np.any(cylinder.clearance_at(starts) >= 0.0):
        raise ConfigError(f"region {region.label} is not inside {cylinder.label}")
    return scan_points(
        metric,
        cylinder,
        starts,
        direction,
        seed,
        scenario=scenario,
        region_label=region.label,
        s_max=s_max,
        time_limit=time_limit,
        tol=tol,
        certificate=certificate,
        workers=workers,
    )


@traced("scenario_scan")
def scenario_scan(
    scenario: Scenario,
    direction: Direction,
    n_points: int,
    seed: int,
    workers: int = 1,
    tol: float = DEFAULT_TOLERANCE,
) -> ReachabilityReport:
    """Reachability scan of a registered scenario with its own region and certificate."""
    future = direction == Direction.FUTURE
    return reachability_scan(
        scenario.metric,
        scenario.cylinder,
        scenario.future_region if future else scenario.past_region,
        direction,
        n_points,
        seed,
        scenario=scenario.name,
        s_max=scenario.affine_budget,
        time_limit=scenario.time_limit,
        tol=tol,
        certificate=certificate_for(scenario.name, scenario.params, future),
        workers=workers,
    )


def sample_hole_points(n_points: int, seed: int, future: bool, w_max: float = 0.9) -> FloatArray:
    """Points (sqrt(w) cosh a, sqrt(w) sinh a) in the black (or white) hole, w in (0, w_max)."""
    rng = np.random.default_rng(seed)
    w = rng.uniform(0.05, w_max, size=n_points)
    alpha = rng.uniform(-1.0, 1.0, size=n_points)
    sign = 1.0 if future else -1.0
    return np.column_stack([sign * np.sqrt(w) * np.cosh(alpha), np.sqrt(w) * np.sinh(alpha)])


@traced("kruskal_confinement_check")
def kruskal_confinement_check(
    r_S: float,
    r0: float,
    n_points: int,
    seed: int,
    direction: Direction = Direction.FUTURE,
    s_max: float = 1e3,
    workers: int = 1,
    tol: float = DEFAULT_TOLERANCE,
) -> ReachabilityReport:
    """Radial confinement in the black hole (future) or white hole (past).

    Start points are drawn in {r < r_S, T > 0} for the future scan and
    {r < r_S, T < 0} for the past scan. Rays ending at the singularity count
    as confined; the certificate checks that T^2 - R^2 increases strictly.

    Raises:
        ConfigError: r0 <= r_S
    """
    future = direction == Direction.FUTURE
    return scan_points(
        kruskal_metric(r_S),
        schwarzschild_cylinder(r_S, r0),
        sample_hole_points(n_points, seed, future),
        direction,
        seed,
        scenario="kruskal",
        region_label="black-hole" if future else "white-hole",
        s_max=s_max * r_S**2,
        tol=tol,
        certificate=kruskal_certificate(),
        workers=workers,
    )


def kruskal_exterior_control(
    r_S: float, r0: float, start: Sequence[float] = (0.0, 1.0), seed: int = 0
) -> ReachabilityReport:
    """Negative control: rays from an exterior point inside {r <= r0} reach r = r0."""
    return scan_points(
        kruskal_metric(r_S),
        schwarzschild_cylinder(r_S, r0),
        np.asarray([start], dtype=float),
        Direction.FUTURE,
        seed,
        scenario="kruskal",
        region_label="exterior-control",
        s_max=1e3 * r_S**2,
    )


@traced("perturbation_reachability_invariance")
def perturbation_reachability_invariance(
    g: ChartedMetric,
    g_prime: ChartedMetric,
    region: Region,
    cylinder: CylinderDomain,
    n_points: int,
    seed: int,
    *,
    direction: Direction = Direction.FUTURE,
    spec: PerturbationSpec | None = None,
    scenario: str = "custom",
    s_max: float = 100.0,
    time_limit: float | None = None,
    tol: float = DEFAULT_TOLERANCE,
    certificate: Certificate | None = None,
) -> InvarianceVerdict:
    """Run the same scan under g and g' and compare ray by ray.

    When ``spec`` is given, the verdict also requires supp chi to lie inside
    the region; a violation is flagged rather than raised.
    """
    reports = [
        reachability_scan(
            metric,
            cylinder,
            region,
            direction,
            n_points,
            seed,
            scenario=scenario,
            s_max=s_max,
            time_limit=time_limit,
            tol=tol,
            certificate=certificate,
        )
        for metric in (g, g_prime)
    ]
    report_g, report_gp = reports
    pairs = list(zip(report_g.outcomes, report_gp.outcomes, strict=True))
    identical_hits = all(a.hit == b.hit for a, b in pairs)
    end_diff = max(
        (float(np.max(np.abs(np.subtract(a.end, b.end)))) for a, b in pairs), default=0.0
    )
    clear_diff = max((abs(a.max_clearance - b.max_clearance) for a, b in pairs), default=0.0)
    support_ok = spec.support_in_region() if spec is not None else True
    if not support_ok:
        logger.warning(
            "supp chi is not inside %s; the invariance check does not apply", region.label
        )
    return InvarianceVerdict(
        scenario=scenario,
        direction=direction,
        support_in_region=support_ok,
        identical_hits=identical_hits,
        identical_verdict=report_g.confined == report_gp.confined,
        max_end_difference=end_diff,
        max_clearance_difference=clear_diff,
        report_g=report_g,
        report_g_prime=report_gp,
    )
