"""Geodesic shooting and sampled verification of causal confinement."""

from src.causality.certificates import (
    Certificate,
    certificate_for,
    flrw_certificate,
    hyperboloid_certificate,
    kruskal_certificate,
)
from src.causality.geodesics import GeodesicPath, Termination, boundary_hit, integrate_geodesic
from src.causality.reachability import (
    kruskal_confinement_check,
    kruskal_exterior_control,
    null_direction,
    perturbation_reachability_invariance,
    reachability_scan,
    scan_points,
    scenario_scan,
)
