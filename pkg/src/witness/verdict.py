"""Non-isometry witness from critical values of the scalar curvature.

On the core of {chi = 1} the perturbed metric has constant curvature c. If
the base metric's curvature never takes a value within delta of c at a
near-critical point of the window, c is a regular value of S_g but a critical
value of S_{g'}, and no isometry can carry g' to g.
"""

import logging

import numpy as np

from src.errors import GridError
from src.geometry.curvature import DEFAULT_STEP
from src.geometry.types import ChartedMetric
from src.models.reports import WitnessStatus, WitnessVerdict
from src.observability.tracing import traced
from src.spacetimes.bump import BumpCutoff
from src.witness.scan import ScanGrid, curvature_scan

logger = logging.getLogger(__name__)

DEFAULT_TOL_C = 1e-4
DEFAULT_EPS0 = 1e-3
# Band half-width delta as a multiple of tol_c
BAND_FACTOR = 10.0
# Core inset in units of the curvature stencil radius 4h
STENCIL_REACH = 4.0


def _window(grid: ScanGrid) -> list[list[float]]:
    return [list(grid.lower), list(grid.upper)]


@traced("non_isometry_witness")
def non_isometry_witness(
    g: ChartedMetric,
    g_prime: ChartedMetric,
    bump: BumpCutoff,
    grid: ScanGrid,
    tol_c: float = DEFAULT_TOL_C,
    eps0: float = DEFAULT_EPS0,
    h: float = DEFAULT_STEP,
) -> WitnessVerdict:
    """Decide whether the curvature argument certifies that g and g' are not isometric.

    Args:
        g: Base metric
        g_prime: Perturbed metric built from g, a constant-curvature patch and ``bump``
        bump: The cutoff used to build g'
        grid: Scan window, usually a box around the bump
        tol_c: Allowed deviation of S_{g'} from its mean on the core
        eps0: Gradient norm below which a point of S_g counts as near-critical
        h: Finite-difference step for curvature

    Returns:
        NonIsometric when the certificate holds, Inconclusive when it does not
        (choose another curvature radius), NotApplicable when the bump is off

    Raises:
        GridError: no grid node lies in the core of {chi = 1}
    """
    delta = BAND_FACTOR * tol_c
    window = _window(grid)
    if not bump.enabled:
        return WitnessVerdict(
            status=WitnessStatus.NOT_APPLICABLE,
            delta=delta,
            eps0=eps0,
            tol_c=tol_c,
            window=window,
            verdict=False,
            message="no perturbation: g' equals g",
        )

    scan_prime = curvature_scan(g_prime, grid, h)
    inset = STENCIL_REACH * h * np.sqrt(grid.dim)
    core = bump.core_mask(scan_prime.points, inset)
    if not np.any(core):
        raise GridError("no scan node lies in the core of {chi = 1}; refine the grid")
    core_values = scan_prime.values[core]
    c = float(np.mean(core_values))
    residual = float(np.max(np.abs(core_values - c)))

    scan_base = curvature_scan(g, grid, h)
    band = np.abs(scan_base.values - c) < delta
    margin = float(np.min(scan_base.gradient_norm[band])) if np.any(band) else None
    holds = residual <= tol_c and (margin is None or margin > eps0)
    logger.info(
        "witness %s vs %s: c=%.6g residual=%.3e band=%d margin=%s",
        g.label,
        g_prime.label,
        c,
        residual,
        int(np.sum(band)),
        "none" if margin is None else f"{margin:.3e}",
    )
    if holds:
        message = (
            f"S_g' is constant {c:.6g} on the core "
            f"and {c:.6g} is a regular value of S_g in the window"
        )
    elif residual > tol_c:
        message = "S_g' is not constant on the core; refine the grid or enlarge the core"
    else:
        message = f"{c:.6g} is near-critical for S_g; re-parameterize R_c"
    return WitnessVerdict(
        status=WitnessStatus.NON_ISOMETRIC if holds else WitnessStatus.INCONCLUSIVE,
        c=c,
        constancy_residual=residual,
        regularity_margin=margin,
        band_points=int(np.sum(band)),
        delta=delta,
        eps0=eps0,
        tol_c=tol_c,
        window=window,
        verdict=holds,
        message=message,
    )
