"""CSV bundles of the counterexample geometries and extremal ray paths.

Each table is written under ``traces/`` and can be plotted with any tool:
the hyperboloid boundary with the diamond, the Kruskal plane with horizons,
singularity and the cylinder {r = r0}, and the FLRW cones of U and U' in
conformal coordinates.
"""

import logging
from collections.abc import Sequence

import numpy as np

from src.models.run_config import RunConfig
from src.models.run_report import RunReport
from src.observability.tracing import traced
from src.repositories.report_repository import ReportRepository
from src.spacetimes.cylinders import hyperboloid_half_width

logger = logging.getLogger(__name__)

SAMPLES = 241

Table = tuple[tuple[str, ...], list[tuple[float, ...]]]


def _rows(*columns: Sequence[float]) -> list[tuple[float, ...]]:
    return [tuple(float(v) for v in row) for row in zip(*columns, strict=True)]


def hyperboloid_tables(a: float, t_max: float = 3.0) -> dict[str, Table]:
    """Boundary |x| = b(t) over [-t_max, t_max] and the closed outline of the diamond."""
    t = np.linspace(-t_max, t_max, SAMPLES)
    b = hyperboloid_half_width(a, t)
    half = 0.5 * a
    diamond_t = np.array([-half, 0.0, half, 0.0, -half])
    diamond_x = np.array([0.0, half, 0.0, -half, 0.0])
    return {
        "hyperboloid-boundary": (("t", "x_right", "x_left"), _rows(t, b, -b)),
        "hyperboloid-diamond": (("t", "x"), _rows(diamond_t, diamond_x)),
    }


def kruskal_tables(r_S: float, r0: float, extent: float = 2.0) -> dict[str, Table]:
    """Horizons T = +-R, the singularity T^2 - R^2 = 1 and the cylinder {r = r0}.

    Kruskal coordinates are dimensionless; r_S enters only through the
    cylinder level w0 = (1 - r0/r_S) exp(r0/r_S).
    """
    R = np.linspace(-extent, extent, SAMPLES)
    singular = np.sqrt(1.0 + R * R)
    w0 = (1.0 - r0 / r_S) * np.exp(r0 / r_S)
    T = np.linspace(-extent, extent, SAMPLES)
    cylinder = np.sqrt(T * T - w0)
    return {
        "kruskal-horizons": (("R", "T_future", "T_past"), _rows(R, R, -R)),
        "kruskal-singularity": (("R", "T_future", "T_past"), _rows(R, singular, -singular)),
        "kruskal-cylinder": (("T", "R_right", "R_left"), _rows(T, cylinder, -cylinder)),
    }


def flrw_tables(H: float, R: float) -> dict[str, Table]:
    """Cone boundaries of U (opening upward) and U' (opening downward) over eta in (0, pi/H).

    Radii are clipped to [0, R]; the cylinder wall r = R is the last column.
    """
    horizon = np.pi / H
    eta = np.linspace(0.0, horizon, SAMPLES)
    upper = np.clip(eta + R - horizon, 0.0, R)
    lower = np.clip(R - eta, 0.0, R)
    wall = np.full_like(eta, R)
    header = ("eta", "r_U", "r_U_prime", "r_cylinder")
    return {"flrw-cones": (header, _rows(eta, upper, lower, wall))}


def scenario_tables(config: RunConfig) -> dict[str, Table]:
    geo = config.geometry
    if config.scenario == "hyperboloid":
        return hyperboloid_tables(geo.a)
    if config.scenario == "kruskal":
        return kruskal_tables(geo.r_S, geo.r0)
    radius = np.pi / geo.H + 0.5 if geo.R_cylinder is None else geo.R_cylinder
    return flrw_tables(geo.H, radius)


@traced("emit_figures")
def emit_figures(
    config: RunConfig, repository: ReportRepository, report: RunReport | None = None
) -> list[str]:
    """Write the geometry tables of the scenario and the witness ray paths of a report.

    Args:
        config: Run configuration selecting the scenario and its parameters
        repository: Destination of the CSV files
        report: Report whose causality scans supply ray paths; read from
            report.json when omitted

    Returns:
        Written file paths relative to the output directory

    Raises:
        DataError: no report given and report.json is missing or invalid
    """
    if report is None:
        report = repository.load_report()
    written = []
    for name, (header, rows) in scenario_tables(config).items():
        written.append(repository.write_table(name, header, rows))
    if report.causality is not None:
        scans = list(report.causality.scans)
        invariance = report.causality.invariance
        if invariance is not None:
            scans += [invariance.report_g, invariance.report_g_prime]
        for index, scan in enumerate(scans):
            prefix = f"witness-{index:02d}-{scan.region}-{scan.direction.value.lower()}"
            for path in scan.witness_paths:
                written.append(repository.save_witness_path(path, prefix))
    logger.info("wrote %d figure tables", len(written))
    return [str(p.relative_to(repository.output_dir)) for p in written]
