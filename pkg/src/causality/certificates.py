"""Analytic confinement certificates evaluated along sampled rays.

Each certificate reduces a path to a single value that must stay strictly
below a bound. Rays are the independent probe; the certificate is the
per-scenario analytic estimate checked alongside them.
"""

from collections.abc import Callable

import numpy as np
from pydantic import BaseModel

from src.causality.geodesics import GeodesicPath
from src.geometry.types import FloatArray

PathCheck = Callable[[GeodesicPath, FloatArray], float | None]


class Certificate(BaseModel):
    """A named per-path check of the form value < bound.

    Attributes:
        name: Identifier written into reports
        bound: Strict upper bound for the per-path value
        check: Maps (path, start point) to a value, or None when the check does not apply
    """

    model_config = {"arbitrary_types_allowed": True, "frozen": True}

    name: str
    bound: float
    check: PathCheck

    def evaluate(self, path: GeodesicPath) -> float | None:
        return self.check(path, np.asarray(path.points[0]))


def hyperboloid_certificate(a: float) -> Certificate:
    """max f <= -a^2/4 + 1e-6 on ray samples with |x| >= a/2.

    Closer to the axis f < 0 holds trivially since |x| < a there.
    """

    def check(path: GeodesicPath, _start: FloatArray) -> float | None:
        rho = np.linalg.norm(path.points[:, 1:], axis=-1)
        far = rho >= 0.5 * a
        if not np.any(far):
            return None
        f = rho[far] ** 2 - a * rho[far] - path.points[far, 0] ** 2
        return float(np.max(f))

    return Certificate(name="hyperboloid-quarter-square", bound=-0.25 * a * a + 1e-6, check=check)


def flrw_certificate(H: float, future: bool) -> Certificate:
    """Coordinate distance travelled stays below the remaining conformal time.

    For future rays the remaining conformal time is pi/H - eta0, for past
    rays it is eta0. The value is distance minus remaining time.
    """
    horizon = np.pi / H

    def check(path: GeodesicPath, start: FloatArray) -> float | None:
        travelled = np.linalg.norm(path.points[:, 1:] - start[1:], axis=-1)
        remaining = horizon - start[0] if future else start[0]
        return float(np.max(travelled) - remaining)

    return Certificate(name="flrw-conformal-range", bound=0.0, check=check)


def kruskal_certificate() -> Certificate:
    """T^2 - R^2 strictly increasing along the ray; value is minus the smallest increment."""

    def check(path: GeodesicPath, _start: FloatArray) -> float | None:
        w = path.points[:, 0] ** 2 - path.points[:, 1] ** 2
        if len(w) < 2:
            return None
        return float(-np.min(np.diff(w)))

    return Certificate(name="kruskal-monotone-w", bound=0.0, check=check)


def certificate_for(scenario: str, params: dict[str, float], future: bool) -> Certificate | None:
    """Certificate matching a registered scenario, or None if there is none."""
    if scenario == "hyperboloid":
        return hyperboloid_certificate(params["a"])
    if scenario == "flrw":
        return flrw_certificate(params["H"], future)
    if scenario == "kruskal":
        return kruskal_certificate()
    return None
