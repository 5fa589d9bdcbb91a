"""Perturbed metric g' = (1 - chi) g + chi h glued from a base metric and a patch."""

import logging

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from src.errors import PreconditionError, SignatureError
from src.geometry.metric import signature_counts
from src.geometry.types import ChartedMetric, FloatArray, FoliatedMetric
from src.spacetimes.bump import BumpCutoff
from src.spacetimes.regions import Region

logger = logging.getLogger(__name__)

BLOCK_TOLERANCE = 1e-12


class PerturbationSpec(BaseModel):
    """Inputs of the perturbation construction.

    Attributes:
        base: The metric g
        patch: The constant-curvature patch h (or any smooth extension of it)
        cutoff: The bump chi
        region: The unreachable region U that must contain supp chi
        grid_points: Samples per axis used for the signature and block-form checks
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    base: ChartedMetric
    patch: ChartedMetric
    cutoff: BumpCutoff
    region: Region
    grid_points: int = Field(41, ge=5)

    def support_points(self) -> FloatArray:
        return self.cutoff.support_grid(self.grid_points)

    def support_in_region(self) -> bool:
        """Whether every sampled point of supp chi lies in the region U."""
        if not self.cutoff.enabled:
            return True
        pts = self.support_points()
        return bool(np.all(self.region.contains(pts)))


def _blend(spec: PerturbationSpec, x: FloatArray) -> FloatArray:
    g = np.array(spec.base.components(x), dtype=float, copy=True)
    chi = spec.cutoff(x)
    mask = chi > 0.0
    if np.any(mask):
        h = np.asarray(spec.patch.components(x[mask]), dtype=float)
        c = chi[mask][..., None, None]
        g[mask] = (1.0 - c) * g[mask] + c * h
    return g


def _check_support(spec: PerturbationSpec) -> None:
    pts = spec.support_points()
    if len(pts) == 0:
        return
    for metric in (spec.base, spec.patch):
        defect = FoliatedMetric.from_charted(metric).block_form_defect(pts)
        if defect > BLOCK_TOLERANCE:
            raise PreconditionError(
                f"{metric.label} is not block-diagonal in the shared time coordinate on supp chi"
            )
    g = _blend(spec, pts)
    neg, pos = signature_counts(g)
    if np.any(neg != 1) or np.any(pos != spec.base.dim - 1):
        raise SignatureError("perturbed metric is not Lorentzian on supp chi")
    g_inv_tt = np.linalg.inv(g)[..., 0, 0]
    if np.any(g_inv_tt >= 0.0):
        raise SignatureError("d tau is not timelike for the perturbed metric on supp chi")


def perturbed_metric(spec: PerturbationSpec) -> ChartedMetric:
    """Build g' = (1 - chi) g + chi h.

    The patch is only evaluated where chi > 0, so g' equals g exactly where
    chi = 0 and equals h exactly where chi = 1. The time orientation of g' is
    -grad tau inside supp chi and the base orientation elsewhere.

    Containment of supp chi in the region is advisory here: a violation is
    logged and g' is still built, and ``perturbation_reachability_invariance``
    reports it through ``support_in_region`` and a failed verdict.

    Raises:
        PreconditionError: g or h is not block-diagonal in tau on supp chi
        SignatureError: g' is not Lorentzian, or d tau is not timelike, on supp chi
    """
    base = spec.base
    if spec.cutoff.dim != base.dim or spec.patch.dim != base.dim:
        raise PreconditionError("base, patch and cutoff must share the chart dimension")
    if spec.cutoff.enabled:
        _check_support(spec)
    if not spec.support_in_region():
        logger.warning("supp chi is not contained in region %s", spec.region.label)

    def components(x: FloatArray) -> FloatArray:
        return _blend(spec, x)

    def orientation(x: FloatArray) -> FloatArray:
        out = np.array(base.orientation(x), dtype=float, copy=True)
        mask = spec.cutoff(x) > 0.0
        if np.any(mask):
            out[mask] = -np.linalg.inv(_blend(spec, x[mask]))[..., :, 0]
        return out

    def domain_margin(x: FloatArray) -> FloatArray:
        margin = np.array(base.margin(x), dtype=float, copy=True)
        mask = spec.cutoff(x) > 0.0
        if np.any(mask):
            margin[mask] = np.minimum(margin[mask], spec.patch.margin(x[mask]))
        return margin

    return ChartedMetric(
        dim=base.dim,
        coord_names=base.coord_names,
        components=components,
        orientation=orientation,
        domain_margin=domain_margin,
        edge_kind=base.edge_kind,
        label=f"{base.label}+{spec.patch.label}" if spec.cutoff.enabled else base.label,
    )
