"""Domain types for chart-based Lorentzian geometry.

Evaluators follow one batch convention throughout the package: they take a
coordinate array of shape ``(..., d)`` and return arrays whose leading axes
match the input batch shape:

- ``components``: ``(..., d, d)`` metric components g_{mu nu}
- ``orientation``: ``(..., d)`` components of a timelike vector field T
- ``derivatives``: ``(..., d, d, d)`` with index order ``[lam, mu, nu]`` for
  the partial derivative d_lam g_{mu nu}
- ``domain_margin``: ``(...)`` continuous, strictly positive inside the chart
"""

from collections.abc import Callable
from enum import Enum
from typing import Any, Literal

import numpy as np
from numpy.typing import ArrayLike, NDArray
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

FloatArray = NDArray[np.float64]
Evaluator = Callable[[FloatArray], FloatArray]


class Point(BaseModel):
    """A point given by its coordinate values in a named chart.

    Attributes:
        coords: Coordinate values (t, x1, ..., xn)
    """

    model_config = ConfigDict(frozen=True)

    coords: tuple[float, ...] = Field(..., min_length=1, description="Coordinate values")

    @field_validator("coords")
    @classmethod
    def validate_finite(cls, v: tuple[float, ...]) -> tuple[float, ...]:
        """Reject NaN and infinite coordinates."""
        if not all(np.isfinite(c) for c in v):
            raise ValueError("coordinates must be finite")
        return v

    @property
    def dim(self) -> int:
        return len(self.coords)

    def as_array(self) -> FloatArray:
        return np.asarray(self.coords, dtype=float)


class Tangent(BaseModel):
    """A tangent vector attached to a base point.

    Attributes:
        base: Point the vector is attached to
        components: Contravariant components v^mu in the chart basis
    """

    model_config = ConfigDict(frozen=True)

    base: Point
    components: tuple[float, ...]

    @model_validator(mode="after")
    def validate_length(self) -> "Tangent":
        """Components must have the same length as the base coordinates."""
        if len(self.components) != self.base.dim:
            raise ValueError(
                f"tangent has {len(self.components)} components, base point has {self.base.dim}"
            )
        return self

    def as_array(self) -> FloatArray:
        return np.asarray(self.components, dtype=float)


class CausalKind(str, Enum):
    """Causal character of a tangent vector."""

    TIMELIKE = "Timelike"
    NULL = "Null"
    SPACELIKE = "Spacelike"
    ZERO = "Zero"


class TimeSense(str, Enum):
    """Time orientation of a causal vector relative to the orientation field."""

    FUTURE = "Future"
    PAST = "Past"
    NONE = "None"


class CausalClass(BaseModel):
    """Causal character plus time orientation of a tangent vector."""

    model_config = ConfigDict(frozen=True)

    kind: CausalKind
    time_sense: TimeSense

    @model_validator(mode="after")
    def validate_sense(self) -> "CausalClass":
        """Only timelike and null vectors carry a time sense."""
        causal = self.kind in (CausalKind.TIMELIKE, CausalKind.NULL)
        if causal != (self.time_sense != TimeSense.NONE):
            raise ValueError(f"time_sense {self.time_sense.value} invalid for {self.kind.value}")
        return self


class ChartedMetric(BaseModel):
    """A Lorentzian metric given in a single coordinate chart.

    The chart domain is described by ``domain_margin``: points with a
    non-positive margin are outside the chart. ``edge_kind`` says whether
    the edge of the domain is a coordinate artefact ("chart") or a curvature
    singularity ("singularity"), which decides how geodesics that run into it
    terminate.

    Attributes:
        dim: Spacetime dimension d = 1 + n
        coord_names: One label per coordinate, time coordinate first
        components: Batched evaluator of g_{mu nu}
        orientation: Batched evaluator of a timelike vector field
        derivatives: Optional batched evaluator of exact first derivatives
        domain_margin: Optional batched evaluator; None means the whole R^d
        edge_kind: Nature of the domain edge
        label: Human-readable name used in reports
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    dim: int = Field(..., ge=2, description="Spacetime dimension 1+n")
    coord_names: tuple[str, ...]
    components: Evaluator
    orientation: Evaluator
    derivatives: Evaluator | None = None
    domain_margin: Evaluator | None = None
    edge_kind: Literal["chart", "singularity"] = "chart"
    label: str = "metric"

    @model_validator(mode="after")
    def validate_names(self) -> "ChartedMetric":
        """One coordinate name per dimension."""
        if len(self.coord_names) != self.dim:
            raise ValueError(f"expected {self.dim} coordinate names, got {len(self.coord_names)}")
        return self

    def margin(self, x: ArrayLike) -> FloatArray:
        """Domain margin at a batch of points (infinite when unrestricted)."""
        xs = np.asarray(x, dtype=float)
        if self.domain_margin is None:
            return np.full(xs.shape[:-1], np.inf)
        return np.asarray(self.domain_margin(xs), dtype=float)

    def in_domain(self, x: ArrayLike) -> NDArray[np.bool_]:
        return self.margin(x) > 0.0


class FoliatedMetric(BaseModel):
    """A metric in split form -kappa d tau^2 + g_tau with tau the first coordinate.

    Attributes:
        base: The full metric
        kappa: Batched lapse evaluator, shape ``(...)``
        spatial: Batched evaluator of the spatial block, shape ``(..., n, n)``
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    base: ChartedMetric
    kappa: Evaluator
    spatial: Evaluator

    @classmethod
    def from_charted(cls, metric: ChartedMetric) -> "FoliatedMetric":
        """Read lapse and spatial block off the components of a block-form metric."""

        def kappa(x: FloatArray) -> FloatArray:
            return -metric.components(x)[..., 0, 0]

        def spatial(x: FloatArray) -> FloatArray:
            return metric.components(x)[..., 1:, 1:]

        return cls(base=metric, kappa=kappa, spatial=spatial)

    def block_form_defect(self, points: ArrayLike) -> float:
        """Largest violation of the block form over a batch of points.

        Combines the size of the mixed components g_{tau i}, the mismatch
        between the components and (kappa, spatial), and failures of
        positivity of kappa and the spatial block. Zero means the block form
        holds exactly on the batch.
        """
        xs = np.atleast_2d(np.asarray(points, dtype=float))
        g = self.base.components(xs)
        kap = np.asarray(self.kappa(xs), dtype=float)
        sp = np.asarray(self.spatial(xs), dtype=float)
        mixed = float(np.max(np.abs(g[..., 0, 1:]), initial=0.0))
        lapse = float(np.max(np.abs(g[..., 0, 0] + kap), initial=0.0))
        block = float(np.max(np.abs(g[..., 1:, 1:] - sp), initial=0.0))
        min_eig = np.linalg.eigvalsh(sp).min(axis=-1)
        positive = bool(np.all(kap > 0.0) and np.all(min_eig > 0.0))
        return max(mixed, lapse, block, 0.0 if positive else np.inf)


class ChartMap(BaseModel):
    """A coordinate change q -> F(q) into the chart of a target metric.

    Attributes:
        forward: Batched map ``(..., d) -> (..., d)``
        jacobian: Batched Jacobian ``J[a, b] = dF^a/dq^b``, shape ``(..., d, d)``
        inverse: Optional batched inverse map
        coord_names: Names of the source coordinates q
        label: Human-readable name
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    forward: Evaluator
    jacobian: Evaluator
    inverse: Evaluator | None = None
    coord_names: tuple[str, ...]
    domain_margin: Evaluator | None = None
    label: str = "chart-map"


def as_coords(p: Any) -> FloatArray:
    """Coerce a Point, Tangent base or array-like into a float coordinate array."""
    if isinstance(p, Point):
        return p.as_array()
    return np.asarray(p, dtype=float)
