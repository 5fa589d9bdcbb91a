"""Chart-based Lorentzian geometry: metric evaluation, curvature and causal classes."""

from src.geometry.curvature import (
    connection_evaluator,
    christoffel,
    christoffel_batch,
    metric_derivatives,
    ricci,
    ricci_batch,
    riemann,
    riemann_batch,
    scalar_curvature,
    scalar_curvature_batch,
)
from src.geometry.metric import (
    causal_class,
    covector_norm2,
    inverse_metric_at,
    inverse_metric_batch,
    metric_at,
    metric_batch,
    pullback_metric,
)
from src.geometry.types import (
    CausalClass,
    CausalKind,
    ChartedMetric,
    ChartMap,
    FoliatedMetric,
    Point,
    Tangent,
    TimeSense,
)
