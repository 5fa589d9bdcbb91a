"""OpenTelemetry tracing decorators and utilities.

This module provides a decorator for adding tracing to suite entry points,
scans and solvers without cluttering the numerical code. The decorator
extracts scenario identifiers from the call and records them as span
attributes.

No exporter is installed here; without a configured tracer provider the
OpenTelemetry API is a no-op.
"""

import inspect
from collections.abc import Callable
from functools import wraps
from typing import Any, TypeVar

from opentelemetry import trace

# Type variable for preserving function signatures
F = TypeVar("F", bound=Callable[..., Any])

SERVICE_NAME = "calderon-verify"

# Keyword arguments copied onto spans when present with a scalar value
_SPAN_KEYWORDS = ("scenario", "seed", "n_points", "mode", "levels", "direction")


def traced(operation_name: str, service_name: str = SERVICE_NAME) -> Callable[[F], F]:
    """Decorator to add OpenTelemetry tracing to a function.

    Adds the service name, the metric or scenario label of the first
    argument that carries one, and the scalar keyword arguments listed in
    ``_SPAN_KEYWORDS`` as span attributes.

    Args:
        operation_name: Name of the operation (e.g., "reachability_scan", "solve_cauchy")
        service_name: Service identifier for tracing (default: "calderon-verify")

    Returns:
        Decorated function with automatic tracing

    Example:
        @traced("reachability_scan")
        def reachability_scan(metric, cylinder, region, direction, n_points, seed):
            ...
    """

    def decorator(func: F) -> F:
        tracer = trace.get_tracer(__name__)
        signature = inspect.signature(func)

        @wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            with tracer.start_as_current_span(operation_name) as span:
                span.set_attribute("service.name", service_name)
                try:
                    named = dict(signature.bind_partial(*args, **kwargs).arguments)
                except TypeError:
                    named = dict(kwargs)
                _extract_span_attributes(span, args, named)
                return func(*args, **kwargs)

        return wrapper  # type: ignore[return-value]

    return decorator


def _extract_span_attributes(span: Any, args: tuple[Any, ...], kwargs: dict[str, Any]) -> None:
    """Extract labels and run identifiers from function arguments and add them to the span.

    Args:
        span: OpenTelemetry span to add attributes to
        args: Positional arguments from the function call
        kwargs: All arguments of the call bound to their parameter names
    """
    # First positional argument with a label: a metric, scenario or report
    for arg in args:
        name = getattr(arg, "name", None)
        label = getattr(arg, "label", None)
        if isinstance(name, str) and hasattr(arg, "cylinder"):
            span.set_attribute("scenario", name)
            break
        if isinstance(label, str):
            span.set_attribute("label", label)
            break

    for key in _SPAN_KEYWORDS:
        value = kwargs.get(key)
        if isinstance(value, bool | int | float | str):
            span.set_attribute(key, value)
        elif hasattr(value, "value") and isinstance(value.value, str):
            span.set_attribute(key, value.value)
