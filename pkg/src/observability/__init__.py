"""Observability utilities for OpenTelemetry instrumentation."""
