"""Exception hierarchy for the verification toolkit.

Every failure raised by the geometry, spacetime, causality, wave and witness
layers derives from ``CalderonError`` so the CLI can map them onto exit codes
without catching unrelated exceptions.
"""


class CalderonError(Exception):
    """Base class for all toolkit errors."""


class DomainError(CalderonError):
    """A point lies outside the chart domain or a component is non-finite."""


class SignatureError(CalderonError):
    """A metric fails the Lorentzian signature check (-, +, ..., +)."""


class SingularMetricError(CalderonError):
    """A metric matrix is numerically singular and cannot be inverted."""


class ChartError(CalderonError):
    """A chart map has a singular Jacobian on its declared domain."""


class ConfigError(CalderonError):
    """Constructor parameters violate their stated preconditions."""


class PreconditionError(CalderonError):
    """An operation was called with inputs outside its contract."""


class StabilityError(CalderonError):
    """A time step violates the CFL certificate of the wave scheme."""


class GridError(CalderonError):
    """A grid is too small for the requested computation."""


class DataError(CalderonError):
    """Source or boundary data violate their support requirements."""


class ChartExitError(CalderonError):
    """A geodesic left the chart domain before its first step."""


class SingularityApproachError(CalderonError):
    """A geodesic started on or at the edge of a curvature singularity."""
