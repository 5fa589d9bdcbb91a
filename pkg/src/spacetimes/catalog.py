"""Catalog of explicit spacetimes used by the counterexample scenarios.

Every constructor returns a ``ChartedMetric`` with batched evaluators and,
where the closed form is short, exact first derivatives.
"""

import numpy as np
from scipy.integrate import quad

from src.errors import ConfigError, DomainError
from src.geometry.types import ChartedMetric, ChartMap, Evaluator, FloatArray


def _require_positive(**params: float) -> None:
    for name, value in params.items():
        if not np.isfinite(value) or value <= 0.0:
            raise ConfigError(f"{name} must be positive, got {value}")


def _require_dimension(n: int) -> None:
    if n < 1:
        raise ConfigError(f"spatial dimension must be >= 1, got {n}")


def _time_orientation(d: int) -> Evaluator:
    def orientation(x: FloatArray) -> FloatArray:
        out = np.zeros(x.shape)
        out[..., 0] = 1.0
        return out

    return orientation


def _conformally_flat(
    d: int,
    lapse2: Evaluator,
    scale2: Evaluator,
) -> Evaluator:
    """Components diag(-lapse2, scale2, ..., scale2) from two scalar fields."""

    def components(x: FloatArray) -> FloatArray:
        g = np.zeros(x.shape + (d,))
        g[..., 0, 0] = -lapse2(x)
        s = scale2(x)
        for i in range(1, d):
            g[..., i, i] = s
        return g

    return components


def _time_derivatives(
    d: int,
    dlapse2: Evaluator,
    dscale2: Evaluator,
) -> Evaluator:
    """Exact derivatives of a metric whose components depend on the time coordinate only."""

    def derivatives(x: FloatArray) -> FloatArray:
        dg = np.zeros(x.shape + (d, d))
        dg[..., 0, 0, 0] = -dlapse2(x)
        s = dscale2(x)
        for i in range(1, d):
            dg[..., 0, i, i] = s
        return dg

    return derivatives


def _names(n: int, time: str = "t") -> tuple[str, ...]:
    if n == 1:
        return (time, "x")
    return (time, *(f"x{i}" for i in range(1, n + 1)))


def minkowski(n: int = 1) -> ChartedMetric:
    """Minkowski space R^{1+n} with metric -dt^2 + |dx|^2.

    Raises:
        ConfigError: n < 1
    """
    _require_dimension(n)
    d = n + 1
    eta = np.diag([-1.0] + [1.0] * n)

    def components(x: FloatArray) -> FloatArray:
        return np.broadcast_to(eta, x.shape[:-1] + (d, d)).copy()

    def derivatives(x: FloatArray) -> FloatArray:
        return np.zeros(x.shape[:-1] + (d, d, d))

    return ChartedMetric(
        dim=d,
        coord_names=_names(n),
        components=components,
        orientation=_time_orientation(d),
        derivatives=derivatives,
        label=f"minkowski-1+{n}",
    )


def flrw_bounce(H: float, n: int = 1) -> ChartedMetric:
    """Big Bounce cosmology -dt^2 + cosh^2(Ht) |dx|^2."""
    _require_positive(H=H)
    _require_dimension(n)
    d = n + 1
    return ChartedMetric(
        dim=d,
        coord_names=_names(n),
        components=_conformally_flat(
            d, lambda x: np.ones(x.shape[:-1]), lambda x: np.cosh(H * x[..., 0]) ** 2
        ),
        orientation=_time_orientation(d),
        derivatives=_time_derivatives(
            d, lambda x: np.zeros(x.shape[:-1]), lambda x: H * np.sinh(2.0 * H * x[..., 0])
        ),
        label=f"flrw-bounce-H{H:g}",
    )


def conformal_time(H: float, t: FloatArray | float) -> FloatArray | float:
    """Conformal time of the bounce cosmology, the integral of sech(Ht') from -inf to t.

    Uses eta = (pi/2 + gd(Ht))/H with gd the Gudermannian, which agrees with
    the piecewise arccot form and is strictly increasing with range (0, pi/H).
    """
    _require_positive(H=H)
    gd = 2.0 * np.arctan(np.tanh(0.5 * H * np.asarray(t, dtype=float)))
    eta = (0.5 * np.pi + gd) / H
    return float(eta) if np.ndim(eta) == 0 else eta


def cosmic_time(H: float, eta: FloatArray | float) -> FloatArray | float:
    """Inverse of ``conformal_time`` in closed form, t = arsinh(tan(H eta - pi/2))/H.

    Raises:
        DomainError: eta outside (0, pi/H)
    """
    _require_positive(H=H)
    e = np.asarray(eta, dtype=float)
    if np.any(e <= 0.0) or np.any(e >= np.pi / H):
        raise DomainError(f"conformal time must lie in (0, pi/H) = (0, {np.pi / H}), got {eta}")
    t = np.arcsinh(np.tan(H * e - 0.5 * np.pi)) / H
    return float(t) if np.ndim(t) == 0 else t


def conformal_time_span(H: float, t_lo: float = -np.inf, t_hi: float = np.inf) -> float:
    """Integrate sech(Ht) over [t_lo, t_hi] by adaptive quadrature."""
    _require_positive(H=H)

    def sech(t: float) -> float:
        e = np.exp(-abs(H * t))
        return float(2.0 * e / (1.0 + e * e))

    value, _ = quad(sech, t_lo, t_hi, epsabs=1e-13, epsrel=1e-13, limit=200)
    return float(value)


def _eta_margin(H: float) -> Evaluator:
    def margin(x: FloatArray) -> FloatArray:
        he = H * x[..., 0]
        return np.minimum(he, np.pi - he)

    return margin


def flrw_conformal(H: float, n: int = 1) -> ChartedMetric:
    """Bounce cosmology in conformal time, a(eta)^2 (-d eta^2 + |dx|^2) with a = 1/sin(H eta)."""
    _require_positive(H=H)
    _require_dimension(n)
    d = n + 1

    def a2(x: FloatArray) -> FloatArray:
        return 1.0 / np.sin(H * x[..., 0]) ** 2

    def da2(x: FloatArray) -> FloatArray:
        he = H * x[..., 0]
        return -2.0 * H * np.cos(he) / np.sin(he) ** 3

    return ChartedMetric(
        dim=d,
        coord_names=_names(n, "eta"),
        components=_conformally_flat(d, a2, a2),
        orientation=_time_orientation(d),
        derivatives=_time_derivatives(d, da2, da2),
        domain_margin=_eta_margin(H),
        label=f"flrw-conformal-H{H:g}",
    )


def conformal_chart_map(H: float, n: int = 1) -> ChartMap:
    """Chart map (eta, x) -> (t(eta), x) from the conformal chart to the cosmic chart."""
    _require_positive(H=H)
    d = n + 1

    def forward(q: FloatArray) -> FloatArray:
        out = np.array(q, dtype=float, copy=True)
        out[..., 0] = np.arcsinh(np.tan(H * q[..., 0] - 0.5 * np.pi)) / H
        return out

    def jacobian(q: FloatArray) -> FloatArray:
        jac = np.broadcast_to(np.eye(d), q.shape[:-1] + (d, d)).copy()
        jac[..., 0, 0] = 1.0 / np.sin(H * q[..., 0])
        return jac

    def inverse(x: FloatArray) -> FloatArray:
        out = np.array(x, dtype=float, copy=True)
        out[..., 0] = conformal_time(H, x[..., 0])
        return out

    return ChartMap(
        forward=forward,
        jacobian=jacobian,
        inverse=inverse,
        coord_names=_names(n, "eta"),
        domain_margin=_eta_margin(H),
        label="conformal-time",
    )


def de_sitter_patch(R_c: float, pole: float = 0.0, n: int = 1) -> ChartedMetric:
    """Conformal de Sitter patch (R_c^2/(tau - pole)^2)(-d tau^2 + |dx|^2).

    The patch has constant curvature 1/R_c^2 and is defined on either side of
    the hyperplane tau = pole, which is excluded from the chart.
    """
    _require_positive(R_c=R_c)
    _require_dimension(n)
    d = n + 1

    def factor(x: FloatArray) -> FloatArray:
        return R_c**2 / (x[..., 0] - pole) ** 2

    def dfactor(x: FloatArray) -> FloatArray:
        return -2.0 * R_c**2 / (x[..., 0] - pole) ** 3

    return ChartedMetric(
        dim=d,
        coord_names=_names(n, "tau"),
        components=_conformally_flat(d, factor, factor),
        orientation=_time_orientation(d),
        derivatives=_time_derivatives(d, dfactor, dfactor),
        domain_margin=lambda x: np.abs(x[..., 0] - pole),
        label=f"de-sitter-Rc{R_c:g}-pole{pole:g}",
    )


def de_sitter_flat_slicing(R_c: float, t_ref: float = 0.0, n: int = 1) -> ChartedMetric:
    """de Sitter patch in exponential slicing -dt^2 + exp(2(t - t_ref)/R_c) |dx|^2.

    Same constant curvature as ``de_sitter_patch`` but defined for all t. In
    1+1 dimensions this form, unlike the conformal one, changes wave
    propagation relative to Minkowski space.
    """
    _require_positive(R_c=R_c)
    _require_dimension(n)
    d = n + 1

    def scale2(x: FloatArray) -> FloatArray:
        return np.exp(2.0 * (x[..., 0] - t_ref) / R_c)

    return ChartedMetric(
        dim=d,
        coord_names=_names(n),
        components=_conformally_flat(d, lambda x: np.ones(x.shape[:-1]), scale2),
        orientation=_time_orientation(d),
        derivatives=_time_derivatives(
            d, lambda x: np.zeros(x.shape[:-1]), lambda x: 2.0 / R_c * scale2(x)
        ),
        label=f"de-sitter-flat-Rc{R_c:g}",
    )


def schwarzschild_exterior(r_S: float) -> ChartedMetric:
    """Schwarzschild exterior in (t, r, theta, phi), r > r_S, 0 < theta < pi."""
    _require_positive(r_S=r_S)

    def components(x: FloatArray) -> FloatArray:
        r, th = x[..., 1], x[..., 2]
        lapse = 1.0 - r_S / r
        g = np.zeros(x.shape + (4,))
        g[..., 0, 0] = -lapse
        g[..., 1, 1] = 1.0 / lapse
        g[..., 2, 2] = r**2
        g[..., 3, 3] = (r * np.sin(th)) ** 2
        return g

    def derivatives(x: FloatArray) -> FloatArray:
        r, th = x[..., 1], x[..., 2]
        lapse = 1.0 - r_S / r
        dg = np.zeros(x.shape + (4, 4))
        dg[..., 1, 0, 0] = -r_S / r**2
        dg[..., 1, 1, 1] = -(r_S / r**2) / lapse**2
        dg[..., 1, 2, 2] = 2.0 * r
        dg[..., 1, 3, 3] = 2.0 * r * np.sin(th) ** 2
        dg[..., 2, 3, 3] = r**2 * np.sin(2.0 * th)
        return dg

    def margin(x: FloatArray) -> FloatArray:
        return np.minimum((x[..., 1] - r_S) / r_S, np.sin(x[..., 2]))

    return ChartedMetric(
        dim=4,
        coord_names=("t", "r", "theta", "phi"),
        components=components,
        orientation=_time_orientation(4),
        derivatives=derivatives,
        domain_margin=margin,
        label=f"schwarzschild-exterior-rS{r_S:g}",
    )
