"""Slice reproducing kernels and the circle/disk inner products on a slice.

The closed forms below restrict, on a common slice, to the classical complex
Cauchy, Szego and Bergman kernels of the disk, half-plane and strip; off a
slice they are genuine octonion expressions.  The circle product inserts the
tangential field t(z) = I z on the slice circle; the disk product needs no
field because its integrand is slice-valued.
"""

from __future__ import annotations

import numpy as np

from .algebra import conj, mul, norm, norm_squared, power, real, scalar
from .errors import SingularityError
from .quadrature import CircleRule, DiskRule, integrate_circle, integrate_disk
from .series import OctonionPowerSeries, hardy_inner_coeff
from .slices import ImaginaryUnit

__all__ = [
    "slice_cauchy_kernel", "slice_szego_ball", "slice_szego_halfspace",
    "slice_szego_strip", "slice_bergman_ball", "slice_bergman_halfspace",
    "slice_bergman_strip", "slice_hardy_inner_circle",
    "slice_hardy_inner_circle_fn", "slice_bergman_inner_disk",
    "slice_bergman_inner_disk_fn", "slice_reproduce", "circle_rule_for",
    "disk_rule_for", "slice_points",
]

EPS_SINGULAR = 1e-12
DUAL_FORM_TOL = 1e-12


def _inv(q, singular_set):
    """Inverse of a slice-valued (two-generated) denominator."""
    q = np.asarray(q, dtype=np.float64)
    n2 = np.asarray(norm_squared(q))
    if np.any(n2 <= EPS_SINGULAR * EPS_SINGULAR):
        raise SingularityError(
            f"kernel evaluated on its singular set ({singular_set})",
            singular_set=singular_set,
        )
    return conj(q) / n2[..., None]


def _re_col(x):
    return np.asarray(real(x))[..., None]


def slice_cauchy_kernel(s, x) -> np.ndarray:
    """-(x^2 - 2 Re(s) x + |s|^2)^(-1) (x - conj(s)); singular on [s]."""
    s = np.asarray(s, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    den = mul(x, x) - 2.0 * _re_col(s) * x + scalar(norm_squared(s))
    return -mul(_inv(den, "x in [s]"), x - conj(s))


def slice_szego_ball(y, x) -> np.ndarray:
    """(1 - 2 Re(x) y + |x|^2 y^2)^(-1) (1 - y x); equals sum y^n conj(x)^n."""
    y = np.asarray(y, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    den = scalar(1.0) - 2.0 * _re_col(x) * y + np.asarray(norm_squared(x))[..., None] * mul(y, y)
    return mul(_inv(den, "x in [1/conj(y)]"), scalar(1.0) - mul(y, x))


def _halfspace_form1(x, y):
    num = conj(x) + conj(y)
    den = scalar(norm_squared(x)) + 2.0 * _re_col(x) * conj(y) + mul(conj(y), conj(y))
    return mul(num, _inv(den, "x in [-conj(y)]")) / (2.0 * np.pi)


def _halfspace_form2(x, y):
    den = scalar(norm_squared(y)) + 2.0 * _re_col(y) * x + mul(x, x)
    return mul(_inv(den, "x in [-conj(y)]"), x + y) / (2.0 * np.pi)


def slice_szego_halfspace(x, y, check_forms: bool = True) -> np.ndarray:
    """Hardy kernel of the right half-space, (1/2pi)(x + conj(y))^(-1) on-slice.

    Two algebraically equal closed forms exist; both are evaluated and their
    agreement is asserted to DUAL_FORM_TOL unless ``check_forms`` is False.
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    k1 = _halfspace_form1(x, y)
    if check_forms:
        k2 = _halfspace_form2(x, y)
        scale = 1.0 + np.asarray(norm(k1))
        if np.any(norm(k1 - k2) > DUAL_FORM_TOL * scale):
            raise ArithmeticError("half-space kernel forms disagree beyond tolerance")
    return k1


def slice_szego_strip(y, x, d: float, terms: int = 50) -> np.ndarray:
    """Alternating sum of shifted half-space kernels, summed in +/- n pairs."""
    y = np.asarray(y, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    acc = slice_szego_halfspace(y, x, check_forms=False)
    for n in range(1, terms + 1):
        sign = -1.0 if n % 2 else 1.0
        step = scalar(2.0 * d * n)
        acc = acc + sign * (
            slice_szego_halfspace(y + step, x, check_forms=False)
            + slice_szego_halfspace(y - step, x, check_forms=False)
        )
    return acc


def slice_bergman_ball(x, y) -> np.ndarray:
    """(1/pi)(1 - 2 conj(x) conj(y) + conj(x)^2 conj(y)^2)(1 - 2 Re(x) conj(y) + |x|^2 conj(y)^2)^(-2)."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    cx, cy = conj(x), conj(y)
    cxcy = mul(cx, cy)
    num = scalar(1.0) - 2.0 * cxcy + mul(cxcy, cxcy)
    den = scalar(1.0) - 2.0 * _re_col(x) * cy + np.asarray(norm_squared(x))[..., None] * mul(cy, cy)
    inv_den = _inv(den, "x in [1/conj(y)]")
    return mul(num, mul(inv_den, inv_den)) / np.pi


def _bergman_halfspace_one(x, y):
    den = mul(x, x) + 2.0 * _re_col(y) * x + scalar(norm_squared(y))
    inv_den = _inv(den, "x in [-conj(y)]")
    num = mul(x, x) + 2.0 * mul(x, y) + mul(y, y)
    return mul(mul(inv_den, inv_den), num) / np.pi


def slice_bergman_halfspace(x, y) -> np.ndarray:
    """(1/pi)(x^2 + 2 Re(y) x + |y|^2)^(-2)(x^2 + 2 x y + y^2); (1/pi)(x + conj(y))^(-2) on-slice."""
    return _bergman_halfspace_one(
        np.asarray(x, dtype=np.float64), np.asarray(y, dtype=np.float64)
    )


def slice_bergman_strip(x, y, d: float, terms: int = 50) -> np.ndarray:
    """Sum of shifted half-space Bergman kernels over y + 2dn (no alternation)."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    acc = _bergman_halfspace_one(x, y)
    for n in range(1, terms + 1):
        step = scalar(2.0 * d * n)
        acc = acc + _bergman_halfspace_one(x, y + step) + _bergman_halfspace_one(x, y - step)
    return acc


def circle_rule_for(degree: int) -> CircleRule:
    # The tangential field raises the integrand's trig degree to 2N + 2, so
    # the nominal 4N + 1 nodes are floored to stay exact for tiny degrees.
    return CircleRule(nodes=max(4 * degree + 1, 9))


def disk_rule_for(degree: int) -> DiskRule:
    return DiskRule(radial_order=2 * degree + 2, angular_nodes=max(4 * degree + 1, 9))


def slice_points(I: ImaginaryUnit, radius, theta) -> np.ndarray:
    """Points radius * exp(I theta) on the slice of I, shape (K, 8)."""
    radius = np.asarray(radius, dtype=np.float64)
    theta = np.asarray(theta, dtype=np.float64)
    axis = np.asarray(I)
    pts = scalar(radius * np.cos(theta)) + (radius * np.sin(theta))[..., None] * axis
    return pts


def slice_hardy_inner_circle_fn(f, g, I: ImaginaryUnit, rule: CircleRule) -> np.ndarray:
    """Circle product of point-evaluable slice functions f, g: (K, 8) -> (K, 8)."""
    axis = np.asarray(I)

    def integrand(theta):
        z = slice_points(I, 1.0, theta)
        t = mul(axis, z)
        return mul(conj(mul(t, g(z))), mul(t, f(z)))

    return integrate_circle(rule, integrand) / (2.0 * np.pi)


def slice_hardy_inner_circle(f: OctonionPowerSeries, g: OctonionPowerSeries,
                             I: ImaginaryUnit, rule: CircleRule | None = None) -> np.ndarray:
    """(1/2pi) int conj(t g) (t f) dtheta on the slice circle, t(z) = I z."""
    if rule is None:
        rule = circle_rule_for(max(f.degree, g.degree))
    return slice_hardy_inner_circle_fn(f.evaluate, g.evaluate, I, rule)


def slice_bergman_inner_disk_fn(f, g, I: ImaginaryUnit, rule: DiskRule,
                                normalized: bool = True) -> np.ndarray:
    """Disk product of point-evaluable slice functions against the slice disk."""

    def integrand(r, theta):
        z = slice_points(I, r, theta)
        return mul(conj(g(z)), f(z))

    return integrate_disk(rule, integrand, normalized=normalized)


def slice_bergman_inner_disk(f: OctonionPowerSeries, g: OctonionPowerSeries,
                             I: ImaginaryUnit, rule: DiskRule | None = None) -> np.ndarray:
    """int conj(g) f over the slice unit disk with the normalized measure."""
    if rule is None:
        rule = disk_rule_for(max(f.degree, g.degree))
    return slice_bergman_inner_disk_fn(f.evaluate, g.evaluate, I, rule)


def _require_on_slice(x, I: ImaginaryUnit):
    x = np.asarray(x, dtype=np.float64)
    axis = np.asarray(I)
    im = x.copy()
    im[..., 0] = 0.0
    off = im - np.einsum("...i,i->...", im, axis)[..., None] * axis
    if np.any(norm(off) > 1e-12 * (1.0 + norm(x))):
        raise ValueError("evaluation point must lie on the integration slice")
    return x


def slice_reproduce(route: str, f: OctonionPowerSeries, x,
                    I: ImaginaryUnit | None = None, rule=None) -> np.ndarray:
    """Reproduce f(x) through one of the three kernel routes.

    ``"coefficient"``: pair f with the kernel series whose n-th coefficient
    is conj(x)^n (exact).  ``"circle"``: Hardy-kernel quadrature of
    S(x, y) f(y) over the slice circle.  ``"disk"``: Bergman-kernel
    quadrature of B(x, y) f(y) over the slice disk against the plain
    (unnormalized) planar measure, which is the measure the kernel's 1/pi
    prefactor reproduces against.  The quadrature routes require x on the
    slice of I.
    """
    x = np.asarray(x, dtype=np.float64)
    if route == "coefficient":
        rows = np.stack([power(conj(x), n) for n in range(f.degree + 1)])
        return hardy_inner_coeff(f, OctonionPowerSeries(rows))
    if I is None:
        raise ValueError("quadrature reproduction requires the slice axis I")
    _require_on_slice(x, I)
    # The kernel's geometric series aliases at |x|^nodes, so the default
    # rules keep at least 48 angular nodes (|x| <= 0.55 stays below 1e-10);
    # pass a larger rule for evaluation points closer to the boundary.
    if route == "circle":
        crule = rule or CircleRule(max(4 * f.degree + 1, 48))

        def integrand(theta):
            y = slice_points(I, 1.0, theta)
            return mul(slice_szego_ball(np.broadcast_to(x, y.shape), y), f.evaluate(y))

        return integrate_circle(crule, integrand) / (2.0 * np.pi)
    if route == "disk":
        drule = rule or DiskRule(2 * f.degree + 2, max(4 * f.degree + 1, 48))

        def integrand(r, theta):
            y = slice_points(I, r, theta)
            return mul(slice_bergman_ball(np.broadcast_to(x, y.shape), y), f.evaluate(y))

        return integrate_disk(drule, integrand, normalized=False)
    raise ValueError(f"unknown reproduction route {route!r}")
