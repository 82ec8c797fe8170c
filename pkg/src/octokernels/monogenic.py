"""Cauchy kernel, Cauchy-Riemann operator and the six monogenic kernels.

Closed forms for the reproducing kernels of the Hardy and Bergman spaces of
left monogenic functions on the unit ball, the right half-space and the
strip 0 < Re(x) < d.  All kernels are evaluated with honest octonion
arithmetic and are left monogenic in their first argument; Hermitian
transposition is conjugation, conj(K(x, y)) = K(y, x).
"""

from __future__ import annotations

import numpy as np

from .algebra import basis, conj, mul, norm, norm_squared, real, scalar
from .domains import BERGMAN_BALL_VARIANTS, DomainSpec
from .errors import SingularityError
from .quadrature import BALL8_VOLUME, SPHERE7_AREA, mc_ball8, mc_sphere7

__all__ = [
    "EPS_SINGULAR", "FD_STEP", "cauchy_kernel", "cr_apply_fd", "szego_kernel",
    "bergman_kernel", "weight_factor", "cauchy_integral_mc", "mean_value_mc",
]

EPS_SINGULAR = 1e-12
FD_STEP = 1e-4

_CAUCHY_NORMALIZATION = 3.0 / np.pi ** 4


def _guard(n2, singular_set):
    if np.any(n2 <= EPS_SINGULAR * EPS_SINGULAR):
        raise SingularityError(
            f"kernel evaluated on its singular set ({singular_set})",
            singular_set=singular_set,
        )


def cauchy_kernel(x) -> np.ndarray:
    """conj(x) / |x|^8, the fundamental left monogenic kernel."""
    x = np.asarray(x, dtype=np.float64)
    n2 = np.asarray(norm_squared(x))
    _guard(n2, "x = 0")
    return conj(x) / n2[..., None] ** 4


def cr_apply_fd(f, x, h: float = FD_STEP) -> np.ndarray:
    """Central-difference Cauchy-Riemann operator sum_i e_i d f / d x_i.

    ``f`` must accept batches of shape (..., 8); the 16 shifted evaluations
    are batched into a single call.
    """
    x = np.asarray(x, dtype=np.float64).reshape(8)
    shifts = np.zeros((2, 8, 8))
    eye = np.eye(8) * h
    shifts[0] = x + eye
    shifts[1] = x - eye
    vals = np.asarray(f(shifts.reshape(16, 8)), dtype=np.float64).reshape(2, 8, 8)
    derivs = (vals[0] - vals[1]) / (2.0 * h)
    out = np.zeros(8)
    for i in range(8):
        out += mul(basis(i), derivs[i])
    return out


def _pair_indices(terms: int):
    yield 0
    for n in range(1, terms + 1):
        yield n


def szego_kernel(dom: DomainSpec, x, y) -> np.ndarray:
    """Hardy-space reproducing kernel of the domain."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if dom.kind == "ball":
        u = scalar(1.0) - mul(conj(x), y)
        n2 = np.asarray(norm_squared(u))
        _guard(n2, "1 - conj(x) y = 0")
        return u / n2[..., None] ** 4
    if dom.kind == "halfspace":
        v = conj(x) + y
        n2 = np.asarray(norm_squared(v))
        _guard(n2, "conj(x) + y = 0")
        return v / n2[..., None] ** 4

    # Strip: alternating reflections, summed in +/- n pairs so symmetric
    # truncation preserves the Hermitian property exactly.
    v = conj(x) + y
    acc = None
    for n in _pair_indices(dom.terms):
        sign = -1.0 if n % 2 else 1.0
        shifts = (0.0,) if n == 0 else (2.0 * dom.d * n, -2.0 * dom.d * n)
        for s in shifts:
            w = v + scalar(s)
            n2 = np.asarray(norm_squared(w))
            _guard(n2, "conj(x) + y = -2dn")
            term = sign * w / n2[..., None] ** 4
            acc = term if acc is None else acc + term
    return acc


def _bergman_halfspace_term(v) -> np.ndarray:
    # Analytic d/dx0 of -2 (conj(x) + y)/|conj(x) + y|^8 with v = conj(x) + y:
    # the real unit contributes -2/|v|^8, the chain rule 16 Re(v) v / |v|^10.
    n2 = np.asarray(norm_squared(v))
    _guard(n2, "conj(x) + y = -2dn")
    re = np.asarray(real(v))
    return (-2.0 / n2[..., None] ** 4) * basis(0) + 16.0 * re[..., None] * v / n2[..., None] ** 5


def bergman_kernel(dom: DomainSpec, x, y, variant: str = "scalar") -> np.ndarray:
    """Bergman-space reproducing kernel of the domain.

    ``variant`` selects the first factor of the unit-ball kernel: "scalar"
    uses 1 - |x|^2 |y|^2 and is the shipped default; "octonion" uses the
    octonion-valued 1 - |x|^2 y^2, kept so the two candidates can be
    compared by data.  The half-space and strip kernels are the analytic
    x0-derivative of the corresponding Hardy kernels.
    """
    if variant not in BERGMAN_BALL_VARIANTS:
        raise ValueError(f"variant must be one of {BERGMAN_BALL_VARIANTS}")
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if dom.kind == "ball":
        u = scalar(1.0) - mul(conj(x), y)
        n2 = np.asarray(norm_squared(u))
        _guard(n2, "1 - conj(x) y = 0")
        if variant == "scalar":
            factor = scalar(1.0 - norm_squared(x) * norm_squared(y))
        else:
            factor = scalar(1.0) - np.asarray(norm_squared(x))[..., None] * mul(y, y)
        factor = np.broadcast_to(factor, u.shape)
        num = 6.0 * mul(factor, u) + 2.0 * mul(u, u)
        return num / n2[..., None] ** 5
    if dom.kind == "halfspace":
        return _bergman_halfspace_term(conj(x) + y)

    v = conj(x) + y
    acc = None
    for n in _pair_indices(dom.terms):
        shifts = (0.0,) if n == 0 else (2.0 * dom.d * n, -2.0 * dom.d * n)
        for s in shifts:
            term = _bergman_halfspace_term(v + scalar(s))
            acc = term if acc is None else acc + term
    return acc


def weight_factor(dom: DomainSpec, x) -> np.ndarray:
    """Unit normal of the nearest boundary point, the volume-product weight.

    Ball: x/|x| (zero at the center).  Half-space: 1.  Strip: -1 left of the
    midplane, +1 right of it, 0 on it.  Always |w| in {0, 1}.
    """
    x = np.asarray(x, dtype=np.float64)
    dom.require_interior(x)
    if dom.kind == "ball":
        n = np.asarray(norm(x))
        safe = np.where(n == 0.0, 1.0, n)
        return np.where((n == 0.0)[..., None], 0.0, x / safe[..., None])
    if dom.kind == "halfspace":
        return np.broadcast_to(basis(0), x.shape).copy()
    side = np.sign(np.asarray(real(x)) - 0.5 * dom.d)
    return scalar(side)


def cauchy_integral_mc(f, x, sampler):
    """Cauchy reproduction of a left monogenic f at an interior point.

    Estimates (3/pi^4) times the boundary integral of
    ``cauchy_kernel(y - x) (y f(y))`` over the unit sphere, whose outward
    normal at y is y itself.  Returns (estimate, stderr).
    """
    x = np.asarray(x, dtype=np.float64)

    def integrand(ys):
        return mul(cauchy_kernel(ys - x), mul(ys, f(ys)))

    est, se = mc_sphere7(sampler, integrand)
    return _CAUCHY_NORMALIZATION * est, _CAUCHY_NORMALIZATION * se


def mean_value_mc(f, x, radius, sampler):
    """Volume mean of a monogenic f over the ball B(x, radius) equals f(x)."""
    est, se = mc_ball8(sampler, x, radius, f)
    scale = 1.0 / (radius ** 8 * BALL8_VOLUME)
    return scale * est, scale * se
