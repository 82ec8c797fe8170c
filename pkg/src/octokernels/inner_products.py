"""Weighted octonion-valued inner products and the Hilbert-axiom suite.

The boundary (Hardy) and volume (Bergman) products insert the unit normal
field, respectively the nearest-boundary weight, inside the integrand:
``(f, g) = (3/pi^4) int conj(w g) (w f)``.  Their real parts coincide with
the unweighted classical products; their full octonion values do not, and
the axiom suite below measures exactly which of the six octonionic
Hilbert-space axioms each product satisfies (see README for the known
failures of axioms (v)/(vi) on the field-weighted products).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .algebra import conj, mul, norm, real, scalar
from .domains import DomainSpec
from .errors import OutsideDomainError
from .monogenic import bergman_kernel, szego_kernel, weight_factor
from .quadrature import mc_ball8, mc_sphere7

__all__ = [
    "InnerProductReport", "ProductSpace", "hardy_inner_ball_mc",
    "bergman_inner_mc", "component_inner", "szego_projection_mc",
    "bergman_projection_mc", "axiom_suite", "AXIOM_NAMES",
]

_NORMALIZATION = 3.0 / np.pi ** 4

AXIOM_NAMES = (
    "additivity", "hermitian", "positivity",
    "r_homogeneity", "axiom_v", "para_linearity",
)


@dataclass
class InnerProductReport:
    """Value and uncertainty of one product evaluation, plus axiom residuals.

    ``stderr`` is zero for deterministic rules.  ``residuals`` maps axiom
    name to its measured residual and ``residual_stderr`` carries the
    propagated Monte Carlo uncertainty of each residual (zero when exact).
    """

    value: np.ndarray
    stderr: np.ndarray
    residuals: dict = field(default_factory=dict)
    residual_stderr: dict = field(default_factory=dict)


def hardy_inner_ball_mc(f, g, sampler) -> InnerProductReport:
    """Boundary product on the unit sphere with normal field n(x) = x.

    ``f`` and ``g`` map point batches (n, 8) -> (n, 8).
    """

    def integrand(xs):
        return mul(conj(mul(xs, g(xs))), mul(xs, f(xs)))

    est, se = mc_sphere7(sampler, integrand)
    return InnerProductReport(_NORMALIZATION * est, _NORMALIZATION * se)


def bergman_inner_mc(dom: DomainSpec, f, g, sampler) -> InnerProductReport:
    """Volume product over the unit ball with the nearest-boundary weight."""
    if dom.kind != "ball":
        raise OutsideDomainError(
            "Monte Carlo volume product is defined on the unit ball only"
        )

    def integrand(xs):
        w = weight_factor(dom, xs)
        return mul(conj(mul(w, g(xs))), mul(w, f(xs)))

    est, se = mc_ball8(sampler, np.zeros(8), 1.0, integrand)
    return InnerProductReport(_NORMALIZATION * est, _NORMALIZATION * se)


def component_inner(value, i: int) -> float:
    """i-th real component of an octonion product value; i = 0 is Re."""
    value = np.asarray(value, dtype=np.float64).reshape(8)
    if not 0 <= i <= 7:
        raise IndexError("component index must be 0..7")
    return float(value[i])


def szego_projection_mc(f, y, sampler):
    """Hardy projection (f, S(., y)) on the unit ball; returns (value, stderr)."""
    dom = DomainSpec.ball()
    y = np.asarray(y, dtype=np.float64)

    def integrand(xs):
        s = szego_kernel(dom, xs, y)
        return mul(conj(mul(xs, s)), mul(xs, f(xs)))

    est, se = mc_sphere7(sampler, integrand)
    return _NORMALIZATION * est, _NORMALIZATION * se


def bergman_projection_mc(f, y, sampler, variant: str = "scalar"):
    """Bergman projection over the unit ball; adjudicates the kernel variants."""
    dom = DomainSpec.ball()
    y = np.asarray(y, dtype=np.float64)

    def integrand(xs):
        w = weight_factor(dom, xs)
        b = bergman_kernel(dom, y, xs, variant=variant)
        return mul(conj(mul(w, b)), mul(w, f(xs)))

    est, se = mc_ball8(sampler, np.zeros(8), 1.0, integrand)
    return _NORMALIZATION * est, _NORMALIZATION * se


@dataclass(frozen=True)
class ProductSpace:
    """An inner product together with the operations the axioms quantify over.

    ``product(u, v)`` returns ``(value, stderr)`` as (8,) arrays;
    ``add(u, v)`` and ``right_scale(u, alpha)`` implement the linear
    structure of the underlying space (coefficientwise for series spaces,
    pointwise for function spaces).
    """

    name: str
    product: Callable
    add: Callable
    right_scale: Callable


def _diff_norm(a, b):
    return float(norm(np.asarray(a) - np.asarray(b)))


def axiom_suite(space: ProductSpace, f, g, h, alpha, r: float = 0.73) -> InnerProductReport:
    """Residuals of the six octonionic Hilbert-space axioms at given inputs.

    additivity      |(f+g, h) - (f, h) - (g, h)|
    hermitian       |conj((f, g)) - (g, f)|
    positivity      |Im (f, f)| plus any negative real part
    r_homogeneity   |(f r, g) - (f, g) r| for the real scalar r
    axiom_v         |(f a, f) - (f, f) a|
    para_linearity  |Re (f a, g) - Re ((f, g) a)|
    """
    alpha = np.asarray(alpha, dtype=np.float64)
    p = space.product

    v_fg, se_fg = p(f, g)
    v_gf, se_gf = p(g, f)
    v_ff, se_ff = p(f, f)
    v_fh, se_fh = p(f, h)
    v_gh, se_gh = p(g, h)
    v_fgh, se_fgh = p(space.add(f, g), h)
    v_fr_g, se_fr_g = p(space.right_scale(f, scalar(r)), g)
    v_fa_f, se_fa_f = p(space.right_scale(f, alpha), f)
    v_fa_g, se_fa_g = p(space.right_scale(f, alpha), g)

    def se_norm(*ses):
        return float(np.sqrt(sum(np.sum(np.asarray(s) ** 2) for s in ses)))

    residuals = {
        "additivity": _diff_norm(v_fgh, v_fh + v_gh),
        "hermitian": _diff_norm(conj(v_fg), v_gf),
        "positivity": float(norm(v_ff - scalar(real(v_ff))) + max(-real(v_ff), 0.0)),
        "r_homogeneity": _diff_norm(v_fr_g, v_fg * r),
        "axiom_v": _diff_norm(v_fa_f, mul(v_ff, alpha)),
        "para_linearity": float(abs(real(v_fa_g) - real(mul(v_fg, alpha)))),
    }
    alpha_scale = float(norm(alpha))
    residual_stderr = {
        "additivity": se_norm(se_fgh, se_fh, se_gh),
        "hermitian": se_norm(se_fg, se_gf),
        "positivity": se_norm(se_ff),
        "r_homogeneity": se_norm(se_fr_g, np.asarray(se_fg) * r),
        "axiom_v": se_norm(se_fa_f, np.asarray(se_ff) * alpha_scale),
        "para_linearity": se_norm(se_fa_g, np.asarray(se_fg) * alpha_scale),
    }
    return InnerProductReport(v_fg, np.asarray(se_fg), residuals, residual_stderr)
