"""Truncated octonionic power series sum_n x^n a_n.

These are the concrete slice monogenic functions on the unit ball: evaluation
multiplies powers of the variable on the left of the coefficients, and the
coefficient functionals below realize the sequence forms of the Hardy and
Bergman norms.
"""

from __future__ import annotations

import numpy as np

from .algebra import conj, mul, norm_squared, real, scalar

__all__ = [
    "OctonionPowerSeries", "hardy_inner_coeff", "hardy_norm",
    "bergman_norm_sq", "para_linearity_residual", "random_series",
]

DEFAULT_TRUNCATION = 32


class OctonionPowerSeries:
    """Coefficients a_0..a_N stored as an (N+1, 8) array, lowest degree first."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        c = np.asarray(coefficients, dtype=np.float64)
        if c.ndim == 1:
            c = c.reshape(1, 8)
        if c.ndim != 2 or c.shape[1] != 8:
            raise ValueError(f"coefficients must have shape (N+1, 8), got {c.shape}")
        if c.shape[0] < 1:
            raise ValueError("a series needs at least the degree-0 coefficient")
        if not np.all(np.isfinite(c)):
            raise ValueError("series coefficients must be finite")
        c = c.copy()
        c.setflags(write=False)
        self.coefficients = c

    @classmethod
    def constant(cls, c):
        return cls(np.asarray(c, dtype=np.float64).reshape(1, 8))

    @classmethod
    def monomial(cls, n, coefficient):
        rows = np.zeros((n + 1, 8))
        rows[n] = np.asarray(coefficient, dtype=np.float64)
        return cls(rows)

    @property
    def degree(self) -> int:
        return self.coefficients.shape[0] - 1

    def padded(self, degree: int) -> "OctonionPowerSeries":
        if degree < self.degree:
            raise ValueError("cannot pad to a smaller degree")
        rows = np.zeros((degree + 1, 8))
        rows[: self.degree + 1] = self.coefficients
        return OctonionPowerSeries(rows)

    def __add__(self, other):
        if not isinstance(other, OctonionPowerSeries):
            return NotImplemented
        n = max(self.degree, other.degree)
        return OctonionPowerSeries(
            self.padded(n).coefficients + other.padded(n).coefficients
        )

    def __sub__(self, other):
        if not isinstance(other, OctonionPowerSeries):
            return NotImplemented
        n = max(self.degree, other.degree)
        return OctonionPowerSeries(
            self.padded(n).coefficients - other.padded(n).coefficients
        )

    def scale_right(self, alpha) -> "OctonionPowerSeries":
        """f * alpha: every coefficient right-multiplied by alpha."""
        alpha = np.asarray(alpha, dtype=np.float64)
        return OctonionPowerSeries(mul(self.coefficients, alpha))

    def evaluate(self, x) -> np.ndarray:
        """sum_n multiply(x^n, a_n), with x^n built by repeated multiplication.

        Accepts a batch of points with shape (..., 8).
        """
        x = np.asarray(x, dtype=np.float64)
        p = np.zeros(x.shape)
        p[..., 0] = 1.0
        out = np.zeros(x.shape)
        for n in range(self.coefficients.shape[0]):
            out = out + mul(p, self.coefficients[n])
            if n < self.coefficients.shape[0] - 1:
                p = mul(p, x)
        return out

    def __repr__(self):
        return f"OctonionPowerSeries(degree={self.degree})"


def _aligned(f: OctonionPowerSeries, g: OctonionPowerSeries):
    n = max(f.degree, g.degree)
    return f.padded(n).coefficients, g.padded(n).coefficients


def hardy_inner_coeff(f: OctonionPowerSeries, g: OctonionPowerSeries) -> np.ndarray:
    """Coefficient Hardy pairing [f, g] = sum_n conj(b_n) a_n."""
    a, b = _aligned(f, g)
    return mul(conj(b), a).sum(axis=0)


def hardy_norm(f: OctonionPowerSeries) -> float:
    return float(np.sqrt(norm_squared(f.coefficients).sum()))


def bergman_norm_sq(f: OctonionPowerSeries) -> float:
    """Sequence Bergman norm: sum_n |a_n|^2 / (n + 1)."""
    n2 = norm_squared(f.coefficients)
    return float((n2 / (1.0 + np.arange(len(n2)))).sum())


def para_linearity_residual(f: OctonionPowerSeries, g: OctonionPowerSeries, alpha):
    """Residual of Re[f alpha, g] = Re([f, g] alpha), plus the full gap.

    The real parts must agree; the octonion-valued gap
    ``[f alpha, g] - [f, g] alpha`` is generally nonzero and witnesses that
    the pairing is not octonion-linear.
    """
    alpha = np.asarray(alpha, dtype=np.float64)
    lhs = hardy_inner_coeff(f.scale_right(alpha), g)
    rhs = mul(hardy_inner_coeff(f, g), alpha)
    full_gap = lhs - rhs
    return float(np.abs(real(lhs) - real(rhs))), full_gap


def random_series(rng: np.random.Generator, degree: int = DEFAULT_TRUNCATION,
                  decay: float = 0.5) -> OctonionPowerSeries:
    """Random test series with geometrically decaying coefficients."""
    rows = rng.uniform(-1.0, 1.0, size=(degree + 1, 8))
    rows *= decay ** np.arange(degree + 1)[:, None]
    return OctonionPowerSeries(rows)
