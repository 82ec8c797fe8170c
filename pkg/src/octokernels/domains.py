"""Canonical domains carrying kernels, weight factors and quadratures."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import norm, real
from .errors import OutsideDomainError

__all__ = ["DomainSpec", "BERGMAN_BALL_VARIANTS"]

# The unit-ball Bergman kernel ships with two first factors: the scalar
# 1 - |x|^2 |y|^2 (default; Hermitian and reproducing) and the octonion
# 1 - |x|^2 y^2 (the literal printed form, kept for adjudication).
BERGMAN_BALL_VARIANTS = ("scalar", "octonion")


@dataclass(frozen=True)
class DomainSpec:
    """Tagged descriptor: unit ball, right half-space, or strip 0 < Re < d.

    ``terms`` is the one-sided truncation order of the strip kernels' series
    (terms are summed in +/- n pairs out to |n| <= terms).
    """

    kind: str
    d: float = 1.0
    terms: int = 50

    def __post_init__(self):
        if self.kind not in ("ball", "halfspace", "strip"):
            raise ValueError(f"unknown domain kind {self.kind!r}")
        if self.kind == "strip":
            if not self.d > 0:
                raise ValueError("strip width d must be positive")
            if self.terms < 1:
                raise ValueError("strip truncation must be >= 1")

    @classmethod
    def ball(cls):
        return cls(kind="ball")

    @classmethod
    def halfspace(cls):
        return cls(kind="halfspace")

    @classmethod
    def strip(cls, d: float, terms: int = 50):
        return cls(kind="strip", d=d, terms=terms)

    def contains(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        if self.kind == "ball":
            return norm(x) < 1.0
        if self.kind == "halfspace":
            return real(x) > 0.0
        re = real(x)
        return (re > 0.0) & (re < self.d)

    def require_interior(self, x):
        if not np.all(self.contains(x)):
            raise OutsideDomainError(f"point not interior to {self.kind} domain")

    def describe(self) -> str:
        if self.kind == "strip":
            return f"strip(d={self.d})"
        return self.kind
