"""The book structure of the octonions: slices, orbits and splitting frames.

A non-real octonion factors uniquely as ``x = u + I v`` with ``I`` a unit
imaginary octonion and ``v > 0``; the plane ``R + R I`` behaves like a copy
of the complex numbers.  This module provides that decomposition, the sphere
of points sharing ``(u, v)``, the two-slice reconstruction formula, and the
orthonormal 8-element frame that splits a value into four complex pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import basis, conj, euclid_inner, imag, mul, norm, real, scalar

__all__ = [
    "ImaginaryUnit", "SlicePoint", "SplittingFrame", "random_imaginary_unit",
    "decompose", "compose", "orbit_sample", "representation_formula",
    "splitting_frame", "split_components", "recompose_components",
]

_REAL_AXIS_EPS = 1e-300


@dataclass(frozen=True)
class ImaginaryUnit:
    """Unit octonion with zero real part; squares to -1."""

    value: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.value, dtype=np.float64).reshape(8)
        if abs(v[0]) > 1e-12:
            raise ValueError("imaginary unit must have zero real part")
        n = float(norm(v))
        if abs(n - 1.0) > 1e-12:
            raise ValueError("imaginary unit must have norm 1")
        v = v.copy()
        v[0] = 0.0
        v /= float(norm(v))
        v.setflags(write=False)
        object.__setattr__(self, "value", v)

    def __array__(self, dtype=None, copy=None):
        return np.array(self.value, dtype=dtype)


def random_imaginary_unit(rng: np.random.Generator) -> ImaginaryUnit:
    v = rng.normal(size=8)
    v[0] = 0.0
    return ImaginaryUnit(v / norm(v))


@dataclass(frozen=True)
class SlicePoint:
    """Coordinates u + axis*v with the sign convention v >= 0."""

    u: float
    v: float
    axis: ImaginaryUnit

    def __post_init__(self):
        if self.v < 0:
            raise ValueError("slice coordinate v must be >= 0")


def compose(p: SlicePoint) -> np.ndarray:
    return scalar(p.u) + p.v * np.asarray(p.axis)


def decompose(x) -> SlicePoint:
    """Split x = u + I v; real points get axis e1 and v = 0 by convention."""
    x = np.asarray(x, dtype=np.float64).reshape(8)
    u = float(real(x))
    im = imag(x)
    v = float(norm(im))
    if v <= _REAL_AXIS_EPS:
        return SlicePoint(u=u, v=0.0, axis=ImaginaryUnit(basis(1)))
    return SlicePoint(u=u, v=v, axis=ImaginaryUnit(im / v))


def orbit_sample(x, J: ImaginaryUnit) -> np.ndarray:
    """The point of the sphere [x] lying on the slice of J."""
    p = decompose(x)
    return scalar(p.u) + p.v * np.asarray(J)


def representation_formula(f_plus, f_minus, I: ImaginaryUnit, J: ImaginaryUnit) -> np.ndarray:
    """Reconstruct f(u + vI) from f_plus = f(u + vJ) and f_minus = f(u - vJ).

    Parenthesized exactly as 1/2 [f+ + f-] + 1/2 I (J (f- - f+)).
    """
    f_plus = np.asarray(f_plus, dtype=np.float64)
    f_minus = np.asarray(f_minus, dtype=np.float64)
    correction = mul(np.asarray(I), mul(np.asarray(J), f_minus - f_plus))
    return 0.5 * (f_plus + f_minus) + 0.5 * correction


def _project_off(v: np.ndarray, others) -> np.ndarray:
    for o in others:
        v = v - euclid_inner(v, o) * o
    return v


@dataclass(frozen=True)
class SplittingFrame:
    """Orthonormal product basis {1, I1, I2, I1 I2, I4, I1 I4, I2 I4, (I1 I2) I4}."""

    i1: ImaginaryUnit
    i2: ImaginaryUnit
    i4: ImaginaryUnit
    basis: np.ndarray = field(init=False)

    def __post_init__(self):
        one = scalar(1.0)
        a, b, c = (np.asarray(u) for u in (self.i1, self.i2, self.i4))
        ab = mul(a, b)
        rows = np.stack([one, a, b, ab, c, mul(a, c), mul(b, c), mul(ab, c)])
        rows.setflags(write=False)
        object.__setattr__(self, "basis", rows)

    def gram(self) -> np.ndarray:
        return self.basis @ self.basis.T


def splitting_frame(i1: ImaginaryUnit, seed: int = 0) -> SplittingFrame:
    """Complete I1 to a splitting frame with seeded, deterministic choices.

    I2 is a unit imaginary orthogonal to I1; I4 is a unit imaginary
    orthogonal to the quaternion span {1, I1, I2, I1 I2}.
    """
    rng = np.random.default_rng(seed)
    a = np.asarray(i1)
    while True:
        cand = rng.normal(size=8)
        cand[0] = 0.0
        cand = _project_off(cand, [a])
        n = float(norm(cand))
        if n > 1e-6:
            i2 = ImaginaryUnit(cand / n)
            break
    b = np.asarray(i2)
    ab = mul(a, b)
    while True:
        cand = rng.normal(size=8)
        cand[0] = 0.0
        cand = _project_off(cand, [a, b, ab])
        n = float(norm(cand))
        if n > 1e-6:
            i4 = ImaginaryUnit(cand / n)
            break
    return SplittingFrame(i1=i1, i2=i2, i4=i4)


def split_components(value, frame: SplittingFrame) -> np.ndarray:
    """Coordinates of value in the frame basis as four complex numbers.

    Returns ``(F1, F2, G1, G2)`` over the slice of I1, pairing the basis as
    (1, I1), (I2, I1 I2), (I4, I1 I4), (I2 I4, (I1 I2) I4).
    """
    value = np.asarray(value, dtype=np.float64)
    coords = value @ frame.basis.T
    return coords[..., 0::2] + 1j * coords[..., 1::2]


def recompose_components(parts, frame: SplittingFrame) -> np.ndarray:
    parts = np.asarray(parts, dtype=np.complex128)
    coords = np.empty(parts.shape[:-1] + (8,))
    coords[..., 0::2] = parts.real
    coords[..., 1::2] = parts.imag
    return coords @ frame.basis
