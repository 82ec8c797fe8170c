"""Octonion arithmetic in the Baez basis convention.

Octonions are stored as length-8 float arrays ``(c0, .., c7)`` with ``e0 = 1``
the real unit.  Every function here accepts arrays of shape ``(..., 8)`` and
broadcasts, so the same code path serves scalar algebra and the Monte Carlo
batches.  The imaginary units obey ``e4 = e1*e2``, ``e5 = e1*e3``,
``e6 = e2*e3`` and ``e7 = e4*e3 = (e1*e2)*e3``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _accel
from .errors import SingularityError

__all__ = [
    "MUL_INDEX", "MUL_SIGN", "EPS_INVERSE", "Octonion", "IdentityResiduals",
    "mul", "conj", "real", "imag", "norm", "norm_squared", "euclid_inner",
    "inverse", "power", "associator", "identity_residuals", "basis", "scalar",
    "parse_octonion", "format_octonion", "imaginary_table_entry",
]

# Signed products of the seven imaginary units, row * column.  Entry (s, k)
# means e_row * e_col = s * e_k.
_IMAG_ROWS = (
    # e1*e1..e1*e7
    ((-1, 0), (+1, 4), (+1, 5), (-1, 2), (-1, 3), (-1, 7), (+1, 6)),
    ((-1, 4), (-1, 0), (+1, 6), (+1, 1), (+1, 7), (-1, 3), (-1, 5)),
    ((-1, 5), (-1, 6), (-1, 0), (-1, 7), (+1, 1), (+1, 2), (+1, 4)),
    ((+1, 2), (-1, 1), (+1, 7), (-1, 0), (-1, 6), (+1, 5), (-1, 3)),
    ((+1, 3), (-1, 7), (-1, 1), (+1, 6), (-1, 0), (-1, 4), (+1, 2)),
    ((+1, 7), (+1, 3), (-1, 2), (-1, 5), (+1, 4), (-1, 0), (-1, 1)),
    ((-1, 6), (+1, 5), (-1, 4), (+1, 3), (-1, 2), (+1, 1), (-1, 0)),
)


def _build_tables():
    idx = np.zeros((8, 8), dtype=np.int64)
    sgn = np.zeros((8, 8), dtype=np.float64)
    for i in range(8):
        idx[0, i] = idx[i, 0] = i
        sgn[0, i] = sgn[i, 0] = 1.0
    for i in range(1, 8):
        for j in range(1, 8):
            s, k = _IMAG_ROWS[i - 1][j - 1]
            idx[i, j] = k
            sgn[i, j] = float(s)
    return idx, sgn


MUL_INDEX, MUL_SIGN = _build_tables()
MUL_INDEX.setflags(write=False)
MUL_SIGN.setflags(write=False)

_mul2d = _accel.make_multiplier(MUL_INDEX, MUL_SIGN)

# Smallest magnitude accepted by inverse(); the algebra has no zero divisors,
# so anything clearly above underflow is invertible.
EPS_INVERSE = 1e-300


def imaginary_table_entry(i: int, j: int) -> tuple[int, int]:
    """Signed product of imaginary units: e_i * e_j = sign * e_index."""
    if not (1 <= i <= 7 and 1 <= j <= 7):
        raise IndexError("imaginary units are e1..e7")
    s, k = _IMAG_ROWS[i - 1][j - 1]
    return s, k


def _as_components(x) -> np.ndarray:
    a = np.asarray(x, dtype=np.float64)
    if a.shape[-1:] != (8,):
        raise ValueError(f"expected trailing dimension 8, got shape {a.shape}")
    return a


def mul(a, b) -> np.ndarray:
    """Octonion product, broadcasting over leading dimensions."""
    a = _as_components(a)
    b = _as_components(b)
    a, b = np.broadcast_arrays(a, b)
    shape = a.shape
    a2 = np.ascontiguousarray(a.reshape(-1, 8))
    b2 = np.ascontiguousarray(b.reshape(-1, 8))
    return _mul2d(a2, b2).reshape(shape)


def conj(a) -> np.ndarray:
    a = _as_components(a)
    out = -a
    out[..., 0] = a[..., 0]
    return out


def real(a) -> np.ndarray:
    return _as_components(a)[..., 0]


def imag(a) -> np.ndarray:
    """Imaginary part as a full 8-component array with zero real slot."""
    out = _as_components(a).copy()
    out[..., 0] = 0.0
    return out


def norm_squared(a) -> np.ndarray:
    a = _as_components(a)
    return np.einsum("...i,...i->...", a, a)


def norm(a) -> np.ndarray:
    return np.sqrt(norm_squared(a))


def euclid_inner(a, b) -> np.ndarray:
    """Euclidean pairing <a, b> = Re(a * conj(b)) = sum_i a_i b_i."""
    a = _as_components(a)
    b = _as_components(b)
    return np.einsum("...i,...i->...", a, b)


def inverse(a, eps: float = EPS_INVERSE) -> np.ndarray:
    a = _as_components(a)
    n2 = norm_squared(a)
    if np.any(np.sqrt(n2) <= eps):
        raise SingularityError("inverse of a (near-)zero octonion", singular_set="{0}")
    return conj(a) / n2[..., None]


def scalar(c) -> np.ndarray:
    """Embed real scalars: shape (...) -> (..., 8)."""
    c = np.asarray(c, dtype=np.float64)
    out = np.zeros(c.shape + (8,))
    out[..., 0] = c
    return out


def basis(i: int, value: float = 1.0) -> np.ndarray:
    if not 0 <= i <= 7:
        raise IndexError("basis index must be 0..7")
    out = np.zeros(8)
    out[i] = value
    return out


def power(a, n: int) -> np.ndarray:
    """n-th power by repeated multiplication (association-free for one base)."""
    if n < 0:
        raise ValueError("power requires n >= 0")
    a = _as_components(a)
    out = np.zeros(a.shape)
    out[..., 0] = 1.0
    for _ in range(n):
        out = mul(out, a)
    return out


def associator(a, b, c) -> np.ndarray:
    """First associator [a, b, c] = (ab)c - a(bc)."""
    return mul(mul(a, b), c) - mul(a, mul(b, c))


@dataclass(frozen=True)
class IdentityResiduals:
    """Scale-normalized residuals of the composition-algebra identities.

    All fields are arrays matching the broadcast shape of the inputs; each is
    divided by ``|a||b||c| + 1`` so a single tolerance works at any scale.
    """

    left_alternative: np.ndarray
    right_alternative: np.ndarray
    flexible: np.ndarray
    moufang1: np.ndarray
    moufang2: np.ndarray
    moufang3: np.ndarray
    moufang4: np.ndarray
    norm_composition: np.ndarray
    real_associative: np.ndarray
    adjoint_shift: np.ndarray

    def max(self) -> float:
        return float(max(np.max(np.asarray(v)) for v in vars(self).values()))


def identity_residuals(a, b, c) -> IdentityResiduals:
    """Residuals of alternativity, flexibility, the four Moufang identities,
    norm composition, Re((ab)c) = Re(a(bc)) and <ab, c> = <b, conj(a) c>."""
    a = _as_components(a)
    b = _as_components(b)
    c = _as_components(c)
    scale = norm(a) * norm(b) * norm(c) + 1.0

    ab = mul(a, b)
    ba = mul(b, a)
    aa = mul(a, a)

    left_alt = norm(mul(a, ab) - mul(aa, b))
    right_alt = norm(mul(ba, a) - mul(b, aa))
    flex = norm(mul(ab, a) - mul(a, ba))

    # Moufang identities with (z, x, y) = (a, b, c).
    m1 = norm(mul(a, mul(b, mul(a, c))) - mul(mul(mul(a, b), a), c))
    m2 = norm(mul(b, mul(a, mul(c, a))) - mul(mul(mul(b, a), c), a))
    zx_yz = mul(mul(a, b), mul(c, a))
    m3 = norm(zx_yz - mul(mul(a, mul(b, c)), a))
    m4 = norm(zx_yz - mul(a, mul(mul(b, c), a)))

    norm_comp = np.abs(norm(ab) - norm(a) * norm(b))
    re_assoc = np.abs(real(mul(ab, c)) - real(mul(a, mul(b, c))))
    adj = np.abs(euclid_inner(ab, c) - euclid_inner(b, mul(conj(a), c)))

    return IdentityResiduals(
        left_alternative=left_alt / scale,
        right_alternative=right_alt / scale,
        flexible=flex / scale,
        moufang1=m1 / scale,
        moufang2=m2 / scale,
        moufang3=m3 / scale,
        moufang4=m4 / scale,
        norm_composition=norm_comp / scale,
        real_associative=re_assoc / scale,
        adjoint_shift=adj / scale,
    )


def format_octonion(a) -> str:
    """Eight comma-separated decimal literals, locale-independent."""
    a = _as_components(a)
    if a.ndim != 1:
        raise ValueError("format_octonion expects a single octonion")
    # v + 0.0 normalizes negative zeros out of the printed form
    return ",".join(np.format_float_positional(v + 0.0, trim="-") for v in a)


def parse_octonion(text: str) -> np.ndarray:
    parts = text.split(",")
    if len(parts) != 8:
        raise ValueError(f"octonion literal needs 8 components, got {len(parts)}")
    try:
        vals = [float(p) for p in parts]
    except ValueError as exc:
        raise ValueError(f"bad octonion literal {text!r}") from exc
    a = np.array(vals, dtype=np.float64)
    if not np.all(np.isfinite(a)):
        raise ValueError("octonion components must be finite")
    return a


class Octonion:
    """Immutable octonion with operator sugar over the array functions."""

    __slots__ = ("_c",)

    def __init__(self, components):
        c = np.array(components, dtype=np.float64).reshape(8)
        if not np.all(np.isfinite(c)):
            raise ValueError("octonion components must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "_c", c)

    @classmethod
    def from_components(cls, *c):
        return cls(c)

    @classmethod
    def scalar(cls, r):
        return cls(scalar(float(r)))

    @classmethod
    def unit(cls, i):
        return cls(basis(i))

    @classmethod
    def zero(cls):
        return cls(np.zeros(8))

    @classmethod
    def parse(cls, text):
        return cls(parse_octonion(text))

    @property
    def components(self):
        return self._c

    def __array__(self, dtype=None, copy=None):
        return np.array(self._c, dtype=dtype)

    def __getitem__(self, i):
        return float(self._c[i])

    @property
    def re(self):
        return float(self._c[0])

    @property
    def im(self):
        return Octonion(imag(self._c))

    def conjugate(self):
        return Octonion(conj(self._c))

    def norm(self):
        return float(norm(self._c))

    def norm_squared(self):
        return float(norm_squared(self._c))

    def inverse(self, eps=EPS_INVERSE):
        return Octonion(inverse(self._c, eps))

    def pow(self, n):
        return Octonion(power(self._c, n))

    __pow__ = pow

    def literal(self):
        return format_octonion(self._c)

    def _coerce(self, other):
        if isinstance(other, Octonion):
            return other._c
        if isinstance(other, (int, float)):
            return scalar(float(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else Octonion(self._c + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else Octonion(self._c - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else Octonion(o - self._c)

    def __neg__(self):
        return Octonion(-self._c)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return Octonion(self._c * other)
        if isinstance(other, Octonion):
            return Octonion(mul(self._c, other._c))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return Octonion(self._c * other)
        if isinstance(other, Octonion):
            return Octonion(mul(other._c, self._c))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return Octonion(self._c / other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, float)):
            other = Octonion.scalar(other)
        if not isinstance(other, Octonion):
            return NotImplemented
        return bool(np.array_equal(self._c, other._c))

    def __hash__(self):
        return hash(self._c.tobytes())

    def isclose(self, other, tol=1e-12):
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot compare Octonion with {type(other)!r}")
        return bool(norm(self._c - o) <= tol)

    def __repr__(self):
        return f"Octonion({self.literal()})"
