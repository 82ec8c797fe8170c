"""Backend selection for the batched octonion product.

At import time we prefer the compiled Cython core and fall back to a
vectorized numpy implementation.  Set ``OCTOKERNELS_DISABLE_EXT=1`` to force
the fallback (used by the backend-comparison benchmark and tests).
"""

import os

import numpy as np

_ext = None
if os.environ.get("OCTOKERNELS_DISABLE_EXT", "0") not in ("1", "true", "yes"):
    try:
        from . import _octmul as _ext
    except ImportError:
        _ext = None

BACKEND = "cython" if _ext is not None else "numpy"
HAVE_EXT = _ext is not None


def make_multiplier(index_table, sign_table, force_fallback=False):
    """Build a rowwise (n, 8) x (n, 8) -> (n, 8) multiplier for the table."""
    idx = np.ascontiguousarray(index_table, dtype=np.int64)
    sgn = np.ascontiguousarray(sign_table, dtype=np.float64)

    # Fallback path: for each output component k collect the eight signed
    # (i, j) source pairs once, then accumulate with vectorized arithmetic.
    contrib = [[] for _ in range(8)]
    for i in range(8):
        for j in range(8):
            contrib[idx[i, j]].append((sgn[i, j], i, j))

    def mul2d_numpy(a, b):
        out = np.empty_like(a)
        for k in range(8):
            s, i, j = contrib[k][0]
            acc = s * a[:, i] * b[:, j]
            for s, i, j in contrib[k][1:]:
                acc += s * a[:, i] * b[:, j]
            out[:, k] = acc
        return out

    if _ext is None or force_fallback:
        return mul2d_numpy

    def mul2d_cython(a, b):
        return _ext.mul2d(a, b, idx, sgn)

    return mul2d_cython
