# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled batched octonion product.

The signed index table is passed in from ``octokernels.algebra`` so there is a
single authoritative copy of the multiplication rules.
"""

import numpy as np


def mul2d(const double[:, ::1] a, const double[:, ::1] b,
          const long long[:, ::1] idx, const double[:, ::1] sgn):
    """Rowwise product of two (n, 8) component arrays."""
    cdef Py_ssize_t n = a.shape[0]
    out_arr = np.zeros((n, 8), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t t, i, j
    cdef double ai
    with nogil:
        for t in range(n):
            for i in range(8):
                ai = a[t, i]
                if ai == 0.0:
                    continue
                for j in range(8):
                    out[t, idx[i, j]] += sgn[i, j] * ai * b[t, j]
    return out_arr
