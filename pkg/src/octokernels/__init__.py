"""Octonionic function-space numerics.

Exact octonion algebra, the slice (book) structure, truncated power series,
circle/disk/sphere/ball quadrature, the closed-form reproducing kernels of
the unit ball, right half-space and real-direction strip in both the
monogenic and slice settings, weighted inner products, and a ``verify`` CLI
that certifies the testable identities.
"""

from ._accel import BACKEND, HAVE_EXT
from .algebra import Octonion
from .errors import OctokernelsError, OutsideDomainError, SingularityError

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "HAVE_EXT",
    "Octonion",
    "OctokernelsError",
    "OutsideDomainError",
    "SingularityError",
    "__version__",
]
