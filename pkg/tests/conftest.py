import numpy as np
import pytest

from octokernels import algebra as alg


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_octonions(rng, n, scale=1.0):
    return rng.uniform(-scale, scale, size=(n, 8))


def ball_point(rng, radius_lo, radius_hi):
    p = rng.normal(size=8)
    return p * (rng.uniform(radius_lo, radius_hi) / float(alg.norm(p)))


def assert_close(a, b, tol=1e-12):
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    gap = float(np.max(np.abs(a - b)))
    assert gap <= tol, f"max gap {gap:.3e} exceeds {tol:.1e}\n a={a}\n b={b}"
