import numpy as np
import pytest

from octokernels import algebra as alg
from octokernels import quadrature as quad
from octokernels.slices import random_imaginary_unit

from conftest import assert_close


def octonionize(values):
    """Lift a real array (K,) to (K, 8) with the value in the real slot."""
    out = np.zeros(values.shape + (8,))
    out[..., 0] = values
    return out


def test_circle_constant():
    rule = quad.CircleRule(16)
    got = quad.integrate_circle(rule, lambda th: octonionize(np.ones_like(th)))
    assert_close(got, alg.scalar(2 * np.pi), 1e-13)


def test_circle_exponential_orthogonality(rng):
    I = np.asarray(random_imaginary_unit(rng))
    rule = quad.CircleRule(32)

    def wave(n):
        def f(th):
            return alg.scalar(np.cos(n * th)) + np.sin(n * th)[:, None] * I
        return f

    got = quad.integrate_circle(rule, wave(1))
    assert float(alg.norm(got)) <= 1e-14

    for n in range(0, 15):
        for m in range(0, 15):
            def f(th, n=n, m=m):
                em = alg.scalar(np.cos(m * th)) + np.sin(m * th)[:, None] * I
                en = alg.scalar(np.cos(n * th)) - np.sin(n * th)[:, None] * I
                return alg.mul(en, em)
            got = quad.integrate_circle(rule, f)
            expected = alg.scalar(2 * np.pi if n == m else 0.0)
            assert_close(got, expected, 1e-12)


def test_circle_trig_exactness():
    # exact for trig polynomials of degree < M
    rule = quad.CircleRule(11)
    for n in range(1, 11):
        got = quad.integrate_circle(rule, lambda th, n=n: octonionize(np.cos(n * th) ** 2))
        assert_close(got[0], np.pi, 1e-12)


def test_disk_constant_and_moments():
    rule = quad.DiskRule(radial_order=12, angular_nodes=24)
    got = quad.integrate_disk(rule, lambda r, th: octonionize(np.ones_like(r)))
    assert_close(got, alg.scalar(np.pi), 1e-12)
    got = quad.integrate_disk(rule, lambda r, th: octonionize(np.ones_like(r)),
                              normalized=True)
    assert_close(got, alg.scalar(1.0), 1e-13)
    for n in range(0, 8):
        got = quad.integrate_disk(rule, lambda r, th, n=n: octonionize(r ** (2 * n)),
                                  normalized=True)
        assert_close(got[0], 1.0 / (n + 1), 1e-13)


def test_disk_holomorphic_moments(rng):
    I = np.asarray(random_imaginary_unit(rng))
    rule = quad.DiskRule(radial_order=10, angular_nodes=20)
    for n in range(0, 5):
        for m in range(0, 5):
            def f(r, th, n=n, m=m):
                zbar_n = alg.scalar(r ** n * np.cos(n * th)) - (r ** n * np.sin(n * th))[:, None] * I
                z_m = alg.scalar(r ** m * np.cos(m * th)) + (r ** m * np.sin(m * th))[:, None] * I
                return alg.mul(zbar_n, z_m)
            got = quad.integrate_disk(rule, f, normalized=True)
            expected = alg.scalar(1.0 / (n + 1) if n == m else 0.0)
            assert_close(got, expected, 1e-12)


def test_mc_sphere_constant_exact():
    sampler = quad.SphereSampler(samples=50_000, seed=3)
    est, se = quad.mc_sphere7(sampler, lambda ys: octonionize(np.ones(len(ys))))
    assert_close(est, alg.scalar(np.pi ** 4 / 3), 1e-12)
    assert float(np.max(se)) <= 1e-12


def test_mc_sphere_symmetry_and_alternativity(rng):
    sampler = quad.SphereSampler(samples=200_000, seed=5)
    est, se = quad.mc_sphere7(sampler, lambda ys: octonionize(ys[:, 0]))
    assert abs(est[0]) <= 4 * max(float(se[0]), 1e-15)

    # conj(y)(y e1) = e1 pointwise, so the integral has zero variance
    def f(ys):
        return alg.mul(alg.conj(ys), alg.mul(ys, np.broadcast_to(alg.basis(1), ys.shape)))

    sampler = quad.SphereSampler(samples=50_000, seed=6)
    est, se = quad.mc_sphere7(sampler, f)
    assert_close(est, np.pi ** 4 / 3 * alg.basis(1), 1e-11)
    assert float(np.max(se)) <= 1e-12


def test_mc_ball_constant_and_moments():
    sampler = quad.BallSampler(samples=50_000, seed=7)
    est, se = quad.mc_ball8(sampler, np.zeros(8), 1.0,
                            lambda ys: octonionize(np.ones(len(ys))))
    assert_close(est, alg.scalar(np.pi ** 4 / 24), 1e-12)

    sampler = quad.BallSampler(samples=400_000, seed=8)
    est, se = quad.mc_ball8(sampler, np.zeros(8), 1.0,
                            lambda ys: octonionize(ys[:, 3]))
    assert abs(est[0]) <= 4 * float(se[0])

    est, se = quad.mc_ball8(sampler, np.zeros(8), 1.0,
                            lambda ys: octonionize(np.einsum("ij,ij->i", ys, ys)))
    assert abs(est[0] - 0.8 * np.pi ** 4 / 24) <= 4 * float(se[0])


def test_ball_sampler_radial_profile():
    sampler = quad.BallSampler(samples=400_000, seed=9)
    total, count = 0.0, 0
    for pts in sampler.chunks():
        total += float(np.sum(pts * pts))
        count += len(pts)
    mean = total / count
    sigma = np.sqrt(0.8 * 0.2 / count)  # loose bound on Var(|y|^2) <= E - E^2
    assert abs(mean - 0.8) <= 3 * 0.25 / np.sqrt(count) + 3 * sigma


def test_mc_determinism():
    def f(ys):
        return alg.mul(ys, np.roll(ys, 1, axis=1))

    a1, s1 = quad.mc_sphere7(quad.SphereSampler(300_000, seed=11, stream=2), f)
    a2, s2 = quad.mc_sphere7(quad.SphereSampler(300_000, seed=11, stream=2), f)
    assert np.array_equal(a1, a2) and np.array_equal(s1, s2)

    b1, _ = quad.mc_sphere7(quad.SphereSampler(300_000, seed=11, stream=3), f)
    assert not np.array_equal(a1, b1)
    c1, _ = quad.mc_sphere7(quad.SphereSampler(300_000, seed=12, stream=2), f)
    assert not np.array_equal(a1, c1)


def test_mc_ball_radius_scaling():
    sampler = quad.BallSampler(samples=20_000, seed=13)
    est, _ = quad.mc_ball8(sampler, 2.0 * alg.basis(1), 0.5,
                           lambda ys: octonionize(np.ones(len(ys))))
    assert_close(est, alg.scalar(0.5 ** 8 * np.pi ** 4 / 24), 1e-12)
    with pytest.raises(ValueError):
        quad.mc_ball8(sampler, np.zeros(8), -1.0, lambda ys: ys)


def test_sampler_validation():
    with pytest.raises(ValueError):
        quad.SphereSampler(samples=0, seed=1)
    with pytest.raises(ValueError):
        quad.CircleRule(0)
    with pytest.raises(ValueError):
        quad.DiskRule(0, 4)
