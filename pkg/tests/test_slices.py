import numpy as np
import pytest

from octokernels import algebra as alg
from octokernels import slices as sl
from octokernels.series import random_series

from conftest import assert_close


def test_decompose_examples():
    p = sl.decompose(alg.scalar(2.0) + 3.0 * alg.basis(5))
    assert p.u == 2.0 and p.v == 3.0
    assert np.array_equal(np.asarray(p.axis), alg.basis(5))

    p = sl.decompose(alg.scalar(7.0))
    assert p.u == 7.0 and p.v == 0.0
    assert np.array_equal(np.asarray(p.axis), alg.basis(1))

    p = sl.decompose(alg.scalar(1.0) + alg.basis(1) + alg.basis(2))
    assert p.u == 1.0
    assert_close(p.v, np.sqrt(2.0))
    assert_close(np.asarray(p.axis), (alg.basis(1) + alg.basis(2)) / np.sqrt(2.0))


def test_compose_decompose_roundtrip(rng):
    for _ in range(300):
        x = rng.uniform(-2, 2, 8)
        assert_close(sl.compose(sl.decompose(x)), x, 1e-12)
    p = sl.SlicePoint(u=0.3, v=1.7, axis=sl.random_imaginary_unit(rng))
    q = sl.decompose(sl.compose(p))
    assert_close([q.u, q.v], [p.u, p.v], 1e-12)
    assert_close(np.asarray(q.axis), np.asarray(p.axis), 1e-12)


def test_slice_point_validation(rng):
    with pytest.raises(ValueError):
        sl.SlicePoint(u=0.0, v=-1.0, axis=sl.random_imaginary_unit(rng))
    with pytest.raises(ValueError):
        sl.ImaginaryUnit(alg.scalar(1.0))
    with pytest.raises(ValueError):
        sl.ImaginaryUnit(2.0 * alg.basis(1))


def test_orbit_sample(rng):
    x = alg.scalar(2.0) + 3.0 * alg.basis(5)
    assert_close(sl.orbit_sample(x, sl.ImaginaryUnit(alg.basis(1))),
                 alg.scalar(2.0) + 3.0 * alg.basis(1), 0.0)
    r = alg.scalar(-4.0)
    assert_close(sl.orbit_sample(r, sl.random_imaginary_unit(rng)), r, 0.0)
    for _ in range(100):
        x = rng.uniform(-2, 2, 8)
        J = sl.random_imaginary_unit(rng)
        assert_close(alg.norm(sl.orbit_sample(x, J)), alg.norm(x), 1e-12)


def test_representation_formula_collapse(rng):
    I = sl.random_imaginary_unit(rng)
    fp = rng.uniform(-1, 1, 8)
    fm = rng.uniform(-1, 1, 8)
    assert_close(sl.representation_formula(fp, fm, I, I), fp, 1e-14)
    c = rng.uniform(-1, 1, 8)
    J = sl.random_imaginary_unit(rng)
    assert_close(sl.representation_formula(c, c, I, J), c, 1e-14)


def test_representation_formula_series_oracle(rng):
    worst = 0.0
    for _ in range(1000):
        f = random_series(rng, degree=int(rng.integers(0, 10)))
        I = sl.random_imaginary_unit(rng)
        J = sl.random_imaginary_unit(rng)
        u = rng.uniform(-0.6, 0.6)
        v = rng.uniform(0.0, 0.6)
        fp = f.evaluate(alg.scalar(u) + v * np.asarray(J))
        fm = f.evaluate(alg.scalar(u) - v * np.asarray(J))
        got = sl.representation_formula(fp, fm, I, J)
        want = f.evaluate(alg.scalar(u) + v * np.asarray(I))
        worst = max(worst, float(alg.norm(got - want)))
    assert worst <= 1e-12


def test_splitting_frame_gram(rng):
    for _ in range(100):
        frame = sl.splitting_frame(sl.random_imaginary_unit(rng),
                                   seed=int(rng.integers(2 ** 32)))
        assert_close(frame.gram(), np.eye(8), 1e-12)


def test_splitting_frame_deterministic(rng):
    i1 = sl.random_imaginary_unit(rng)
    f1 = sl.splitting_frame(i1, seed=11)
    f2 = sl.splitting_frame(i1, seed=11)
    assert np.array_equal(f1.basis, f2.basis)
    f3 = sl.splitting_frame(i1, seed=12)
    assert not np.array_equal(f1.basis, f3.basis)


def test_canonical_frame_products():
    frame = sl.SplittingFrame(
        i1=sl.ImaginaryUnit(alg.basis(1)),
        i2=sl.ImaginaryUnit(alg.basis(2)),
        i4=sl.ImaginaryUnit(alg.basis(3)),
    )
    # basis contains e1 e2 = e4 and (e1 e2) e3 = e7
    assert np.array_equal(frame.basis[3], alg.basis(4))
    assert np.array_equal(frame.basis[7], alg.basis(7))


def test_split_components_examples(rng):
    frame = sl.splitting_frame(sl.random_imaginary_unit(rng), seed=5)
    parts = sl.split_components(alg.scalar(1.0), frame)
    assert_close(parts.view(np.float64), [1, 0, 0, 0, 0, 0, 0, 0], 1e-14)
    parts = sl.split_components(np.asarray(frame.i4), frame)
    assert_close(parts.view(np.float64), [0, 0, 0, 0, 1, 0, 0, 0], 1e-14)
    for _ in range(200):
        v = rng.uniform(-2, 2, 8)
        parts = sl.split_components(v, frame)
        assert_close(sl.recompose_components(parts, frame), v, 1e-12)


def test_left_slice_multiplication_action(rng):
    # Left multiplication by z in the slice of I1 acts on the four splitting
    # coordinates as (z F1, z F2, z G1, conj(z) G2): the fourth pair flips
    # because I1 (I2 I4) = -(I1 I2) I4 in any splitting frame.
    for _ in range(50):
        frame = sl.splitting_frame(sl.random_imaginary_unit(rng),
                                   seed=int(rng.integers(2 ** 32)))
        z = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        zo = alg.scalar(z.real) + z.imag * np.asarray(frame.i1)
        w = rng.uniform(-1, 1, 8)
        parts = sl.split_components(w, frame)
        acted = np.array([z * parts[0], z * parts[1], z * parts[2],
                          np.conj(z) * parts[3]])
        assert_close(sl.recompose_components(acted, frame), alg.mul(zo, w), 1e-12)
