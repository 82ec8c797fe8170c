import numpy as np
import pytest

from octokernels import algebra as alg
from octokernels import series as ser
from octokernels import slices as sl

from conftest import assert_close


def test_evaluate_constant(rng):
    f = ser.OctonionPowerSeries.constant(alg.basis(4) - alg.scalar(2.0))
    x = rng.uniform(-1, 1, 8)
    assert np.array_equal(f.evaluate(x), alg.basis(4) - alg.scalar(2.0))


def test_evaluate_monomial_order():
    # f(x) = x e1 at x = e2: the value is e2 e1 = -e4
    f = ser.OctonionPowerSeries.monomial(1, alg.basis(1))
    assert np.array_equal(f.evaluate(alg.basis(2)), -alg.basis(4))


def test_evaluate_batch(rng):
    f = ser.random_series(rng, degree=6)
    xs = rng.uniform(-0.5, 0.5, (17, 8))
    batch = f.evaluate(xs)
    for k in range(17):
        assert_close(batch[k], f.evaluate(xs[k]), 0.0)


def test_evaluate_matches_split_components(rng):
    # On a slice, evaluation reduces to complex arithmetic on the four
    # splitting coordinates, with the conjugate action on the fourth.
    for _ in range(50):
        f = ser.random_series(rng, degree=8)
        frame = sl.splitting_frame(sl.random_imaginary_unit(rng),
                                   seed=int(rng.integers(2 ** 32)))
        u, v = rng.uniform(-0.6, 0.6), rng.uniform(0, 0.6)
        z = complex(u, v)
        x = alg.scalar(u) + v * np.asarray(frame.i1)
        coeff_parts = np.array([sl.split_components(c, frame)
                                for c in f.coefficients])
        zn = z ** np.arange(len(f.coefficients))
        expected = np.empty(4, dtype=np.complex128)
        expected[:3] = (zn[:, None] * coeff_parts[:, :3]).sum(axis=0)
        expected[3] = (np.conj(zn) * coeff_parts[:, 3]).sum()
        assert_close(sl.recompose_components(expected, frame), f.evaluate(x), 1e-12)


def test_degree_and_padding():
    f = ser.OctonionPowerSeries.monomial(3, alg.basis(2))
    assert f.degree == 3
    g = f.padded(5)
    assert g.degree == 5
    assert np.array_equal(g.coefficients[3], alg.basis(2))
    with pytest.raises(ValueError):
        f.padded(1)
    h = f + ser.OctonionPowerSeries.constant(alg.scalar(1.0))
    assert h.degree == 3
    assert np.array_equal(h.coefficients[0], alg.scalar(1.0))


def test_hardy_inner_coeff_examples():
    one = ser.OctonionPowerSeries.constant(alg.scalar(1.0))
    assert np.array_equal(ser.hardy_inner_coeff(one, one), alg.scalar(1.0))

    f = ser.OctonionPowerSeries(np.stack([alg.scalar(1.0), alg.basis(1)]))
    g = ser.OctonionPowerSeries.monomial(1, alg.basis(2))
    # conj(e2) e1 = e4
    assert np.array_equal(ser.hardy_inner_coeff(f, g), alg.basis(4))


def test_hardy_inner_is_hermitian_and_positive(rng):
    for _ in range(200):
        f = ser.random_series(rng, degree=10)
        g = ser.random_series(rng, degree=7)
        fg = ser.hardy_inner_coeff(f, g)
        gf = ser.hardy_inner_coeff(g, f)
        assert_close(alg.conj(fg), gf, 1e-12)
        ff = ser.hardy_inner_coeff(f, f)
        assert_close(ff, alg.scalar(float(np.sum(alg.norm_squared(f.coefficients)))), 1e-12)
        assert ff[0] >= 0.0
    zero = ser.OctonionPowerSeries(np.zeros((4, 8)))
    assert np.array_equal(ser.hardy_inner_coeff(zero, zero), np.zeros(8))
    assert ser.hardy_norm(zero) == 0.0


def test_axiom_v_coefficient(rng):
    for _ in range(200):
        f = ser.random_series(rng, degree=9)
        a = rng.uniform(-1, 1, 8)
        lhs = ser.hardy_inner_coeff(f.scale_right(a), f)
        rhs = alg.mul(ser.hardy_inner_coeff(f, f), a)
        assert_close(lhs, rhs, 1e-12)


def test_hardy_norm_examples(rng):
    mono = ser.OctonionPowerSeries.monomial(7, alg.scalar(1.0))
    assert ser.hardy_norm(mono) == 1.0
    f = ser.OctonionPowerSeries(np.stack([alg.scalar(1.0), alg.basis(1)]))
    assert_close(ser.hardy_norm(f), np.sqrt(2.0))
    g = ser.random_series(rng, degree=12)
    assert_close(ser.hardy_norm(g) ** 2,
                 ser.hardy_inner_coeff(g, g)[0], 1e-12)


def test_bergman_norm_sq_examples():
    one = ser.OctonionPowerSeries.constant(alg.scalar(1.0))
    assert ser.bergman_norm_sq(one) == 1.0
    f = ser.OctonionPowerSeries.monomial(1, alg.basis(1))
    assert ser.bergman_norm_sq(f) == 0.5


def test_para_linearity_residual():
    f = ser.OctonionPowerSeries.constant(alg.basis(1))
    g = ser.OctonionPowerSeries.constant(alg.basis(2))
    resid, gap = ser.para_linearity_residual(f, g, alg.basis(3))
    assert resid == 0.0
    assert np.array_equal(gap, -2.0 * alg.basis(7))


def test_para_linearity_real_alpha(rng):
    f = ser.random_series(rng, degree=5)
    g = ser.random_series(rng, degree=5)
    resid, gap = ser.para_linearity_residual(f, g, alg.scalar(1.75))
    assert resid <= 1e-13
    assert float(alg.norm(gap)) <= 1e-13


def test_para_linearity_random(rng):
    worst = 0.0
    witnessed = False
    for _ in range(300):
        f = ser.random_series(rng, degree=8)
        g = ser.random_series(rng, degree=8)
        a = rng.uniform(-1, 1, 8)
        resid, gap = ser.para_linearity_residual(f, g, a)
        worst = max(worst, resid)
        witnessed = witnessed or float(alg.norm(gap)) > 0.1
    assert worst <= 1e-12
    assert witnessed  # the pairing is para-linear but not octonion-linear


def test_series_validation():
    with pytest.raises(ValueError):
        ser.OctonionPowerSeries(np.zeros((0, 8)))
    with pytest.raises(ValueError):
        ser.OctonionPowerSeries(np.full((2, 8), np.nan))
    with pytest.raises(ValueError):
        ser.OctonionPowerSeries(np.zeros((2, 7)))
