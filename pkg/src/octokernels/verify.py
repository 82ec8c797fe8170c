"""Verification suites: every testable identity as a streamed check report.

Each check measures a residual against a tolerance; Monte Carlo checks pass
when the residual is below ``max(4 * stderr, tolerance)``.  Suites are pure
functions of the configuration, so identical configurations produce
bitwise-identical reports.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import algebra as alg
from . import inner_products as ip
from . import monogenic as mono
from . import slice_kernels as sk
from .domains import DomainSpec
from .quadrature import BallSampler, SphereSampler
from .series import (OctonionPowerSeries, bergman_norm_sq, hardy_inner_coeff,
                     para_linearity_residual, random_series)
from .slices import (ImaginaryUnit, compose, decompose, orbit_sample,
                     random_imaginary_unit, representation_formula,
                     split_components, recompose_components, splitting_frame)

__all__ = ["VerifyConfig", "VerificationReport", "run_suite", "SUITE_NAMES"]

DET_TOL = 1e-12       # algebra and closed-form identities
QUAD_TOL = 1e-10      # spectral quadrature identities
MC_REL_TOL = 0.02     # Monte Carlo reproduction, relative floor


@dataclass(frozen=True)
class VerifyConfig:
    seed: int = 7
    samples: int = 200_000
    trunc: int = 16
    tol: float | None = None
    d: float = 1.0
    terms: int = 50
    variant: str = "scalar"
    circle_nodes: int | None = None
    disk_order: int | None = None


@dataclass
class VerificationReport:
    suite: str
    check: str
    statement: str
    residual: float
    tolerance: float
    stderr: float | None
    samples: int | None
    seed: int
    passed: bool
    wall_ms: float

    def as_json(self) -> str:
        return json.dumps(
            {
                "suite": self.suite,
                "check": self.check,
                "statement": self.statement,
                "residual": self.residual,
                "tolerance": self.tolerance,
                "stderr": self.stderr,
                "samples": self.samples,
                "seed": self.seed,
                "pass": self.passed,
                "wall_ms": round(self.wall_ms, 3),
            }
        )


class _Recorder:
    def __init__(self, suite: str, cfg: VerifyConfig):
        self.suite = suite
        self.cfg = cfg
        self.reports: list[VerificationReport] = []
        self._stream = 0

    def next_stream(self) -> int:
        self._stream += 1
        return self._stream

    def det_tol(self, default: float) -> float:
        return self.cfg.tol if self.cfg.tol is not None else default

    def add(self, check: str, statement: str, fn: Callable):
        """fn() -> (residual, tolerance[, stderr[, samples]])."""
        t0 = time.perf_counter()
        out = fn()
        wall = (time.perf_counter() - t0) * 1e3
        residual, tolerance = float(out[0]), float(out[1])
        stderr = float(out[2]) if len(out) > 2 and out[2] is not None else None
        samples = int(out[3]) if len(out) > 3 and out[3] is not None else None
        gate = tolerance if stderr is None else max(4.0 * stderr, tolerance)
        self.reports.append(
            VerificationReport(
                suite=self.suite,
                check=check,
                statement=statement,
                residual=residual,
                tolerance=tolerance,
                stderr=stderr,
                samples=samples,
                seed=self.cfg.seed,
                passed=bool(residual <= gate),
                wall_ms=wall,
            )
        )


def _random_octonions(rng, n, scale=1.0):
    return rng.uniform(-scale, scale, size=(n, 8))


def _norm(a):
    return np.asarray(alg.norm(a))


# --------------------------------------------------------------------------
# algebra suite


def _suite_algebra(rec: _Recorder):
    cfg = rec.cfg
    for i in range(1, 8):
        for j in range(1, 8):
            s, k = alg.imaginary_table_entry(i, j)
            expected = alg.basis(k, float(s))

            def check(i=i, j=j, expected=expected):
                got = alg.mul(alg.basis(i), alg.basis(j))
                return float(alg.norm(got - expected)), 0.0

            rec.add(
                f"table-e{i}-e{j}",
                f"e{i} e{j} = {'-' if s < 0 else ''}e{k}" if k else f"e{i} e{j} = {s}",
                check,
            )

    rng = np.random.default_rng(cfg.seed)
    a = _random_octonions(rng, 10_000)
    b = _random_octonions(rng, 10_000)
    c = _random_octonions(rng, 10_000)
    res = alg.identity_residuals(a, b, c)
    tol = rec.det_tol(DET_TOL)
    named = {
        "left-alternative": ("x(xy) = (xx)y", res.left_alternative),
        "right-alternative": ("(yx)x = y(xx)", res.right_alternative),
        "flexible": ("(xy)x = x(yx)", res.flexible),
        "moufang-1": ("z(x(zy)) = ((zx)z)y", res.moufang1),
        "moufang-2": ("x(z(yz)) = ((xz)y)z", res.moufang2),
        "moufang-3": ("(zx)(yz) = (z(xy))z", res.moufang3),
        "moufang-4": ("(zx)(yz) = z((xy)z)", res.moufang4),
        "norm-composition": ("|xy| = |x||y|", res.norm_composition),
        "real-associative": ("Re((ab)c) = Re(a(bc))", res.real_associative),
        "adjoint-shift": ("<ab, c> = <b, conj(a) c>", res.adjoint_shift),
    }
    for key, (statement, arr) in named.items():
        rec.add(
            f"identity-{key}",
            f"{statement} on 10^4 seeded random triples (scale-normalized)",
            lambda arr=arr: (float(np.max(arr)), tol),
        )

    def bilinear():
        s, t = rng.uniform(-2, 2, 2)
        lhs = alg.mul(s * a[:500] + t * b[:500], c[:500])
        rhs = s * alg.mul(a[:500], c[:500]) + t * alg.mul(b[:500], c[:500])
        scale = _norm(lhs) + 1.0
        return float(np.max(_norm(lhs - rhs) / scale)), tol

    rec.add("bilinearity", "the product is R-bilinear", bilinear)

    def inverse_check():
        nz = a[_norm(a) > 1e-3][:1000]
        resid = _norm(alg.mul(nz, alg.inverse(nz)) - alg.scalar(1.0))
        return float(np.max(resid)), tol

    rec.add("inverse", "a * inverse(a) = 1 away from zero", inverse_check)

    rec.add(
        "non-associativity-witness",
        "associator(e1, e2, e3) = 2 e7 (the algebra is not associative)",
        lambda: (
            float(alg.norm(alg.associator(alg.basis(1), alg.basis(2), alg.basis(3))
                           - 2.0 * alg.basis(7))),
            0.0,
        ),
    )


# --------------------------------------------------------------------------
# slice-structure suite


def _suite_slice_structure(rec: _Recorder):
    cfg = rec.cfg
    rng = np.random.default_rng(cfg.seed)
    tol = rec.det_tol(DET_TOL)

    def roundtrip():
        pts = _random_octonions(rng, 1000, 2.0)
        worst = 0.0
        for p in pts:
            worst = max(worst, float(alg.norm(compose(decompose(p)) - p)))
        return worst, tol

    rec.add("decompose-compose", "compose(decompose(x)) = x", roundtrip)

    def orbit():
        pts = _random_octonions(rng, 500, 2.0)
        worst = 0.0
        for p in pts:
            J = random_imaginary_unit(rng)
            q = orbit_sample(p, J)
            sp, sq = decompose(p), decompose(q)
            worst = max(
                worst,
                abs(float(alg.norm(q)) - float(alg.norm(p))),
                abs(sp.u - sq.u),
                abs(sp.v - sq.v),
            )
        return worst, tol

    rec.add("orbit-sample", "orbit points share u, v and modulus", orbit)

    def rep_formula():
        worst = 0.0
        for _ in range(200):
            f = random_series(rng, degree=8)
            I = random_imaginary_unit(rng)
            J = random_imaginary_unit(rng)
            u = rng.uniform(-0.5, 0.5)
            v = rng.uniform(0.0, 0.5)
            fp = f.evaluate(alg.scalar(u) + v * np.asarray(J))
            fm = f.evaluate(alg.scalar(u) - v * np.asarray(J))
            got = representation_formula(fp, fm, I, J)
            want = f.evaluate(alg.scalar(u) + v * np.asarray(I))
            worst = max(worst, float(alg.norm(got - want)))
        return worst, tol

    rec.add(
        "representation-formula",
        "two-slice reconstruction matches direct evaluation on power series",
        rep_formula,
    )

    def gram():
        worst = 0.0
        for _ in range(100):
            frame = splitting_frame(random_imaginary_unit(rng), seed=int(rng.integers(2**32)))
            worst = max(worst, float(np.max(np.abs(frame.gram() - np.eye(8)))))
        return worst, tol

    rec.add("splitting-gram", "splitting frame bases are orthonormal", gram)

    def split_roundtrip():
        worst = 0.0
        for _ in range(200):
            frame = splitting_frame(random_imaginary_unit(rng), seed=int(rng.integers(2**32)))
            v = rng.uniform(-2, 2, 8)
            parts = split_components(v, frame)
            worst = max(worst, float(alg.norm(recompose_components(parts, frame) - v)))
        return worst, tol

    rec.add("split-recompose", "splitting coordinates recompose the value", split_roundtrip)

    def canonical_frame():
        from .slices import SplittingFrame

        f = SplittingFrame(
            i1=ImaginaryUnit(alg.basis(1)),
            i2=ImaginaryUnit(alg.basis(2)),
            i4=ImaginaryUnit(alg.basis(3)),
        )
        r = float(alg.norm(f.basis[3] - alg.basis(4)) + alg.norm(f.basis[7] - alg.basis(7)))
        return r, 0.0

    rec.add(
        "canonical-frame",
        "frame (e1, e2, e3) contains e1 e2 = e4 and (e1 e2) e3 = e7",
        canonical_frame,
    )


# --------------------------------------------------------------------------
# monogenic suite


def _hermitian_pairs(rng, dom: DomainSpec, n):
    if dom.kind == "ball":
        x = rng.uniform(-0.35, 0.35, (n, 8))
        y = rng.uniform(-0.35, 0.35, (n, 8))
    else:
        x = rng.uniform(-0.5, 0.5, (n, 8))
        y = rng.uniform(-0.5, 0.5, (n, 8))
        hi = dom.d if dom.kind == "strip" else 1.5
        x[:, 0] = rng.uniform(0.05 * hi, 0.95 * hi, n)
        y[:, 0] = rng.uniform(0.05 * hi, 0.95 * hi, n)
    return x, y


def _suite_monogenic(rec: _Recorder):
    cfg = rec.cfg
    rng = np.random.default_rng(cfg.seed)
    tol = rec.det_tol(DET_TOL)
    domains = [DomainSpec.ball(), DomainSpec.halfspace(),
               DomainSpec.strip(cfg.d, cfg.terms)]

    for dom in domains:
        x, y = _hermitian_pairs(rng, dom, 1000)

        def herm_szego(dom=dom, x=x, y=y):
            k1 = mono.szego_kernel(dom, x, y)
            k2 = mono.szego_kernel(dom, y, x)
            return float(np.max(_norm(alg.conj(k1) - k2))), tol

        rec.add(
            f"hermitian-szego-{dom.kind}",
            f"conj(S(x, y)) = S(y, x) for the {dom.describe()} Hardy kernel",
            herm_szego,
        )

        def herm_bergman(dom=dom, x=x, y=y):
            k1 = mono.bergman_kernel(dom, x, y, variant=cfg.variant)
            k2 = mono.bergman_kernel(dom, y, x, variant=cfg.variant)
            return float(np.max(_norm(alg.conj(k1) - k2))), tol

        rec.add(
            f"hermitian-bergman-{dom.kind}",
            f"conj(B(x, y)) = B(y, x) for the {dom.describe()} Bergman kernel",
            herm_bergman,
        )

    def _ball_point(radius_lo, radius_hi):
        p = rng.normal(size=8)
        return p * (rng.uniform(radius_lo, radius_hi) / float(alg.norm(p)))

    def mono_cauchy():
        worst = 0.0
        for _ in range(100):
            p = _ball_point(1.1, 1.9)
            worst = max(worst, float(alg.norm(mono.cr_apply_fd(mono.cauchy_kernel, p))))
        return worst, 1e-6

    rec.add(
        "monogenic-cauchy-kernel",
        "finite-difference Cauchy-Riemann operator annihilates the Cauchy kernel",
        mono_cauchy,
    )

    ball = DomainSpec.ball()
    half = DomainSpec.halfspace()

    def mono_szego_ball():
        worst = 0.0
        for _ in range(100):
            yy = _ball_point(0.0, 0.45)
            xx = _ball_point(0.0, 0.55)
            worst = max(
                worst,
                float(alg.norm(mono.cr_apply_fd(
                    lambda t: mono.szego_kernel(ball, t, yy), xx
                ))),
            )
        return worst, 1e-6

    rec.add(
        "monogenic-szego-ball",
        "the ball Hardy kernel is left monogenic in its first argument",
        mono_szego_ball,
    )

    def mono_szego_half():
        worst = 0.0
        for _ in range(100):
            yy = rng.uniform(-0.4, 0.4, 8)
            yy[0] = rng.uniform(0.4, 1.0)
            xx = rng.uniform(-0.4, 0.4, 8)
            xx[0] = rng.uniform(0.4, 1.2)
            worst = max(
                worst,
                float(alg.norm(mono.cr_apply_fd(
                    lambda t: mono.szego_kernel(half, t, yy), xx
                ))),
            )
        return worst, 1e-6

    rec.add(
        "monogenic-szego-halfspace",
        "the half-space Hardy kernel is left monogenic in its first argument",
        mono_szego_half,
    )

    def bergman_half_fd():
        worst = 0.0
        h = 1e-5
        for _ in range(50):
            xx = rng.uniform(-0.4, 0.4, 8); xx[0] = rng.uniform(0.4, 1.2)
            yy = rng.uniform(-0.4, 0.4, 8); yy[0] = rng.uniform(0.4, 1.0)
            step = alg.basis(0, h)
            fd = -2.0 * (mono.szego_kernel(half, xx + step, yy)
                         - mono.szego_kernel(half, xx - step, yy)) / (2 * h)
            worst = max(worst, float(alg.norm(mono.bergman_kernel(half, xx, yy) - fd)))
        return worst, 1e-6

    rec.add(
        "bergman-halfspace-derivative",
        "closed-form half-space Bergman kernel matches -2 d/dx0 of the Hardy kernel",
        bergman_half_fd,
    )

    def weight_examples():
        r = 0.0
        r += float(alg.norm(mono.weight_factor(ball, alg.basis(3, 0.5)) - alg.basis(3)))
        r += float(alg.norm(mono.weight_factor(ball, np.zeros(8))))
        strip = DomainSpec.strip(1.0)
        r += float(alg.norm(mono.weight_factor(strip, alg.scalar(0.2)) + alg.scalar(1.0)))
        r += float(alg.norm(mono.weight_factor(strip, alg.scalar(0.8)) - alg.scalar(1.0)))
        r += float(alg.norm(mono.weight_factor(half, alg.scalar(2.0)) - alg.scalar(1.0)))
        return r, 0.0

    rec.add("weight-factor-values", "weight factor matches its piecewise definition", weight_examples)

    def weight_sign_invariance():
        xs = rng.uniform(-0.3, 0.3, (500, 8))
        w = mono.weight_factor(ball, xs)
        fx = rng.uniform(-1, 1, (500, 8))
        gx = rng.uniform(-1, 1, (500, 8))
        a1 = alg.mul(alg.conj(alg.mul(w, gx)), alg.mul(w, fx))
        a2 = alg.mul(alg.conj(alg.mul(-w, gx)), alg.mul(-w, fx))
        return float(np.max(np.abs(a1 - a2))), 0.0

    rec.add(
        "weight-sign-invariance",
        "the volume integrand is invariant under flipping the weight sign",
        weight_sign_invariance,
    )

    def strip_tails(kernel):
        x, y = _hermitian_pairs(rng, DomainSpec.strip(cfg.d), 50)
        orders = (10, 20, 30, 40)
        tails = []
        for n in orders:
            a = kernel(DomainSpec.strip(cfg.d, n), x, y)
            b = kernel(DomainSpec.strip(cfg.d, n + 10), x, y)
            tails.append(float(np.max(_norm(a - b))))
        worst = 0.0
        for t0, t1 in zip(tails, tails[1:]):
            worst = max(worst, t1 - t0)
        return max(worst, 0.0), 0.0

    rec.add(
        "strip-szego-tails",
        "symmetric partial sums of the strip Hardy kernel have decreasing tails",
        lambda: strip_tails(lambda dom, x, y: mono.szego_kernel(dom, x, y)),
    )
    rec.add(
        "strip-bergman-tails",
        "symmetric partial sums of the strip Bergman kernel have decreasing tails",
        lambda: strip_tails(
            lambda dom, x, y: mono.bergman_kernel(dom, x, y, variant=cfg.variant)
        ),
    )

    def strip_limit(kernel_strip, kernel_half):
        x = rng.uniform(-0.15, 0.15, (50, 8))
        y = rng.uniform(-0.15, 0.15, (50, 8))
        x[:, 0] = rng.uniform(0.1, 0.4, 50)
        y[:, 0] = rng.uniform(0.1, 0.4, 50)
        big = DomainSpec.strip(1e3, cfg.terms)
        a = kernel_strip(big, x, y)
        b = kernel_half(x, y)
        return float(np.max(_norm(a - b) / _norm(b))), 1e-6

    rec.add(
        "strip-szego-halfspace-limit",
        "the d -> infinity strip Hardy kernel matches the half-space kernel",
        lambda: strip_limit(
            lambda dom, x, y: mono.szego_kernel(dom, x, y),
            lambda x, y: mono.szego_kernel(half, x, y),
        ),
    )
    rec.add(
        "strip-bergman-halfspace-limit",
        "the d -> infinity strip Bergman kernel matches the half-space kernel",
        lambda: strip_limit(
            lambda dom, x, y: mono.bergman_kernel(dom, x, y, variant=cfg.variant),
            lambda x, y: mono.bergman_kernel(half, x, y, variant=cfg.variant),
        ),
    )

    # Monte Carlo reproduction identities.
    pole = np.zeros(8); pole[1] = 1.5; pole[2] = 0.5

    def const_fn(c):
        return lambda xs: np.broadcast_to(c, xs.shape)

    def shifted_cauchy(xs):
        return mono.cauchy_kernel(xs - pole)

    cases = [
        ("constant", const_fn(alg.basis(1)), np.zeros(8)),
        ("constant-off-center", const_fn(alg.scalar(1.0)), 0.3 * alg.basis(2)),
        ("cauchy-shifted", shifted_cauchy, 0.2 * alg.basis(5)),
    ]
    for label, f, pt in cases:
        def cauchy_mc(f=f, pt=pt):
            sampler = SphereSampler(cfg.samples, cfg.seed, rec.next_stream())
            est, se = mono.cauchy_integral_mc(f, pt, sampler)
            want = f(pt.reshape(1, 8))[0]
            resid = float(alg.norm(est - want))
            return (resid, MC_REL_TOL * float(alg.norm(want)),
                    float(alg.norm(se)), cfg.samples)

        rec.add(
            f"cauchy-reproduction-{label}",
            "the sphere Cauchy integral reproduces monogenic test functions",
            cauchy_mc,
        )

        def szego_mc(f=f, pt=pt):
            sampler = SphereSampler(cfg.samples, cfg.seed, rec.next_stream())
            est, se = ip.szego_projection_mc(f, pt, sampler)
            want = f(pt.reshape(1, 8))[0]
            resid = float(alg.norm(est - want))
            return (resid, MC_REL_TOL * float(alg.norm(want)),
                    float(alg.norm(se)), cfg.samples)

        rec.add(
            f"szego-projection-{label}",
            "the Hardy projection against the ball kernel reproduces test functions",
            szego_mc,
        )

        def mean_value(f=f, pt=pt):
            sampler = BallSampler(cfg.samples, cfg.seed, rec.next_stream())
            est, se = mono.mean_value_mc(f, pt, 0.45, sampler)
            want = f(pt.reshape(1, 8))[0]
            resid = float(alg.norm(est - want))
            return (resid, MC_REL_TOL * float(alg.norm(want)),
                    float(alg.norm(se)), cfg.samples)

        rec.add(
            f"mean-value-{label}",
            "the volume mean over interior balls reproduces monogenic functions",
            mean_value,
        )

    variant_residuals = {}
    for variant in ("scalar", "octonion"):
        for pt in (np.zeros(8), 0.5 * alg.basis(1)):
            sampler = BallSampler(cfg.samples, cfg.seed, rec.next_stream())
            est, se = ip.bergman_projection_mc(
                const_fn(alg.scalar(1.0)), pt, sampler, variant=variant
            )
            label = "y0" if not pt.any() else "y05e1"
            variant_residuals[(variant, label)] = (
                float(alg.norm(est - alg.scalar(1.0))),
                float(alg.norm(se)),
            )

    for label in ("y0", "y05e1"):
        def default_variant(label=label):
            resid, se = variant_residuals[(cfg.variant, label)]
            return resid, MC_REL_TOL, se, cfg.samples

        rec.add(
            f"bergman-projection-{label}",
            f"Bergman projection of 1 with the shipped {cfg.variant} first factor returns 1",
            default_variant,
        )

    def adjudication():
        r_s, _ = variant_residuals[("scalar", "y05e1")]
        r_o, _ = variant_residuals[("octonion", "y05e1")]
        # The ratio gates the choice of default: the scalar factor must beat
        # the octonion factor decisively at the off-center point.
        return r_s / r_o, 0.5

    r_s0, _ = variant_residuals[("scalar", "y05e1")]
    r_o0, _ = variant_residuals[("octonion", "y05e1")]
    rec.add(
        "bergman-variant-adjudication",
        "first-factor candidates at y = 0.5 e1: scalar residual "
        f"{r_s0:.3e} vs octonion residual {r_o0:.3e}; the data picks the default",
        adjudication,
    )


# --------------------------------------------------------------------------
# slice suite


def _suite_slice(rec: _Recorder):
    cfg = rec.cfg
    rng = np.random.default_rng(cfg.seed)
    tol = rec.det_tol(DET_TOL)

    def szego_series():
        y = rng.uniform(-0.25, 0.25, (200, 8))
        x = rng.uniform(-0.25, 0.25, (200, 8))
        acc = np.zeros((200, 8))
        yp = np.zeros((200, 8)); yp[:, 0] = 1.0
        xp = np.zeros((200, 8)); xp[:, 0] = 1.0
        for n in range(60):
            acc += alg.mul(yp, alg.conj(xp))
            yp = alg.mul(yp, y)
            xp = alg.mul(xp, x)
        return float(np.max(_norm(acc - sk.slice_szego_ball(y, x)))), tol

    rec.add(
        "slice-szego-series",
        "the ball slice Hardy kernel equals its geometric series",
        szego_series,
    )

    def szego_hermitian():
        y = rng.uniform(-0.4, 0.4, (1000, 8))
        x = rng.uniform(-0.4, 0.4, (1000, 8))
        k1 = sk.slice_szego_ball(y, x)
        k2 = sk.slice_szego_ball(x, y)
        return float(np.max(_norm(alg.conj(k1) - k2))), tol

    rec.add(
        "slice-szego-hermitian",
        "conj(S(y, x)) = S(x, y) for the ball slice Hardy kernel",
        szego_hermitian,
    )

    def dual_forms():
        x = rng.uniform(-0.5, 0.5, (1000, 8)); x[:, 0] = rng.uniform(0.2, 1.5, 1000)
        y = rng.uniform(-0.5, 0.5, (1000, 8)); y[:, 0] = rng.uniform(0.2, 1.5, 1000)
        k1 = sk._halfspace_form1(x, y)
        k2 = sk._halfspace_form2(x, y)
        return float(np.max(_norm(k1 - k2))), tol

    rec.add(
        "slice-halfspace-dual-forms",
        "both printed closed forms of the half-space slice kernel agree",
        dual_forms,
    )

    def onslice_oracles():
        worst = 0.0
        for _ in range(100):
            I = random_imaginary_unit(rng)
            ax = np.asarray(I)
            za = alg.scalar(rng.uniform(0.2, 1.0)) + rng.uniform(-0.5, 0.5) * ax
            zb = alg.scalar(rng.uniform(0.2, 1.0)) + rng.uniform(-0.5, 0.5) * ax
            v = za + alg.conj(zb)
            k = sk.slice_szego_halfspace(za, zb)
            worst = max(worst, float(alg.norm(2 * np.pi * k - alg.inverse(v))))
            bh = sk.slice_bergman_halfspace(za, zb)
            vi = alg.inverse(v)
            worst = max(worst, float(alg.norm(bh - alg.mul(vi, vi) / np.pi)))
            wa = alg.scalar(rng.uniform(-0.5, 0.5)) + rng.uniform(-0.5, 0.5) * ax
            wb = alg.scalar(rng.uniform(-0.5, 0.5)) + rng.uniform(-0.5, 0.5) * ax
            u = alg.scalar(1.0) - alg.mul(wa, alg.conj(wb))
            bb = sk.slice_bergman_ball(wa, wb)
            ui = alg.inverse(u)
            worst = max(worst, float(alg.norm(bb - alg.mul(ui, ui) / np.pi)))
            s = alg.scalar(rng.uniform(1.2, 2.0)) + rng.uniform(-0.5, 0.5) * ax
            cx = alg.scalar(rng.uniform(-0.5, 0.5)) + rng.uniform(-0.5, 0.5) * ax
            ck = sk.slice_cauchy_kernel(s, cx)
            worst = max(worst, float(alg.norm(ck - alg.inverse(s - cx))))
        return worst, tol

    rec.add(
        "slice-onslice-oracles",
        "on a common slice the kernels match their complex counterparts",
        onslice_oracles,
    )

    qtol = rec.det_tol(QUAD_TOL)

    def circle_norms():
        worst_seq = 0.0
        worst_axes = 0.0
        for _ in range(100):
            f = random_series(rng, degree=cfg.trunc)
            I = random_imaginary_unit(rng)
            J = random_imaginary_unit(rng)
            v1 = sk.slice_hardy_inner_circle(f, f, I)
            v2 = sk.slice_hardy_inner_circle(f, f, J)
            seq = float(np.sum(alg.norm_squared(f.coefficients)))
            worst_seq = max(worst_seq, float(alg.norm(v1 - alg.scalar(seq))))
            worst_axes = max(worst_axes, float(alg.norm(v1 - v2)))
        return max(worst_seq, worst_axes), qtol

    rec.add(
        "circle-norm-sequence",
        "the circle product norm equals the coefficient sum and is axis-independent",
        circle_norms,
    )

    def disk_norms():
        worst = 0.0
        for _ in range(100):
            f = random_series(rng, degree=cfg.trunc)
            I = random_imaginary_unit(rng)
            v = sk.slice_bergman_inner_disk(f, f, I)
            worst = max(worst, float(alg.norm(v - alg.scalar(bergman_norm_sq(f)))))
        return worst, qtol

    rec.add(
        "disk-norm-sequence",
        "the disk product norm equals sum |a_n|^2 / (n+1)",
        disk_norms,
    )

    def reproduce_coefficient():
        worst = 0.0
        for _ in range(100):
            f = random_series(rng, degree=cfg.trunc)
            x = rng.uniform(-0.5, 0.5, 8) * 0.8
            got = sk.slice_reproduce("coefficient", f, x)
            worst = max(worst, float(alg.norm(got - f.evaluate(x))))
        return worst, tol

    rec.add(
        "reproduce-coefficient",
        "coefficient pairing with the kernel series returns f(x) exactly",
        reproduce_coefficient,
    )

    def reproduce_circle():
        worst = 0.0
        for _ in range(25):
            f = random_series(rng, degree=10)
            I = random_imaginary_unit(rng)
            # |x| <= 0.55 keeps the kernel-series aliasing below the gate
            x = alg.scalar(rng.uniform(-0.4, 0.4)) + rng.uniform(0, 0.35) * np.asarray(I)
            got = sk.slice_reproduce("circle", f, x, I)
            worst = max(worst, float(alg.norm(got - f.evaluate(x))))
        return worst, qtol

    rec.add(
        "reproduce-circle",
        "circle quadrature against the Hardy kernel returns f(x)",
        reproduce_circle,
    )

    def reproduce_disk():
        worst = 0.0
        for _ in range(25):
            f = random_series(rng, degree=8)
            I = random_imaginary_unit(rng)
            x = alg.scalar(rng.uniform(-0.4, 0.4)) + rng.uniform(0, 0.35) * np.asarray(I)
            got = sk.slice_reproduce("disk", f, x, I)
            worst = max(worst, float(alg.norm(got - f.evaluate(x))))
        return worst, 1e-8

    rec.add(
        "reproduce-disk",
        "disk quadrature against the Bergman kernel returns f(x)",
        reproduce_disk,
    )

    def slice_strip_tails(kernel):
        x = rng.uniform(-0.3, 0.3, (40, 8)); x[:, 0] = rng.uniform(0.1, 0.9, 40)
        y = rng.uniform(-0.3, 0.3, (40, 8)); y[:, 0] = rng.uniform(0.1, 0.9, 40)
        tails = []
        for n in (10, 20, 30, 40):
            a = kernel(x, y, cfg.d, n)
            b = kernel(x, y, cfg.d, n + 10)
            tails.append(float(np.max(_norm(a - b))))
        worst = 0.0
        for t0, t1 in zip(tails, tails[1:]):
            worst = max(worst, t1 - t0)
        return max(worst, 0.0), 0.0

    rec.add(
        "slice-strip-szego-tails",
        "slice strip Hardy kernel partial sums have decreasing tails",
        lambda: slice_strip_tails(lambda x, y, d, n: sk.slice_szego_strip(x, y, d, n)),
    )
    rec.add(
        "slice-strip-bergman-tails",
        "slice strip Bergman kernel partial sums have decreasing tails",
        lambda: slice_strip_tails(lambda x, y, d, n: sk.slice_bergman_strip(x, y, d, n)),
    )

    def slice_strip_limits():
        x = rng.uniform(-0.15, 0.15, (40, 8)); x[:, 0] = rng.uniform(0.1, 0.4, 40)
        y = rng.uniform(-0.15, 0.15, (40, 8)); y[:, 0] = rng.uniform(0.1, 0.4, 40)
        a = sk.slice_szego_strip(x, y, 1e3, cfg.terms)
        b = sk.slice_szego_halfspace(x, y)
        worst = float(np.max(_norm(a - b) / _norm(b)))
        a = sk.slice_bergman_strip(x, y, 1e3, cfg.terms)
        b = sk.slice_bergman_halfspace(x, y)
        worst = max(worst, float(np.max(_norm(a - b) / _norm(b))))
        return worst, 1e-6

    rec.add(
        "slice-strip-halfspace-limit",
        "d -> infinity slice strip kernels match the half-space kernels",
        slice_strip_limits,
    )


# --------------------------------------------------------------------------
# inner-products suite


def _series_space():
    return ip.ProductSpace(
        name="coefficient",
        product=lambda f, g: (hardy_inner_coeff(f, g), np.zeros(8)),
        add=lambda f, g: f + g,
        right_scale=lambda f, a: f.scale_right(a),
    )


def _fn_add(f, g):
    return lambda xs: f(xs) + g(xs)


def _fn_scale(f, a):
    return lambda xs: alg.mul(f(xs), a)


# The circle and disk spaces are function spaces on a slice; the axioms
# quantify over their natural pointwise right scaling.
def _circle_space(I, rule):
    return ip.ProductSpace(
        name="circle",
        product=lambda f, g: (sk.slice_hardy_inner_circle_fn(f, g, I, rule), np.zeros(8)),
        add=_fn_add,
        right_scale=_fn_scale,
    )


def _disk_space(I, rule):
    return ip.ProductSpace(
        name="disk",
        product=lambda f, g: (sk.slice_bergman_inner_disk_fn(f, g, I, rule), np.zeros(8)),
        add=_fn_add,
        right_scale=_fn_scale,
    )


def _boundary_space(cfg, stream):
    def product(f, g):
        sampler = SphereSampler(cfg.samples, cfg.seed, stream)
        rep = ip.hardy_inner_ball_mc(f, g, sampler)
        return rep.value, rep.stderr

    return ip.ProductSpace("boundary", product, _fn_add, _fn_scale)


def _volume_space(cfg, stream):
    dom = DomainSpec.ball()

    def product(f, g):
        sampler = BallSampler(cfg.samples, cfg.seed, stream)
        rep = ip.bergman_inner_mc(dom, f, g, sampler)
        return rep.value, rep.stderr

    return ip.ProductSpace("volume", product, _fn_add, _fn_scale)


# Axioms that genuinely hold for each product.  The field-weighted products
# (circle, boundary, volume) are not octonion para-linear and fail axiom (v):
# their full octonion values differ from the unweighted classical products.
# The counterexample check below reproduces the exact failure.
_SOUND_AXIOMS = {
    "coefficient": set(ip.AXIOM_NAMES),
    "disk": set(ip.AXIOM_NAMES),
    "circle": {"additivity", "hermitian", "positivity", "r_homogeneity"},
    "boundary": {"additivity", "hermitian", "positivity", "r_homogeneity"},
    "volume": {"additivity", "hermitian", "positivity", "r_homogeneity"},
}


def _suite_inner_products(rec: _Recorder):
    cfg = rec.cfg
    rng = np.random.default_rng(cfg.seed)
    alpha = rng.uniform(-1, 1, 8)

    I = random_imaginary_unit(rng)
    f = random_series(rng, degree=cfg.trunc)
    g = random_series(rng, degree=cfg.trunc)
    h = random_series(rng, degree=cfg.trunc)

    # Pointwise right scaling adds one octonion factor to the integrand, so
    # size the rules a little past the plain series requirement.
    crule = sk.circle_rule_for(cfg.trunc + 2)
    drule = sk.disk_rule_for(cfg.trunc + 2)
    spaces = [
        (_series_space(), (f, g, h), rec.det_tol(DET_TOL)),
        (_circle_space(I, crule), (f.evaluate, g.evaluate, h.evaluate), rec.det_tol(QUAD_TOL)),
        (_disk_space(I, drule), (f.evaluate, g.evaluate, h.evaluate), rec.det_tol(QUAD_TOL)),
    ]

    c1, c2, c3 = rng.uniform(-1, 1, (3, 8))

    def cf(c):
        return lambda xs: np.broadcast_to(c, xs.shape)

    spaces.append((_boundary_space(cfg, rec.next_stream()), (cf(c1), cf(c2), cf(c3)), 0.0))
    spaces.append((_volume_space(cfg, rec.next_stream()), (cf(c1), cf(c2), cf(c3)), 0.0))

    for space, (sf, sg, sh), tol in spaces:
        report = ip.axiom_suite(space, sf, sg, sh, alpha)
        for axiom in ip.AXIOM_NAMES:
            resid = report.residuals[axiom]
            se = report.residual_stderr[axiom]
            sound = axiom in _SOUND_AXIOMS[space.name]
            statement = f"axiom {axiom} for the {space.name} product"
            if not sound:
                statement += " (known to fail: field-weighted value is not para-linear)"
            rec.add(
                f"axiom-{space.name}-{axiom}",
                statement,
                lambda resid=resid, tol=tol, se=se: (
                    resid, tol, se if se > 0 else None, cfg.samples if se > 0 else None
                ),
            )

    def counterexample():
        # For f = e6, g = e2, alpha = e3 the weighted products return
        # (f, g) = 0 while Re(f alpha, g) = -1, an exact para-linearity gap.
        fc = OctonionPowerSeries.constant(alg.basis(6))
        gc = OctonionPowerSeries.constant(alg.basis(2))
        a3 = alg.basis(3)
        v = sk.slice_hardy_inner_circle(fc, gc, ImaginaryUnit(alg.basis(1)))
        va = sk.slice_hardy_inner_circle(fc.scale_right(a3), gc, ImaginaryUnit(alg.basis(1)))
        gap = float(alg.real(va) - alg.real(alg.mul(v, a3)))
        return abs(gap + 1.0), rec.det_tol(QUAD_TOL)

    rec.add(
        "weighted-para-linearity-counterexample",
        "the circle product reproduces the exact -1 para-linearity gap at (e6, e2, e3)",
        counterexample,
    )

    def full_gap_witness():
        fc = OctonionPowerSeries.constant(alg.basis(1))
        gc = OctonionPowerSeries.constant(alg.basis(2))
        resid, gap = para_linearity_residual(fc, gc, alg.basis(3))
        return resid + float(alg.norm(gap + 2.0 * alg.basis(7))), 0.0

    rec.add(
        "full-linearity-gap-witness",
        "coefficient pairing is para-linear but not octonion-linear: gap = -2 e7",
        full_gap_witness,
    )

    def pointwise_isometry():
        n = rng.normal(size=(10_000, 8))
        n /= _norm(n)[:, None]
        u = rng.uniform(-1, 1, (10_000, 8))
        v = rng.uniform(-1, 1, (10_000, 8))
        lhs = alg.euclid_inner(alg.mul(n, u), alg.mul(n, v))
        rhs = alg.euclid_inner(u, v)
        return float(np.max(np.abs(lhs - rhs))), rec.det_tol(DET_TOL)

    rec.add(
        "real-part-isometry",
        "<n u, n v> = <u, v> pointwise for unit n",
        pointwise_isometry,
    )

    def component_reassembly():
        v = rng.uniform(-1, 1, 8)
        out = sum(ip.component_inner(v, i) * alg.basis(i) for i in range(8))
        return float(alg.norm(out - v)), 0.0

    rec.add(
        "component-reassembly",
        "summing component projections against the basis reassembles the value",
        component_reassembly,
    )

    def constant_products():
        one = lambda xs: np.broadcast_to(alg.scalar(1.0), xs.shape)
        rep = ip.hardy_inner_ball_mc(one, one, SphereSampler(cfg.samples, cfg.seed, rec.next_stream()))
        r1 = float(alg.norm(rep.value - alg.scalar(1.0)))
        rep2 = ip.bergman_inner_mc(DomainSpec.ball(), one, one,
                                   BallSampler(cfg.samples, cfg.seed, rec.next_stream()))
        r2 = float(alg.norm(rep2.value - alg.scalar(0.125)))
        se = float(alg.norm(rep.stderr) + alg.norm(rep2.stderr))
        return max(r1, r2), 1e-12, se, cfg.samples

    rec.add(
        "constant-normalization",
        "(1, 1) equals 1 on the sphere and 1/8 on the ball",
        constant_products,
    )


_SUITES = {
    "algebra": _suite_algebra,
    "slice-structure": _suite_slice_structure,
    "monogenic": _suite_monogenic,
    "slice": _suite_slice,
    "inner-products": _suite_inner_products,
}

SUITE_NAMES = tuple(_SUITES) + ("all",)


def run_suite(name: str, cfg: VerifyConfig | None = None) -> list[VerificationReport]:
    """Run one suite (or "all") and return its reports."""
    cfg = cfg or VerifyConfig()
    if name == "all":
        out = []
        for suite in _SUITES:
            out.extend(run_suite(suite, cfg))
        return out
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
    rec = _Recorder(name, cfg)
    _SUITES[name](rec)
    return rec.reports
