"""Integration rules backing the inner products and kernel checks.

Deterministic spectral rules on the circle and the unit disk, and seeded
Monte Carlo on the 7-sphere and the 8-ball.  Octonion-valued integrands are
integrated componentwise; integrands receive whole sample batches and must be
pure.

Monte Carlo determinism: samples are generated in fixed-size chunks, chunk
``i`` drawing from ``Philox(key=(seed, stream)).jumped(i)``, and the
reduction runs in chunk order.  Estimates are therefore bitwise reproducible
for a given (seed, stream, sample count), independent of any parallel
scheduling of the chunks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "SPHERE7_AREA", "BALL8_VOLUME", "CircleRule", "DiskRule",
    "SphereSampler", "BallSampler", "integrate_circle", "integrate_disk",
    "mc_sphere7", "mc_ball8",
]

SPHERE7_AREA = np.pi ** 4 / 3.0   # surface measure of the unit 7-sphere
BALL8_VOLUME = np.pi ** 4 / 24.0  # volume of the unit 8-ball

_CHUNK = 1 << 17


@dataclass(frozen=True)
class CircleRule:
    """Uniform trapezoid rule on [0, 2pi): exact for trig degree < nodes."""

    nodes: int

    def __post_init__(self):
        if self.nodes < 1:
            raise ValueError("circle rule needs at least one node")

    @property
    def theta(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.nodes) / self.nodes

    @property
    def weights(self) -> np.ndarray:
        return np.full(self.nodes, 2.0 * np.pi / self.nodes)


def integrate_circle(rule: CircleRule, integrand) -> np.ndarray:
    """Sum_k w_k integrand(theta_k); integrand maps (M,) -> (M, 8)."""
    vals = np.asarray(integrand(rule.theta), dtype=np.float64)
    return np.tensordot(rule.weights, vals, axes=(0, 0))


@dataclass(frozen=True)
class DiskRule:
    """Gauss-Legendre (radial) x trapezoid (angular) rule on the unit disk.

    Weights carry the polar Jacobian r, so the plain rule has total mass pi;
    radial moments r^(2n+1) are exact while 2n+1 < 2 * radial_order.
    """

    radial_order: int
    angular_nodes: int

    def __post_init__(self):
        if self.radial_order < 1 or self.angular_nodes < 1:
            raise ValueError("disk rule orders must be positive")

    def points_weights(self):
        """Flattened nodes (r, theta) and weights including the r Jacobian."""
        gl_x, gl_w = np.polynomial.legendre.leggauss(self.radial_order)
        r = 0.5 * (gl_x + 1.0)
        wr = 0.5 * gl_w * r
        th = 2.0 * np.pi * np.arange(self.angular_nodes) / self.angular_nodes
        wt = 2.0 * np.pi / self.angular_nodes
        rr, tt = np.meshgrid(r, th, indexing="ij")
        ww = np.repeat(wr * wt, self.angular_nodes)
        return rr.ravel(), tt.ravel(), ww


def integrate_disk(rule: DiskRule, integrand, normalized: bool = False) -> np.ndarray:
    """Tensor-rule integral over the closed unit disk.

    integrand maps equal-length arrays (r, theta) -> (K, 8).  With
    ``normalized=True`` the result is divided by the disk area pi, realizing
    the normalized planar measure.
    """
    r, th, w = rule.points_weights()
    vals = np.asarray(integrand(r, th), dtype=np.float64)
    out = np.tensordot(w, vals, axes=(0, 0))
    if normalized:
        out = out / np.pi
    return out


class _ChunkedSampler:
    def __init__(self, samples: int, seed: int, stream: int = 0):
        if samples < 1:
            raise ValueError("need at least one sample")
        self.samples = int(samples)
        self.seed = int(seed)
        self.stream = int(stream)

    def _chunk_sizes(self):
        full, rest = divmod(self.samples, _CHUNK)
        sizes = [_CHUNK] * full
        if rest:
            sizes.append(rest)
        return sizes

    def _generator(self, chunk_index: int) -> np.random.Generator:
        key = np.array([self.seed, self.stream], dtype=np.uint64)
        return np.random.Generator(np.random.Philox(key=key).jumped(chunk_index))


class SphereSampler(_ChunkedSampler):
    """Uniform samples on the unit 7-sphere via normalized Gaussian vectors."""

    def chunks(self):
        for i, n in enumerate(self._chunk_sizes()):
            g = self._generator(i)
            pts = g.normal(size=(n, 8))
            pts /= np.linalg.norm(pts, axis=1, keepdims=True)
            yield pts


class BallSampler(_ChunkedSampler):
    """Uniform samples in the unit 8-ball: Gaussian direction, radius u^(1/8)."""

    def chunks(self):
        for i, n in enumerate(self._chunk_sizes()):
            g = self._generator(i)
            pts = g.normal(size=(n, 8))
            pts /= np.linalg.norm(pts, axis=1, keepdims=True)
            pts *= g.random(n)[:, None] ** 0.125
            yield pts


def _mc_accumulate(sampler, integrand, transform):
    total = np.zeros(8)
    total_sq = np.zeros(8)
    count = 0
    for pts in sampler.chunks():
        vals = np.asarray(integrand(transform(pts)), dtype=np.float64)
        total += vals.sum(axis=0)
        total_sq += (vals * vals).sum(axis=0)
        count += len(pts)
    mean = total / count
    var = np.maximum(total_sq / count - mean * mean, 0.0)
    return mean, np.sqrt(var / count)


def mc_sphere7(sampler: SphereSampler, integrand):
    """Monte Carlo integral over the unit 7-sphere.

    Returns (estimate, stderr), both shaped (8,): the sphere area times the
    sample mean, with componentwise standard errors scaled the same way.
    """
    mean, se = _mc_accumulate(sampler, integrand, lambda p: p)
    return SPHERE7_AREA * mean, SPHERE7_AREA * se


def mc_ball8(sampler: BallSampler, center, radius: float, integrand):
    """Monte Carlo integral over the ball of given center and radius."""
    if radius <= 0:
        raise ValueError("radius must be positive")
    center = np.asarray(center, dtype=np.float64)
    scale = radius ** 8 * BALL8_VOLUME
    mean, se = _mc_accumulate(
        sampler, integrand, lambda p: center + radius * p
    )
    return scale * mean, scale * se
