"""Simplex-lattice gradient noise, implemented from scratch.

Locally smooth 2D noise on a skewed triangular lattice with a fixed
8-direction gradient table and a seed-shuffled permutation table, so the
output is a pure function of (seed, x, y) on every platform.

The scalar path below is the reference; the grid evaluators in
``craftbench._kernels`` follow the exact same expression structure
(multiplication/addition order matters: results are bit-identical).
"""

from __future__ import annotations

import math

import numpy as np

from . import _kernels
from .rng import GOLDEN, MASK64, Rng, mix64

SKEW = 0.5 * (math.sqrt(3.0) - 1.0)
UNSKEW = (3.0 - math.sqrt(3.0)) / 6.0

# 8 lattice gradients; diagonal pairs are unnormalized on purpose, the
# output scale constant accounts for the resulting amplitude.
GRAD_X = np.array([1.0, -1.0, 1.0, -1.0, 1.0, -1.0, 0.0, 0.0])
GRAD_Y = np.array([1.0, 1.0, -1.0, -1.0, 0.0, 0.0, 1.0, -1.0])

# Measured empirically over 10^8 samples (max |raw| ~= 0.01810);
# keeps every output strictly inside [-1, 1].
SCALE = 54.0


def permutation(seed: int) -> np.ndarray:
    """256-entry permutation table derived from the seed.

    Defined as the argsort of 256 consecutive SplitMix64 outputs: fully
    vectorized and stable under the (astronomically unlikely) tie.
    """
    keys = Rng(seed).draw(256)
    return np.argsort(keys, kind="stable").astype(np.int32)


def _corner(t: float, gx: float, gy: float, x: float, y: float) -> float:
    if t < 0.0:
        return 0.0
    t2 = t * t
    return t2 * t2 * (gx * x + gy * y)


def noise2_perm(perm: np.ndarray, x: float, y: float) -> float:
    """Raw scalar noise for a prepared permutation table."""
    s = (x + y) * SKEW
    i = math.floor(x + s)
    j = math.floor(y + s)
    t = (i + j) * UNSKEW
    x0 = x - (i - t)
    y0 = y - (j - t)
    if x0 > y0:
        i1, j1 = 1, 0
    else:
        i1, j1 = 0, 1
    x1 = x0 - i1 + UNSKEW
    y1 = y0 - j1 + UNSKEW
    x2 = x0 - 1.0 + 2.0 * UNSKEW
    y2 = y0 - 1.0 + 2.0 * UNSKEW
    ii = i & 255
    jj = j & 255
    g0 = perm[(ii + perm[jj]) & 255] & 7
    g1 = perm[(ii + i1 + perm[(jj + j1) & 255]) & 255] & 7
    g2 = perm[(ii + 1 + perm[(jj + 1) & 255]) & 255] & 7
    n0 = _corner(0.5 - x0 * x0 - y0 * y0, GRAD_X[g0], GRAD_Y[g0], x0, y0)
    n1 = _corner(0.5 - x1 * x1 - y1 * y1, GRAD_X[g1], GRAD_Y[g1], x1, y1)
    n2 = _corner(0.5 - x2 * x2 - y2 * y2, GRAD_X[g2], GRAD_Y[g2], x2, y2)
    return SCALE * ((n0 + n1) + n2)


def noise2(seed: int, x: float, y: float) -> float:
    """Deterministic smooth noise in [-1, 1] for one point.

    Convenience wrapper that rebuilds the permutation per call; bulk users
    should hold a :class:`NoiseField`.
    """
    return noise2_perm(permutation(seed), x, y)


class NoiseField:
    """Multi-octave noise sampled over the world lattice.

    Each octave has its own permutation table (seeds chained with the
    golden ratio step) at double the previous frequency and half the
    amplitude; the sum is normalized back into [-1, 1].
    """

    def __init__(self, seed: int, scale: float, octaves: int = 1):
        if octaves < 1:
            raise ValueError("octaves must be >= 1")
        self.scale = float(scale)
        self.octaves = octaves
        self.perms = [
            permutation(mix64((seed + k * GOLDEN) & MASK64)) for k in range(octaves)
        ]

    def grid(self, size: int) -> np.ndarray:
        """Evaluate the field at integer cells (0..size-1)^2 -> float64 [size, size]."""
        impl = _kernels.active()
        total = np.zeros((size, size), dtype=np.float64)
        amp = 1.0
        norm = 0.0
        freq = 1.0 / self.scale
        for k in range(self.octaves):
            layer = np.empty((size, size), dtype=np.float64)
            impl.noise_grid(self.perms[k], freq, layer)
            total += amp * layer
            norm += amp
            amp *= 0.5
            freq *= 2.0
        total /= norm
        return total

    def at(self, x: float, y: float) -> float:
        total, amp, norm, freq = 0.0, 1.0, 0.0, 1.0 / self.scale
        for k in range(self.octaves):
            total += amp * noise2_perm(self.perms[k], x * freq, y * freq)
            norm += amp
            amp *= 0.5
            freq *= 2.0
        return total / norm
