"""Deterministic random number generation.

Everything random in an episode flows from one 64-bit episode seed through
a SplitMix64-style generator: ``state += GOLDEN; output = mix64(state)``.
The generator is counter-based, which lets the pure-Python, vectorized
numpy, and native kernel implementations consume the exact same sequence.

Constants (the usual SplitMix64 ones):
  GOLDEN = 0x9E3779B97F4A7C15
  mix64: xor-shift 30, mul 0xBF58476D1CE4E5B9, xor-shift 27,
         mul 0x94D049BB133111EB, xor-shift 31
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB

# Salts for the per-subsystem streams derived from the episode seed.
STREAM_WORLDGEN = 0x57AB12FD0A8E6C31
STREAM_CREATURES = 0xC3A5C85C97CB3127
STREAM_SPAWNING = 0xB492B66FBE98F273
STREAM_VIEWNOISE = 0x9AE16A3B2F90404F
STREAM_PLAYER = 0x3C6EF372FE94F82A


def mix64(z: int) -> int:
    """SplitMix64 finalizer: a 64-bit avalanche permutation."""
    z &= MASK64
    z ^= z >> 30
    z = (z * _M1) & MASK64
    z ^= z >> 27
    z = (z * _M2) & MASK64
    z ^= z >> 31
    return z


def derive_episode_seed(run_seed: int, episode_index: int) -> int:
    """Derive the seed for one episode from the run seed and episode number.

    Pure, fully mixing in both arguments: equal to the SplitMix64 stream of
    ``run_seed`` evaluated at position ``episode_index``.
    """
    if episode_index < 0:
        raise ValueError("episode_index must be non-negative")
    return mix64((run_seed + GOLDEN * (episode_index + 1)) & MASK64)


def stream_seed(episode_seed: int, salt: int) -> int:
    """Seed for a named per-subsystem stream."""
    return mix64((episode_seed ^ salt) & MASK64)


class Rng:
    """Counter-based SplitMix64 stream.

    The whole state is the single ``state`` integer; ``draw(k)`` consumes
    exactly k counter positions, so vectorized and scalar consumers stay in
    lockstep.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def next_below(self, n: int) -> int:
        """Uniform-ish integer in [0, n) via the multiply-shift reduction."""
        return (self.next_u64() * n) >> 64

    def next_float(self) -> float:
        """Uniform float64 in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (2.0**-53)

    def chance(self, p: float) -> bool:
        return self.next_float() < p

    def draw(self, k: int) -> np.ndarray:
        """Consume k values at once; returns uint64 array of length k."""
        base = self.state
        self.state = (self.state + k * GOLDEN) & MASK64
        counters = (base + GOLDEN * np.arange(1, k + 1, dtype=np.uint64)) & np.uint64(
            MASK64
        )
        return mix64_array(counters)

    def shuffle(self, seq: list) -> None:
        """In-place Fisher-Yates using next_below."""
        for i in range(len(seq) - 1, 0, -1):
            j = self.next_below(i + 1)
            seq[i], seq[j] = seq[j], seq[i]


def mix64_array(z: np.ndarray) -> np.ndarray:
    """Vectorized mix64 over a uint64 array."""
    z = z.astype(np.uint64, copy=True)
    with np.errstate(over="ignore"):
        z ^= z >> np.uint64(30)
        z *= np.uint64(_M1)
        z ^= z >> np.uint64(27)
        z *= np.uint64(_M2)
        z ^= z >> np.uint64(31)
    return z
