"""
Deterministic randomness for sampling: counter-based splitmix64.

Every sampled operation in the package takes a 64-bit seed and derives its
stream from it, so runs with the same seed are bit-for-bit reproducible.
Reference vectors (seed 0): e220a8397b1dcdaf, 6e789e6aa1b965f4, 06c45d188009454f.
"""

from __future__ import annotations

import numpy as np

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)


def splitmix64(seed: int, count: int, offset: int = 0) -> np.ndarray:
    """Outputs offset+1 .. offset+count of the splitmix64 stream for `seed`."""
    idx = np.arange(offset + 1, offset + count + 1, dtype=np.uint64)
    z = np.uint64(seed & 0xFFFFFFFFFFFFFFFF) + idx * _GOLDEN
    z = (z ^ (z >> np.uint64(30))) * _M1
    z = (z ^ (z >> np.uint64(27))) * _M2
    return z ^ (z >> np.uint64(31))


def sample_ranks(seed: int, count: int, size: int) -> list[int]:
    """`count` ranks in [0, size), with replacement, from 128-bit draws.

    Two stream words per sample, so the modulo bias is negligible for any
    size below 2^100 or so.
    """
    words = splitmix64(seed, 2 * count)
    out = []
    for i in range(count):
        hi = int(words[2 * i])
        lo = int(words[2 * i + 1])
        out.append(((hi << 64) | lo) % size)
    return out


def sample_ints(seed: int, count: int, bound: int, offset: int = 0) -> np.ndarray:
    """Small helper for bounded integer streams (bound <= 2^32)."""
    return (splitmix64(seed, count, offset) % np.uint64(bound)).astype(np.int64)
