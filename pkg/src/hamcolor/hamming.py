"""
Core combinatorics of the Hamming graph H(n,q).

Vertices are words of length n over the alphabet {0,...,q-1}; two words are
adjacent when they differ in exactly one coordinate.  Ranks are mixed-radix
integers with coordinate 0 least significant, so rank((2,1), q=3) = 2 + 1*3 = 5.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Sequence, Tuple

import numpy as np

_DEFAULT_BUDGET = 1 << 24


def materialization_budget() -> int:
    """Vertex budget for dense enumeration; HPC_BUDGET overrides the default."""
    return int(os.environ.get("HPC_BUDGET", str(_DEFAULT_BUDGET)))


class MalformedVertexError(ValueError):
    """Raised when a word does not fit the ambient graph shape."""


class BudgetError(RuntimeError):
    """Raised when a dense computation would exceed the materialization budget."""


@dataclass(frozen=True)
class Shape:
    """Parameters (n, q) of the Hamming graph H(n,q)."""

    n: int
    q: int

    def __post_init__(self):
        if self.n < 1 or self.q < 2:
            raise ValueError(f"invalid Hamming graph shape H({self.n},{self.q})")

    @property
    def size(self) -> int:
        return self.q ** self.n

    @property
    def degree(self) -> int:
        return self.n * (self.q - 1)

    def eigenvalue(self, i: int) -> int:
        """i-th distinct adjacency eigenvalue n(q-1) - q*i, i = 0..n."""
        if not 0 <= i <= self.n:
            raise ValueError(f"eigenvalue index {i} out of range 0..{self.n}")
        return self.n * (self.q - 1) - self.q * i

    def multiplicity(self, i: int) -> int:
        return math.comb(self.n, i) * (self.q - 1) ** i


def check_vertex(shape: Shape, v: Sequence[int]) -> Tuple[int, ...]:
    t = tuple(int(x) for x in v)
    if len(t) != shape.n:
        raise MalformedVertexError(f"expected {shape.n} coordinates, got {len(t)}")
    if any(x < 0 or x >= shape.q for x in t):
        raise MalformedVertexError(f"coordinates of {t} not in 0..{shape.q - 1}")
    return t


def rank(shape: Shape, v: Sequence[int]) -> int:
    t = check_vertex(shape, v)
    r = 0
    for x in reversed(t):
        r = r * shape.q + x
    return r


def unrank(shape: Shape, r: int) -> Tuple[int, ...]:
    if not 0 <= r < shape.size:
        raise MalformedVertexError(f"rank {r} out of range for H({shape.n},{shape.q})")
    out = []
    for _ in range(shape.n):
        r, x = divmod(r, shape.q)
        out.append(x)
    return tuple(out)


def rank_many(shape: Shape, V: np.ndarray) -> np.ndarray:
    """Vectorized rank of an (N, n) coordinate array.  Needs size < 2^62."""
    if shape.size >= 1 << 62:
        raise BudgetError("graph too large for 64-bit ranks")
    radix = shape.q ** np.arange(shape.n, dtype=np.int64)
    return V.astype(np.int64) @ radix


def unrank_many(shape: Shape, ranks: np.ndarray) -> np.ndarray:
    if shape.size >= 1 << 62:
        raise BudgetError("graph too large for 64-bit ranks")
    r = np.asarray(ranks, dtype=np.int64)
    radix = shape.q ** np.arange(shape.n, dtype=np.int64)
    return ((r[:, None] // radix) % shape.q).astype(np.uint8)


def all_vertices(shape: Shape, budget: int | None = None) -> np.ndarray:
    """Dense (size, n) coordinate table in rank order."""
    limit = materialization_budget() if budget is None else budget
    if shape.size > limit:
        raise BudgetError(f"H({shape.n},{shape.q}) has {shape.size} vertices, budget {limit}")
    return unrank_many(shape, np.arange(shape.size, dtype=np.int64))


def distance(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise MalformedVertexError("length mismatch")
    return sum(1 for a, b in zip(u, v) if a != b)


def weight(v: Sequence[int]) -> int:
    return sum(1 for a in v if a != 0)


def neighbors(shape: Shape, v: Sequence[int]) -> list[Tuple[int, ...]]:
    """All n(q-1) neighbors, coordinate-major, symbols ascending."""
    t = check_vertex(shape, v)
    out = []
    for i in range(shape.n):
        for s in range(shape.q):
            if s != t[i]:
                out.append(t[:i] + (s,) + t[i + 1:])
    return out


def neighbors_many(shape: Shape, V: np.ndarray) -> np.ndarray:
    """(N, degree, n) array of the neighbors of each row of V (internal order)."""
    N = V.shape[0]
    q = shape.q
    out = np.repeat(V[:, None, :], shape.degree, axis=1)
    j = 0
    for i in range(shape.n):
        for d in range(1, q):
            out[:, j, i] = (V[:, i].astype(np.int64) + d) % q
            j += 1
    return out


def sphere_size(shape: Shape, j: int) -> int:
    """Number of words at Hamming distance exactly j from a fixed word."""
    if not 0 <= j <= shape.n:
        return 0
    return math.comb(shape.n, j) * (shape.q - 1) ** j


@dataclass(frozen=True)
class Face:
    """A k-face of H(n,q): coordinates in `free` vary, the rest are pinned to `base`."""

    base: Tuple[int, ...]
    free: frozenset

    @property
    def dim(self) -> int:
        return len(self.free)


def make_face(shape: Shape, base: Sequence[int], free) -> Face:
    t = check_vertex(shape, base)
    fr = frozenset(int(i) for i in free)
    if any(i < 0 or i >= shape.n for i in fr):
        raise MalformedVertexError(f"free directions {sorted(fr)} out of range")
    # normalize: pinned representative has zeros in the free coordinates
    t = tuple(0 if i in fr else x for i, x in enumerate(t))
    return Face(t, fr)


def enumerate_face(shape: Shape, face: Face) -> Iterator[Tuple[int, ...]]:
    free = sorted(face.free)
    for assign in product(range(shape.q), repeat=len(free)):
        v = list(face.base)
        for i, s in zip(free, assign):
            v[i] = s
        yield tuple(v)


def enumerate_faces(shape: Shape, k: int) -> Iterator[Face]:
    """All k-faces, direction sets in lexicographic order."""
    if not 0 <= k <= shape.n:
        raise ValueError(f"face dimension {k} out of range")
    pinned = [i for i in range(shape.n)]
    for free in combinations(range(shape.n), k):
        fr = frozenset(free)
        rest = [i for i in pinned if i not in fr]
        for assign in product(range(shape.q), repeat=len(rest)):
            v = [0] * shape.n
            for i, s in zip(rest, assign):
                v[i] = s
            yield Face(tuple(v), fr)
