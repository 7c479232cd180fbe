"""
Coloring objects: lazily evaluated vertex colorings of H(n,q).

A Coloring carries a vectorized evaluator, the shape it lives on, the number
of colors, and optional extras: a predicted quotient matrix, a construction
recipe, a face-partition witness, and a cached dense table.  Colors are 1-based
to match the usual (b,c)-coloring conventions.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Sequence

import numpy as np

from .hamming import (BudgetError, Shape, all_vertices, check_vertex,
                      materialization_budget, rank_many, unrank_many)

_CHUNK = 1 << 20


class ColoringError(RuntimeError):
    pass


class NotPerfectError(ColoringError):
    """A coloring expected to be perfect is not; carries a witness vertex."""

    def __init__(self, msg, witness_rank=None):
        super().__init__(msg)
        self.witness_rank = witness_rank


@dataclass(frozen=True)
class Recipe:
    """Construction tree; params are sorted (key, value) pairs."""

    kind: str
    params: tuple = ()
    children: tuple = ()

    def p(self, key, default=None):
        for k, v in self.params:
            if k == key:
                return v
        return default

    @staticmethod
    def make(kind: str, children: Sequence["Recipe"] = (), **params) -> "Recipe":
        return Recipe(kind, tuple(sorted(params.items())), tuple(children))


@dataclass
class FaceWitness:
    """Partition of one color class into k-faces.

    mask_fn maps an (N, n) coordinate array to an int64 bitmask of the free
    directions of the face through each vertex (meaningful only on the class).
    """

    color: int
    dim: int
    mask_fn: Callable[[np.ndarray], np.ndarray]

    def masks(self, V: np.ndarray) -> np.ndarray:
        return np.asarray(self.mask_fn(np.asarray(V)), dtype=np.int64)


class Coloring:
    def __init__(self, shape: Shape, k: int, fn: Callable[[np.ndarray], np.ndarray],
                 *, quotient: np.ndarray | None = None, recipe: Recipe | None = None,
                 witness: FaceWitness | None = None, kind: tuple | None = None):
        self.shape = shape
        self.k = k
        self.fn = fn
        self.quotient = None if quotient is None else np.asarray(quotient, dtype=np.int64)
        self.recipe = recipe
        self.witness = witness
        self.kind = kind  # code-family tag, e.g. ("perfect", t)
        self.dense: np.ndarray | None = None

    def __repr__(self):
        return f"Coloring(H({self.shape.n},{self.shape.q}), k={self.k})"

    def eval(self, v) -> int:
        t = check_vertex(self.shape, v)
        return int(self.fn(np.asarray([t], dtype=np.uint8))[0])

    def eval_many(self, V: np.ndarray) -> np.ndarray:
        return np.asarray(self.fn(np.asarray(V)), dtype=np.uint8)

    def materialize(self, budget: int | None = None) -> np.ndarray:
        """Dense color table in rank order (cached)."""
        if self.dense is not None:
            return self.dense
        limit = materialization_budget() if budget is None else budget
        size = self.shape.size
        if size > limit:
            raise BudgetError(f"materializing {size} vertices exceeds budget {limit}")
        out = np.empty(size, dtype=np.uint8)
        for lo in range(0, size, _CHUNK):
            hi = min(size, lo + _CHUNK)
            V = unrank_many(self.shape, np.arange(lo, hi, dtype=np.int64))
            out[lo:hi] = self.eval_many(V)
        self.dense = out
        return out

    def color_counts(self, budget: int | None = None) -> np.ndarray:
        d = self.materialize(budget)
        return np.bincount(d, minlength=self.k + 1)[1:]

    def with_witness(self, witness: FaceWitness) -> "Coloring":
        c = Coloring(self.shape, self.k, self.fn, quotient=self.quotient,
                     recipe=self.recipe, witness=witness, kind=self.kind)
        c.dense = self.dense
        return c


def from_dense(shape: Shape, dense: np.ndarray, k: int | None = None,
               **extras) -> Coloring:
    dense = np.asarray(dense, dtype=np.uint8)
    if dense.shape != (shape.size,):
        raise ColoringError(f"dense table has wrong length for H({shape.n},{shape.q})")
    if k is None:
        k = int(dense.max())

    def fn(V):
        return dense[rank_many(shape, V)]
    c = Coloring(shape, k, fn, **extras)
    c.dense = dense
    return c


def complement(c: Coloring) -> Coloring:
    """Swap the two colors of a 2-coloring."""
    if c.k != 2:
        raise ColoringError("complement is defined for 2-colorings")

    def fn(V):
        return 3 - c.eval_many(V)
    S = None
    if c.quotient is not None:
        a, b = c.quotient[0]
        cc, d = c.quotient[1]
        S = np.array([[d, cc], [b, a]])
    w = None
    if c.witness is not None:
        w = FaceWitness(3 - c.witness.color, c.witness.dim, c.witness.mask_fn)
    rec = Recipe.make("complement", [c.recipe]) if c.recipe is not None else None
    out = Coloring(c.shape, 2, fn, quotient=S, recipe=rec, witness=w)
    if c.dense is not None:
        out.dense = (3 - c.dense).astype(np.uint8)
    return out


def parameters(c: Coloring) -> tuple[int, int]:
    """(b, c) of a 2-coloring with known quotient matrix."""
    if c.k != 2 or c.quotient is None:
        raise ColoringError("parameters need a 2-coloring with a quotient matrix")
    return int(c.quotient[0, 1]), int(c.quotient[1, 0])


def swap_to_canonical(c: Coloring) -> Coloring:
    """Return the coloring with b >= c, swapping colors if needed (ties keep it)."""
    b, cc = parameters(c)
    return complement(c) if b < cc else c


def densities(b: int, c: int) -> tuple:
    from fractions import Fraction
    return Fraction(c, b + c), Fraction(b, b + c)


def validate_face_partition(col: Coloring, witness: FaceWitness | None = None,
                            budget: int | None = None) -> bool:
    """Exhaustively check that a witness partitions its color class into faces."""
    w = witness or col.witness
    if w is None:
        raise ColoringError("no face-partition witness to validate")
    dense = col.materialize(budget)
    shape = col.shape
    cls = np.flatnonzero(dense == w.color)
    if len(cls) == 0:
        return True
    V = unrank_many(shape, cls)
    masks = w.masks(V)
    if np.any(np.vectorize(lambda m: bin(m).count("1"))(masks) != w.dim):
        return False
    radix = shape.q ** np.arange(shape.n, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(shape.n)) & 1).astype(np.int64)
    zeroed = cls - (bits * V.astype(np.int64) * radix).sum(axis=1)
    key = list(zip(zeroed.tolist(), masks.tolist()))
    from collections import Counter
    sizes = Counter(key)
    want = shape.q ** w.dim
    return all(v == want for v in sizes.values()) and sum(sizes.values()) == len(cls)
