"""
Classical code families as 2-colorings: Hamming / t-fold 1-perfect codes,
distance-2 MDS codes, and the decomposition of H(q,q) induced by a 1-perfect
code in H(q+1,q).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from . import rng
from .algebra import gf_for_order, prime_power
from .coloring import Coloring, Recipe
from .hamming import (BudgetError, Shape, all_vertices, materialization_budget,
                      neighbors_many, rank_many, unrank, unrank_many)


class CodeError(ValueError):
    pass


def parity_check(r: int, q: int) -> np.ndarray:
    """Parity-check matrix (r x n) of the q-ary Hamming code, n=(q^r-1)/(q-1).

    Columns are the normalized nonzero vectors (first nonzero entry 1) in
    lexicographic order.
    """
    if r < 2:
        raise CodeError("parity_check needs r >= 2")
    if prime_power(q) is None:
        raise CodeError(f"Hamming codes need a prime-power alphabet, got q={q}")
    cols = []
    for vec in product(range(q), repeat=r):
        nz = next((x for x in vec if x), None)
        if nz == 1:
            cols.append(vec)
    H = np.array(cols, dtype=np.int64).T
    assert H.shape[1] == (q ** r - 1) // (q - 1)
    return H


def _syndrome_codes(V: np.ndarray, H: np.ndarray, q: int) -> np.ndarray:
    """Integer-encoded syndromes of the rows of V."""
    field = gf_for_order(q)
    add_t, mul_t = field.add_table, field.mul_table
    r, n = H.shape
    N = V.shape[0]
    s = np.zeros((r, N), dtype=np.int64)
    Vi = V.astype(np.int64)
    for j in range(n):
        for k in range(r):
            h = int(H[k, j])
            if h:
                s[k] = add_t[s[k], mul_t[h, Vi[:, j]]]
    radix = q ** np.arange(r, dtype=np.int64)
    return s.T @ radix


def hamming_perfect_coloring(r: int, q: int, t: int = 1) -> Coloring:
    """t-fold 1-perfect code in H(n,q), n=(q^r-1)/(q-1), as a 2-coloring.

    Color 1 is the code: the union of the t cosets of the Hamming code whose
    representatives are the lexicographically least words in distinct cosets
    (greedy scan in rank order).  r=1 is the degenerate H(1,q) case where the
    code is any t-subset, pinned to {0,...,t-1}.

    The quotient matrix is [[t-1, n(q-1)-t+1], [t, n(q-1)-t]].
    """
    if t < 1:
        raise CodeError("t must be >= 1")
    if r == 1:
        if t > q:
            raise CodeError(f"t={t} too large for H(1,{q})")
        shape = Shape(1, q)

        def fn(V):
            return np.where(V[:, 0] < t, 1, 2).astype(np.uint8)
        n = 1
    else:
        H = parity_check(r, q)
        n = H.shape[1]
        shape = Shape(n, q)
        if t > q ** r:
            raise CodeError(f"t={t} exceeds the {q ** r} cosets")
        reps = []
        seen = set()
        rk = 0
        while len(reps) < t:
            s = int(_syndrome_codes(
                np.asarray([unrank(shape, rk)], dtype=np.int64), H, q)[0])
            if s not in seen:
                seen.add(s)
                reps.append(s)
            rk += 1
        reps_arr = np.array(sorted(reps), dtype=np.int64)

        def fn(V):
            return np.where(np.isin(_syndrome_codes(V, H, q), reps_arr), 1, 2).astype(np.uint8)

    deg = shape.degree
    S = np.array([[t - 1, deg - t + 1], [t, deg - t]])
    return Coloring(shape, 2, fn, quotient=S, kind=("perfect", t),
                    recipe=Recipe.make("perfect", q=q, r=r, t=t))


def mds2_coloring(n: int, q: int, t: int = 1) -> Coloring:
    """t-fold distance-2 MDS code {x : sum(x) mod q < t} as an (n(q-t), nt)-coloring."""
    if not 1 <= t <= q - 1:
        raise CodeError(f"t={t} out of range 1..{q - 1}")
    shape = Shape(n, q)

    def fn(V):
        return np.where(V.astype(np.int64).sum(axis=1) % q < t, 1, 2).astype(np.uint8)
    S = np.array([[n * (t - 1), n * (q - t)], [n * t, n * (q - 1 - t)]])
    return Coloring(shape, 2, fn, quotient=S, kind=("mds2", t),
                    recipe=Recipe.make("mds2", n=n, q=q, t=t))


@dataclass
class MdsPartition:
    """Partition of H(m,q) into q distance-2 MDS blocks, optionally refined
    into distance-3 MDS codes (refine_index within each block)."""

    q: int
    m: int
    block_index: np.ndarray
    refine_index: np.ndarray | None = None


@lru_cache(maxsize=None)
def hqq_decomposition(q: int) -> MdsPartition:
    """Decomposition of H(q,q) from a 1-perfect code C in H(q+1,q).

    Block i is M + (i,0,...,0) where M is the projection of C to the first q
    coordinates; the refinement index of a block vertex is the last symbol of
    the codeword it came from (a distance-3 MDS code per index).
    """
    code = hamming_perfect_coloring(2, q)
    big = code.shape  # H(q+1, q)
    V = all_vertices(big, budget=max(materialization_budget(), big.size))
    cw = V[code.eval_many(V) == 1]
    small = Shape(q, q)
    block = np.full(small.size, -1, dtype=np.int64)
    refine = np.full(small.size, -1, dtype=np.int64)
    base = rank_many(small, cw[:, :q])
    first = cw[:, 0].astype(np.int64)
    last = cw[:, q].astype(np.int64)
    for i in range(q):
        r = base - first + (first + i) % q
        block[r] = i
        refine[r] = last
    assert not np.any(block < 0)
    return MdsPartition(q, q, block, refine)


@dataclass
class CodeReport:
    ok: bool
    exhaustive: bool
    checked: int
    violation_rank: int | None = None


def verify_code(col: Coloring, budget: int | None = None, seed: int = 0,
                samples: int = 10000) -> CodeReport:
    """Check the defining local property of a code coloring (color 1).

    perfect(t): every ball of radius 1 holds exactly t codewords;
    mds2(t): every line holds exactly t; mds3: every 2-face holds exactly 1.
    Falls back to seeded sampling when the graph exceeds the budget.
    """
    if col.kind is None:
        raise CodeError("coloring has no code-family tag")
    fam, t = col.kind
    shape = col.shape
    limit = materialization_budget() if budget is None else budget

    if shape.size <= limit:
        dense = col.materialize(limit)
        ind = (dense == 1).astype(np.int64)
        cube = ind.reshape((shape.q,) * shape.n, order="F")
        if fam == "perfect":
            cnt = ind.copy()
            for ax in range(shape.n):
                for sh in range(1, shape.q):
                    cnt += np.roll(cube, sh, axis=ax).reshape(-1, order="F")
            bad = np.flatnonzero(cnt != t)
        elif fam == "mds2":
            bad = np.array([], dtype=np.int64)
            for ax in range(shape.n):
                line_sums = cube.sum(axis=ax)
                if np.any(line_sums != t):
                    bad = np.array([0])
                    break
        elif fam == "mds3":
            bad = np.array([], dtype=np.int64)
            for ax1 in range(shape.n):
                for ax2 in range(ax1 + 1, shape.n):
                    if np.any(cube.sum(axis=(ax1, ax2)) != 1):
                        bad = np.array([0])
                        break
        else:
            raise CodeError(f"unknown code family {fam}")
        if len(bad):
            return CodeReport(False, True, shape.size, int(bad[0]))
        return CodeReport(True, True, shape.size)

    # sampled: ball counts only (perfect codes are the big case in practice)
    if fam != "perfect":
        raise BudgetError("exhaustive check over budget; sampling supports perfect only")
    ranks = rng.sample_ranks(seed, samples, shape.size)
    V = unrank_many(shape, np.asarray(ranks, dtype=np.int64))
    own = (col.eval_many(V) == 1).astype(np.int64)
    nb = neighbors_many(shape, V)
    nbc = col.eval_many(nb.reshape(-1, shape.n)).reshape(len(V), -1)
    cnt = own + (nbc == 1).sum(axis=1)
    bad = np.flatnonzero(cnt != t)
    if len(bad):
        return CodeReport(False, False, samples, int(ranks[bad[0]]))
    return CodeReport(True, False, samples)
