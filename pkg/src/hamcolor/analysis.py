"""
Verification and spectra of colorings: quotient extraction, exhaustive and
sampled perfectness checks, weight distributions (recurrence and brute force),
and the face-balance necessary condition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from . import rng
from .coloring import Coloring, NotPerfectError
from .hamming import (BudgetError, Shape, materialization_budget,
                      neighbors_many, unrank_many)

_SAMPLE_CHUNK = 5000


def neighbor_color_counts(col: Coloring, budget: int | None = None) -> np.ndarray:
    """(size, k) matrix: entry [r, j] counts neighbors of vertex r in color j+1."""
    dense = col.materialize(budget)
    shape, k = col.shape, col.k
    cube = dense.reshape((shape.q,) * shape.n, order="F")
    counts = np.zeros((shape.size, k), dtype=np.int32)
    for ax in range(shape.n):
        for sh in range(1, shape.q):
            rolled = np.roll(cube, sh, axis=ax).reshape(-1, order="F")
            for cc in range(1, k + 1):
                counts[:, cc - 1] += rolled == cc
    return counts


def extract_quotient(col: Coloring, budget: int | None = None) -> np.ndarray:
    """Quotient matrix of a perfect coloring; NotPerfectError otherwise."""
    dense = col.materialize(budget)
    counts = neighbor_color_counts(col, budget)
    S = np.zeros((col.k, col.k), dtype=np.int64)
    for cc in range(1, col.k + 1):
        idx = np.flatnonzero(dense == cc)
        if len(idx) == 0:
            raise NotPerfectError(f"color {cc} is empty", None)
        S[cc - 1] = counts[idx[0]]
        bad = np.flatnonzero((counts[idx] != S[cc - 1]).any(axis=1))
        if len(bad):
            raise NotPerfectError(
                f"color {cc} rows disagree (first offending rank {idx[bad[0]]})",
                int(idx[bad[0]]))
    return S


@dataclass
class VerifyReport:
    ok: bool
    mode: str                      # "full" or "sampled"
    expected: np.ndarray
    checked: int
    violations: list = field(default_factory=list)  # (rank, observed_row)
    seed: int | None = None

    def summary(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        extra = "" if self.ok else f", {len(self.violations)} violation(s), first at rank {self.violations[0][0]}"
        return f"{tag} [{self.mode}] {self.checked} vertices checked{extra}"


def verify_full(col: Coloring, expected: np.ndarray | None = None,
                budget: int | None = None) -> VerifyReport:
    """Exhaustively check that col is perfect with the expected quotient."""
    S = np.asarray(expected if expected is not None else col.quotient, dtype=np.int64)
    if S.shape != (col.k, col.k):
        raise ValueError(f"expected matrix must be {col.k}x{col.k}")
    dense = col.materialize(budget)
    counts = neighbor_color_counts(col, budget)
    want = S[dense.astype(np.int64) - 1]
    bad = np.flatnonzero((counts != want).any(axis=1))
    violations = [(int(r), counts[r].tolist()) for r in bad[:16]]
    return VerifyReport(len(bad) == 0, "full", S, col.shape.size, violations)


def verify_sampled(col: Coloring, expected: np.ndarray | None = None,
                   samples: int = 100000, seed: int = 0) -> VerifyReport:
    """Check the quotient rows at `samples` seeded vertices (with replacement)."""
    S = np.asarray(expected if expected is not None else col.quotient, dtype=np.int64)
    if S.shape != (col.k, col.k):
        raise ValueError(f"expected matrix must be {col.k}x{col.k}")
    shape = col.shape
    ranks = rng.sample_ranks(seed, samples, shape.size)
    violations = []
    for lo in range(0, samples, _SAMPLE_CHUNK):
        chunk = ranks[lo:lo + _SAMPLE_CHUNK]
        V = _unrank_big(shape, chunk)
        own = col.eval_many(V).astype(np.int64)
        nb = neighbors_many(shape, V)
        nbc = col.eval_many(nb.reshape(-1, shape.n)).reshape(len(V), -1)
        counts = np.stack([(nbc == cc).sum(axis=1) for cc in range(1, col.k + 1)],
                          axis=1)
        bad = np.flatnonzero((counts != S[own - 1]).any(axis=1))
        for i in bad[:16]:
            violations.append((int(chunk[i]), counts[i].tolist()))
        if len(violations) >= 16:
            break
    return VerifyReport(len(violations) == 0, "sampled", S, samples, violations, seed)


def _unrank_big(shape: Shape, ranks) -> np.ndarray:
    """Unrank arbitrary-precision ranks (sizes beyond 64 bits)."""
    if shape.size < 1 << 62:
        return unrank_many(shape, np.asarray(ranks, dtype=np.int64))
    out = np.empty((len(ranks), shape.n), dtype=np.uint8)
    for i, r in enumerate(ranks):
        for j in range(shape.n):
            r, x = divmod(r, shape.q)
            out[i, j] = x
    return out


def verify(col: Coloring, expected: np.ndarray | None = None,
           samples: int = 100000, seed: int = 0,
           budget: int | None = None) -> VerifyReport:
    """Full check within the budget, sampled beyond it."""
    limit = materialization_budget() if budget is None else budget
    if col.shape.size <= limit:
        return verify_full(col, expected, budget=limit)
    return verify_sampled(col, expected, samples=samples, seed=seed)


# ---------------------------------------------------------------------------
# weight distributions


class InfeasibleDistribution(ValueError):
    """The weight-distribution recurrence left the nonnegative integers."""


def distance_parameters(shape: Shape, j: int) -> tuple[int, int, int]:
    """(a_j, b_j, c_j) of the distance partition around a vertex."""
    return j * (shape.q - 2), (shape.n - j) * (shape.q - 1), j


def weight_distribution_recurrence(S: np.ndarray, shape: Shape,
                                   start_color: int) -> list[list[int]]:
    """W[l][j] = number of color-(l+1) vertices at distance j from a vertex of
    color start_color, for any perfect coloring with quotient S.

    Exact integer recurrence; raises InfeasibleDistribution when a division
    fails or a count goes negative (a necessary-condition violation).
    """
    S = np.asarray(S, dtype=object)
    k = S.shape[0]
    n, q = shape.n, shape.q
    W = [[0] * (n + 1) for _ in range(k)]
    W[start_color - 1][0] = 1
    for j in range(n):
        a_j, b_jm1 = j * (q - 2), (n - (j - 1)) * (q - 1)
        for l in range(k):
            s = sum(W[m][j] * int(S[m, l]) for m in range(k))
            s -= a_j * W[l][j]
            if j >= 1:
                s -= b_jm1 * W[l][j - 1]
            num, rem = divmod(s, j + 1)
            if rem or num < 0:
                raise InfeasibleDistribution(
                    f"W[{l + 1}][{j + 1}] = {s}/{j + 1} is not a nonnegative integer")
            W[l][j + 1] = num
    return W


def weight_distribution_bruteforce(col: Coloring, origin=None,
                                   budget: int | None = None) -> list[list[int]]:
    """Count colors by distance from `origin` (default all-zero) by enumeration."""
    shape = col.shape
    limit = materialization_budget() if budget is None else budget
    if shape.size > limit:
        raise BudgetError("brute-force weight distribution over budget")
    if origin is None:
        origin = (0,) * shape.n
    org = np.asarray(origin, dtype=np.uint8)
    W = [[0] * (shape.n + 1) for _ in range(col.k)]
    CH = 1 << 20
    for lo in range(0, shape.size, CH):
        hi = min(shape.size, lo + CH)
        V = unrank_many(shape, np.arange(lo, hi, dtype=np.int64))
        dist = (V != org).sum(axis=1)
        cols = col.eval_many(V).astype(np.int64)
        flat = np.bincount(cols * (shape.n + 1) + dist,
                           minlength=(col.k + 1) * (shape.n + 1))
        for l in range(col.k):
            for j in range(shape.n + 1):
                W[l][j] += int(flat[(l + 1) * (shape.n + 1) + j])
    return W


def distribution_feasible(q: int, b: int, c: int, n: int) -> bool:
    """Can a (b,c)-coloring of H(n,q) have a consistent weight distribution
    from both colors?  A cheap necessary condition used by the bounds."""
    deg = n * (q - 1)
    S = np.array([[deg - b, b], [c, deg - c]])
    sh = Shape(n, q)
    try:
        for start in (1, 2):
            weight_distribution_recurrence(S, sh, start)
    except InfeasibleDistribution:
        return False
    return True


# ---------------------------------------------------------------------------
# face balance


def face_balance_check(col: Coloring, k: int | None = None,
                       budget: int | None = None) -> bool:
    """Every k-face must hold its exact share of color 1 (k >= n - (b+c)/q + 1).

    Returns True when all faces of the checked dimension are balanced.
    """
    from .coloring import parameters
    b, c = parameters(col)
    shape = col.shape
    q, n = shape.q, shape.n
    k_min = n - (b + c) // q + 1
    if k is None:
        k = max(k_min, 1)
    if k < k_min:
        raise ValueError(f"face dimension {k} below threshold {k_min}")
    share_num = c * q ** k
    if share_num % (b + c):
        return False
    share = share_num // (b + c)
    dense = col.materialize(budget)
    cube = (dense == 1).astype(np.int64).reshape((q,) * n, order="F")
    for free in combinations(range(n), k):
        sums = cube.sum(axis=tuple(free))
        if np.any(sums != share):
            return False
    return True
