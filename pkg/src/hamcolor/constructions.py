"""
Constructions producing new perfect 2-colorings from old ones.

Covers the covering-style moves (dimension extension, length and alphabet
multiplication), invasion over an MDS-block family, both splitting-over-blocks
variants (splitting I standard / improved, splitting II), iterated improvement,
and the search routines that certify face partitions of a color class.
"""

from __future__ import annotations

import time

import numpy as np

from .algebra import Quasigroup, iterated_sum_quasigroup
from .codes import MdsPartition, hamming_perfect_coloring, hqq_decomposition
from .coloring import Coloring, FaceWitness, Recipe
from .hamming import Shape, rank_many, unrank_many


class ParameterError(ValueError):
    pass


class NoPartitionError(RuntimeError):
    """The requested face partition provably does not exist."""


class SearchIndeterminate(RuntimeError):
    """Partition search hit its deadline without an answer either way."""


def _need_quotient(f: Coloring) -> np.ndarray:
    if f.quotient is None:
        raise ParameterError("construction needs the quotient matrix of its input")
    return f.quotient


def _wrap_recipe(kind, f, **params):
    if f.recipe is None:
        return None
    return Recipe.make(kind, [f.recipe], **params)


# ---------------------------------------------------------------------------
# coverings


def extend_dimension(f: Coloring, t: int) -> Coloring:
    """Append t ignored coordinates; quotient gains t(q-1) on the diagonal."""
    if t < 1:
        raise ParameterError("extension count t must be >= 1")
    q, n = f.shape.q, f.shape.n
    shape = Shape(n + t, q)

    def fn(V):
        return f.eval_many(V[:, :n])
    S = None
    if f.quotient is not None:
        S = f.quotient + t * (q - 1) * np.eye(f.k, dtype=np.int64)
    w = None
    if f.witness is not None:
        base_w = f.witness

        def mask_fn(V):
            return base_w.masks(V[:, :n])
        w = FaceWitness(base_w.color, base_w.dim, mask_fn)
    return Coloring(shape, f.k, fn, quotient=S, witness=w,
                    recipe=_wrap_recipe("extend", f, t=t))


def multiply_length(f: Coloring, t: int) -> Coloring:
    """Pull back along block sums: coordinates in groups of t, summed mod q."""
    if t < 1:
        raise ParameterError("length factor t must be >= 1")
    q, n = f.shape.q, f.shape.n
    shape = Shape(n * t, q)

    def fn(V):
        B = V.astype(np.int64).reshape(len(V), n, t).sum(axis=2) % q
        return f.eval_many(B)
    S = None if f.quotient is None else t * f.quotient
    return Coloring(shape, f.k, fn, quotient=S,
                    recipe=_wrap_recipe("mult_length", f, t=t))


def multiply_alphabet(f: Coloring, p: int) -> Coloring:
    """Pull back along entrywise reduction mod q from alphabet p*q."""
    if p < 1:
        raise ParameterError("alphabet factor p must be >= 1")
    q, n = f.shape.q, f.shape.n
    shape = Shape(n, p * q)

    def fn(V):
        return f.eval_many(V.astype(np.int64) % q)
    S = None
    if f.quotient is not None:
        S = p * f.quotient + n * (p - 1) * np.eye(f.k, dtype=np.int64)
    return Coloring(shape, f.k, fn, quotient=S,
                    recipe=_wrap_recipe("mult_alphabet", f, p=p))


# ---------------------------------------------------------------------------
# invasion


def mds_cyclic_coloring(m: int, q: int, i: int, t: int) -> Coloring:
    """2-coloring of H(m,q) whose color 1 is the union of the t cyclically
    consecutive zero-sum MDS blocks starting at block i (1-based)."""
    if not 1 <= i <= q or not 1 <= t <= q:
        raise ParameterError("need 1 <= i <= q and 1 <= t <= q")
    shape = Shape(m, q)

    def fn(V):
        s = V.astype(np.int64).sum(axis=1) % q
        return np.where((s - (i - 1)) % q < t, 1, 2).astype(np.uint8)
    S = np.array([[m * (t - 1), m * (q - t)], [m * t, m * (q - 1 - t)]])
    return Coloring(shape, 2, fn, quotient=S,
                    recipe=Recipe.make("mds_cyclic", m=m, q=q, i=i, t=t))


def solid_coloring(m: int, q: int, color: int, k: int = 2) -> Coloring:
    shape = Shape(m, q)

    def fn(V):
        return np.full(len(V), color, dtype=np.uint8)
    return Coloring(shape, k, fn, recipe=Recipe.make("solid", m=m, q=q, color=color, k=k))


def invasion(f: Coloring, gs) -> Coloring:
    """h(x,y) = g_{f(x)}(y) on H(n+m, q); perfectness depends on the inputs."""
    gs = list(gs)
    if len(gs) != f.k:
        raise ParameterError(f"need one invading coloring per color, got {len(gs)} for k={f.k}")
    q, n = f.shape.q, f.shape.n
    m = gs[0].shape.n
    if any(g.shape != gs[0].shape for g in gs):
        raise ParameterError("invading colorings must share a shape")
    if gs[0].shape.q != q:
        raise ParameterError("invading colorings must share the alphabet")
    kk = max(g.k for g in gs)
    shape = Shape(n + m, q)

    def fn(V):
        x, y = V[:, :n], V[:, n:]
        fx = f.eval_many(x)
        out = np.empty(len(V), dtype=np.uint8)
        for col in range(1, f.k + 1):
            mask = fx == col
            if mask.any():
                out[mask] = gs[col - 1].eval_many(y[mask])
        return out
    children = [f.recipe] + [g.recipe for g in gs]
    rec = None if any(c is None for c in children) else Recipe.make("invasion", children)
    return Coloring(shape, kk, fn, recipe=rec)


# ---------------------------------------------------------------------------
# splitting I


def _block_tables(q: int, partition: MdsPartition | None):
    part = partition or hqq_decomposition(q)
    if part.q != q or part.refine_index is None:
        raise ParameterError("need a refined MDS partition of H(q,q)")
    return part.block_index, part.refine_index


def _block_split(V: np.ndarray, n: int, q: int, mtab, ltab):
    """Per-block quasigroup value X and refinement index J of an (N, qn) array."""
    radix = q ** np.arange(q, dtype=np.int64)
    B = V.astype(np.int64).reshape(len(V), n, q) @ radix
    return mtab[B], ltab[B]


def splitI_base(f: Coloring, partition: MdsPartition | None = None,
                R: Quasigroup | None = None) -> Coloring:
    """2q-coloring of H(qn,q) refining f through H(q,q) blocks.

    Block i of a vertex y contributes its MDS-block value X_i and refinement
    index J_i; the color is q*(f(X)-1) + R(J) + 1 with R an n-ary quasigroup
    (iterated sum by default).
    """
    S = _need_quotient(f)
    if f.k != 2:
        raise ParameterError("splitting applies to 2-colorings")
    q, n = f.shape.q, f.shape.n
    mtab, ltab = _block_tables(q, partition)
    R = R or iterated_sum_quasigroup(n, q)
    shape = Shape(q * n, q)

    def fn(V):
        X, J = _block_split(V, n, q, mtab, ltab)
        fX = f.eval_many(X.astype(np.uint8)).astype(np.int64)
        return (q * (fX - 1) + R(J) + 1).astype(np.uint8)

    # block-constant quotient: every color of block j is seen S[i,j] times
    T = np.repeat(np.repeat(S, q, axis=0), q, axis=1)
    return Coloring(shape, 2 * q, fn, quotient=T,
                    recipe=_wrap_recipe("splitI_base", f))


def splitI_faces(f: Coloring, variant: str, partition: MdsPartition | None = None) -> Coloring:
    """(q+1)-coloring of H(qn,q) using a face partition of color 1 of f.

    variant "prime": arguments of the n-ary sum are X_i on the face's free
    directions and J_i elsewhere; variant "doubleprime": the (n-k)-ary sum of
    the J_i over the non-free directions only.  Color q+1 marks f(X) = 2.
    """
    S = _need_quotient(f)
    if f.witness is None or f.witness.color != 1:
        raise ParameterError("splitI_faces needs a face partition of color 1")
    if variant not in ("prime", "doubleprime"):
        raise ParameterError(f"unknown variant {variant!r}")
    q, n = f.shape.q, f.shape.n
    k = f.witness.dim
    mtab, ltab = _block_tables(q, partition)
    shape = Shape(q * n, q)
    wit = f.witness

    def fn(V):
        X, J = _block_split(V, n, q, mtab, ltab)
        Xu = X.astype(np.uint8)
        fX = f.eval_many(Xu).astype(np.int64)
        out = np.full(len(V), q + 1, dtype=np.uint8)
        sel = fX == 1
        if sel.any():
            masks = wit.masks(Xu[sel])
            bits = ((masks[:, None] >> np.arange(n)) & 1).astype(np.int64)
            if variant == "prime":
                vals = np.where(bits == 1, X[sel], J[sel]).sum(axis=1) % q
            else:
                vals = (J[sel] * (1 - bits)).sum(axis=1) % q
            out[sel] = (vals + 1).astype(np.uint8)
        return out

    a, b = int(S[0, 0]), int(S[0, 1])
    c, d = int(S[1, 0]), int(S[1, 1])
    T = np.zeros((q + 1, q + 1), dtype=np.int64)
    if variant == "prime":
        T[:q, :q] = a + k
        np.fill_diagonal(T[:q, :q], a - k * (q - 1))
    else:
        T[:q, :q] = a - k * (q - 1)
        np.fill_diagonal(T[:q, :q], a + k * (q - 1) ** 2)
    T[:q, q] = q * b
    T[q, :q] = c
    T[q, q] = q * d
    return Coloring(shape, q + 1, fn, quotient=T,
                    recipe=_wrap_recipe("splitI_faces", f, variant=variant))


def _invade_two(g: Coloring, q: int, m: int, select_t, n_cols: int) -> Coloring:
    """Invade the first n_cols colors of g by cyclic MDS unions on H(m,q);
    remaining colors become solid color 2.  select_t(col0) gives the union width."""
    qn = g.shape.n
    shape = Shape(qn + m, q)

    def fn(V):
        y, w = V[:, :qn], V[:, qn:]
        col = g.eval_many(y).astype(np.int64)
        i0 = (col - 1) % q
        tsel = select_t(col)
        if m:
            sw = w.astype(np.int64).sum(axis=1) % q
            code = ((sw - i0) % q) < tsel
        else:
            code = i0 < tsel
        inside = col <= n_cols
        return np.where(inside & code, 1, 2).astype(np.uint8)
    return Coloring(shape, 2, fn)


def flaass_standard(f: Coloring, t1: int, t2: int,
                    partition: MdsPartition | None = None) -> Coloring:
    """Splitting I, standard form.

    From a (b,c)-coloring of H(n,q) with main eigenvalue <= 0, produces a
    (q(b+c) - ct1 - bt2, ct1 + bt2)-coloring of H(qn + m, q) with the same
    eigenvalue, where m = b + c - n(q-1).
    """
    S = _need_quotient(f)
    q, n = f.shape.q, f.shape.n
    b, c = int(S[0, 1]), int(S[1, 0])
    lam = int(S[0, 0]) - c
    if lam > 0:
        raise ParameterError("standard splitting needs main eigenvalue <= 0")
    if not (0 <= t1 <= q and 0 <= t2 <= q) or (t1 + t2) in (0, 2 * q):
        raise ParameterError(f"invalid invasion widths t1={t1}, t2={t2}")
    g = splitI_base(f, partition)
    m = -lam

    def select_t(col):
        return np.where(col <= q, t1, t2)
    out = _invade_two(g, q, m, select_t, n_cols=2 * q)
    ct = c * t1 + b * t2
    bt = q * (b + c) - ct
    deg = out.shape.degree
    out.quotient = np.array([[deg - bt, bt], [ct, deg - ct]])
    out.recipe = _wrap_recipe("flaass_std", f, t1=t1, t2=t2)
    return out


def flaass_improved(f: Coloring, variant: int, t: int,
                    partition: MdsPartition | None = None) -> Coloring:
    """Splitting I, improved form, over a base whose color 1 is partitioned
    into k-faces (the witness).

    Both variants give a (q(b+c) - tc, tc)-coloring; variant 1 (needs
    lambda + k <= 0) lands on H(qn - lambda - k, q), variant 2 (needs
    lambda <= k(q-1)) on H(qn - lambda + k(q-1), q) and its color 1 is again
    partitioned into kq-faces, which is what makes iteration possible.
    """
    S = _need_quotient(f)
    q, n = f.shape.q, f.shape.n
    b, c = int(S[0, 1]), int(S[1, 0])
    lam = int(S[0, 0]) - c
    if f.witness is None or f.witness.color != 1:
        raise ParameterError("improved splitting needs a face partition of color 1")
    k = f.witness.dim
    if not 1 <= t <= q:
        raise ParameterError(f"invasion width t={t} out of range 1..{q}")
    if variant == 1:
        if lam + k > 0:
            raise ParameterError("variant 1 needs lambda + k <= 0")
        g = splitI_faces(f, "prime", partition)
        m = -lam - k
    elif variant == 2:
        if lam > k * (q - 1):
            raise ParameterError("variant 2 needs lambda <= k(q-1)")
        g = splitI_faces(f, "doubleprime", partition)
        m = k * (q - 1) - lam
    else:
        raise ParameterError("variant must be 1 or 2")

    def select_t(col):
        return np.full_like(col, t)
    out = _invade_two(g, q, m, select_t, n_cols=q)
    ct = t * c
    bt = q * (b + c) - ct
    deg = out.shape.degree
    out.quotient = np.array([[deg - bt, bt], [ct, deg - ct]])
    out.recipe = _wrap_recipe("flaass_impr", f, variant=variant, t=t)

    if variant == 2:
        qn = q * n
        base_w = f.witness
        mtab, ltab = _block_tables(q, partition)
        if q * n <= 62:
            weights = np.array([((1 << q) - 1) << (q * i) for i in range(n)],
                               dtype=np.int64)

            def mask_fn(V):
                X, _ = _block_split(V[:, :qn], n, q, mtab, ltab)
                masks = base_w.masks(X.astype(np.uint8))
                bits = ((masks[:, None] >> np.arange(n)) & 1).astype(np.int64)
                return (bits * weights).sum(axis=1)
            out.witness = FaceWitness(1, k * q, mask_fn)
    return out


def flaass_iterated(f: Coloring, ts) -> Coloring:
    """Iterate improved splitting, variant 2, with widths ts = (t_1, ..., t_r)."""
    out = f
    for t in ts:
        out = flaass_improved(out, 2, t)
    return out


# ---------------------------------------------------------------------------
# splitting II


def split_II(base: Coloring, p: int, t: int) -> Coloring:
    """From a 1-perfect-code coloring of H(q+1,q) whose non-code class is
    partitioned into lines, an ((q^2-1)(p-t), (q^2-1)t + p)-coloring of
    H(q+1, pq), 0 <= t <= p-1.

    Color 2's class is partitioned into lines of H(q+1,pq) (the witness),
    along the special direction of the underlying base vertex.
    """
    if p < 1 or not 0 <= t <= p - 1:
        raise ParameterError(f"need p >= 1 and 0 <= t <= p-1, got p={p}, t={t}")
    q0 = base.shape.q
    if base.shape.n != q0 + 1 or base.kind != ("perfect", 1):
        raise ParameterError("split_II needs a 1-perfect-code coloring of H(q+1,q)")
    if base.witness is None or base.witness.color != 2 or base.witness.dim != 1:
        raise ParameterError("split_II needs a line partition of the non-code class")
    wit = base.witness
    n = q0 + 1
    shape = Shape(n, p * q0)

    def _special(Xu):
        masks = wit.masks(Xu)
        return np.round(np.log2(np.maximum(masks, 1))).astype(np.int64)

    def fn(V):
        Vi = V.astype(np.int64)
        X = (Vi % q0).astype(np.uint8)
        Xp = Vi // q0
        fX = base.eval_many(X)
        out = np.ones(len(V), dtype=np.uint8)
        nc = fX == 2
        if nc.any():
            isp = _special(X[nc])
            s = Xp[nc].sum(axis=1) - np.take_along_axis(Xp[nc], isp[:, None], axis=1)[:, 0]
            out[nc] = np.where(s % p < t, 1, 2)
        return out

    bt = (q0 ** 2 - 1) * (p - t)
    ct = (q0 ** 2 - 1) * t + p
    deg = shape.degree
    S = np.array([[deg - bt, bt], [ct, deg - ct]])

    def mask_fn(V):
        X = (np.asarray(V, dtype=np.int64) % q0).astype(np.uint8)
        return (np.int64(1) << _special(X))
    w = FaceWitness(2, 1, mask_fn)
    return Coloring(shape, 2, fn, quotient=S, witness=w,
                    recipe=Recipe.make("split_II", q=q0, p=p, t=t))


# ---------------------------------------------------------------------------
# face-partition searches


def _dense_dir_witness(col: Coloring, color: int, dirs: np.ndarray) -> FaceWitness:
    shape = col.shape

    def mask_fn(V):
        d = dirs[rank_many(shape, V)]
        return np.where(d >= 0, np.int64(1) << np.maximum(d, 0), 0)
    return FaceWitness(color, 1, mask_fn)


def edge_partition_binary(col: Coloring, color: int) -> FaceWitness:
    """Partition a color class of a binary Hamming graph into edges.

    Bipartite matching (even/odd weight) by augmenting paths; raises
    NoPartitionError when no perfect matching exists (e.g. independent class).
    """
    if col.shape.q != 2:
        raise ParameterError("edge partition applies to q = 2 only")
    dense = col.materialize()
    shape = col.shape
    cls = np.flatnonzero(dense == color)
    if len(cls) % 2:
        raise NoPartitionError("odd class size")
    inset = np.zeros(shape.size, dtype=bool)
    inset[cls] = True
    popcnt = np.vectorize(lambda x: bin(x).count("1"))
    par = popcnt(cls) % 2
    left = [int(r) for r in cls[par == 0]]
    right = {int(r): i for i, r in enumerate(cls[par == 1])}
    adj = {}
    for u in left:
        adj[u] = [u ^ (1 << i) for i in range(shape.n) if inset[u ^ (1 << i)]]
    match_r = [-1] * len(right)
    match_l = {u: -1 for u in left}

    def try_aug(u, seen):
        for v in adj[u]:
            j = right[v]
            if seen[j]:
                continue
            seen[j] = True
            if match_r[j] == -1 or try_aug(match_r[j], seen):
                match_r[j] = u
                match_l[u] = v
                return True
        return False

    for u in left:
        if not try_aug(u, [False] * len(right)):
            raise NoPartitionError("class has no perfect matching into edges")
    dirs = np.full(shape.size, -1, dtype=np.int64)
    for u, v in match_l.items():
        d = (u ^ v).bit_length() - 1
        dirs[u] = d
        dirs[v] = d
    return _dense_dir_witness(col, color, dirs)


def line_partition_search(col: Coloring, color: int,
                          deadline: float | None = None) -> FaceWitness:
    """Exact-cover backtracking for a partition of a color class into lines.

    Deterministic (most-constrained vertex first, lines tried in rank order).
    Raises NoPartitionError on exhausted search, SearchIndeterminate on timeout.
    """
    dense = col.materialize()
    shape = col.shape
    q, n = shape.q, shape.n
    cls = set(int(r) for r in np.flatnonzero(dense == color))
    if len(cls) % q:
        raise NoPartitionError("class size not divisible by q")
    radix = [q ** i for i in range(n)]
    V = unrank_many(shape, np.asarray(sorted(cls), dtype=np.int64))
    lines = {}
    for row, r in zip(V, sorted(cls)):
        for d in range(n):
            base = r - int(row[d]) * radix[d]
            key = (base, d)
            if key in lines:
                continue
            pts = [base + s * radix[d] for s in range(q)]
            if all(p in cls for p in pts):
                lines[key] = pts
    by_vertex = {r: [] for r in cls}
    for key, pts in sorted(lines.items()):
        for p in pts:
            by_vertex[p].append(key)
    t0 = time.monotonic()
    uncovered = set(cls)
    chosen = []

    def live(key):
        return all(p in uncovered for p in lines[key])

    def solve():
        if deadline is not None and time.monotonic() - t0 > deadline:
            raise SearchIndeterminate("line partition search timed out")
        if not uncovered:
            return True
        v = min(uncovered, key=lambda r: (sum(1 for k in by_vertex[r] if live(k)), r))
        for key in by_vertex[v]:
            if not live(key):
                continue
            pts = lines[key]
            for p in pts:
                uncovered.discard(p)
            chosen.append(key)
            if solve():
                return True
            chosen.pop()
            for p in pts:
                uncovered.add(p)
        return False

    if not solve():
        raise NoPartitionError("no partition of the class into lines")
    dirs = np.full(shape.size, -1, dtype=np.int64)
    for base, d in chosen:
        for s in range(q):
            dirs[base + s * radix[d]] = d
    return _dense_dir_witness(col, color, dirs)


def perfect_code_with_line_partition(q: int) -> Coloring:
    """1-perfect-code coloring of H(q+1,q) with its non-code class partitioned
    into lines: the standard split_II base (known for q = 2, 3)."""
    base = hamming_perfect_coloring(2, q)
    if q == 2:
        w = edge_partition_binary(base, 2)
    else:
        w = line_partition_search(base, 2)
    return base.with_witness(w)
