"""
Finite fields GF(p^s) and quasigroups.

Field elements are labelled 0..q-1; the base-p digits of a label are the
polynomial coefficients, digit i belonging to x^i.  The reduction modulus is
the lexicographically least monic irreducible of degree s, so e.g. GF(4) uses
x^2 + x + 1 and mul(2, 2) = 3.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence, Tuple

import numpy as np

from . import rng
from .hamming import Shape, all_vertices

MAX_FIELD_ORDER = 1 << 16
_TABLE_ORDER = 256  # dense q*q tables only below this


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> Tuple[int, int] | None:
    """Return (p, s) with q = p^s, or None when q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if p * p > q:
            break
        if q % p:
            continue
        s = 0
        m = q
        while m % p == 0:
            m //= p
            s += 1
        return (p, s) if m == 1 else None
    return (q, 1)


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p), coefficients little-endian


def _poly_trim(a):
    while a and a[-1] == 0:
        a = a[:-1]
    return a


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _poly_trim(tuple(out))


def _poly_mod(a, m, p):
    # m monic
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        if a[-1]:
            c = a[-1]
            shift = len(a) - 1 - dm
            for j in range(len(m)):
                a[shift + j] = (a[shift + j] - c * m[j]) % p
        a.pop()
    return _poly_trim(tuple(a))


def _label_to_poly(x: int, p: int):
    out = []
    while x:
        x, d = divmod(x, p)
        out.append(d)
    return tuple(out)


def _poly_to_label(a, p: int) -> int:
    r = 0
    for c in reversed(a):
        r = r * p + c
    return r


def _is_irreducible(m, p) -> bool:
    deg = len(m) - 1
    if deg <= 1:
        return deg == 1
    for d in range(1, deg // 2 + 1):
        # monic divisors of degree d
        for val in range(p ** d):
            cand = _label_to_poly(val, p) + (0,) * (d - len(_label_to_poly(val, p))) + (1,)
            q_, r_ = _poly_divmod_check(m, cand, p)
            if not r_:
                return False
    return True


def _poly_divmod_check(a, b, p):
    rem = _poly_mod(a, b, p)
    return None, rem


def least_irreducible(p: int, s: int) -> Tuple[int, ...]:
    """Lexicographically least monic irreducible of degree s over GF(p)."""
    if s == 1:
        return (0, 1)  # the polynomial x
    for val in range(p ** s):
        low = _label_to_poly(val, p)
        cand = low + (0,) * (s - len(low)) + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise RuntimeError(f"no irreducible of degree {s} over GF({p})")  # unreachable


# ---------------------------------------------------------------------------


@dataclass
class FiniteField:
    p: int
    s: int
    modulus: Tuple[int, ...]
    _add: np.ndarray = field(repr=False, default=None)
    _mul: np.ndarray = field(repr=False, default=None)
    _inv: np.ndarray = field(repr=False, default=None)

    @property
    def order(self) -> int:
        return self.p ** self.s

    @property
    def add_table(self) -> np.ndarray:
        if self._add is None:
            q, p, s = self.order, self.p, self.s
            if q > _TABLE_ORDER:
                raise ValueError(f"dense tables capped at order {_TABLE_ORDER}")
            radix = p ** np.arange(s, dtype=np.int64)
            dig = ((np.arange(q, dtype=np.int64)[:, None] // radix) % p)
            self._add = (((dig[:, None, :] + dig[None, :, :]) % p) @ radix).astype(np.int64)
        return self._add

    @property
    def mul_table(self) -> np.ndarray:
        if self._mul is None:
            q, p = self.order, self.p
            if q > _TABLE_ORDER:
                raise ValueError(f"dense tables capped at order {_TABLE_ORDER}")
            polys = [_label_to_poly(x, p) for x in range(q)]
            T = np.zeros((q, q), dtype=np.int64)
            for a in range(1, q):
                for b in range(a, q):
                    v = _poly_to_label(_poly_mod(_poly_mul(polys[a], polys[b], p), self.modulus, p), p)
                    T[a, b] = v
                    T[b, a] = v
            self._mul = T
        return self._mul

    @property
    def inv_table(self) -> np.ndarray:
        if self._inv is None:
            T = self.mul_table
            inv = np.argmax(T == 1, axis=1)
            inv[0] = 0
            self._inv = inv
        return self._inv

    def add(self, a, b):
        return self.add_table[a, b]

    def mul(self, a, b):
        return self.mul_table[a, b]

    def neg(self, a):
        # the additive inverse: digitwise p-complement
        q, p, s = self.order, self.p, self.s
        radix = p ** np.arange(s, dtype=np.int64)
        dig = ((np.asarray(a, dtype=np.int64)[..., None] // radix) % p)
        return (((-dig) % p) @ radix)

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.inv_table[a]


@lru_cache(maxsize=None)
def gf_make(p: int, s: int) -> FiniteField:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if s < 1 or p ** s > MAX_FIELD_ORDER:
        raise ValueError(f"field order p^s must be in [p, {MAX_FIELD_ORDER}]")
    return FiniteField(p, s, least_irreducible(p, s))


@lru_cache(maxsize=None)
def gf_for_order(q: int) -> FiniteField:
    pp = prime_power(q)
    if pp is None:
        raise ValueError(f"{q} is not a prime power")
    return gf_make(*pp)


# ---------------------------------------------------------------------------
# quasigroups


@dataclass
class Quasigroup:
    """n-ary quasigroup of a given order; fn maps an (N, arity) array to (N,)."""

    arity: int
    order: int
    fn: Callable[[np.ndarray], np.ndarray]
    name: str = "quasigroup"

    def __call__(self, J: np.ndarray) -> np.ndarray:
        return self.fn(np.asarray(J))


def iterated_sum_quasigroup(arity: int, q: int) -> Quasigroup:
    """The default n-ary quasigroup x_1 + ... + x_n mod q."""
    def fn(J):
        return J.astype(np.int64).sum(axis=1) % q
    return Quasigroup(arity, q, fn, name=f"sum{arity}_mod{q}")


def quasigroup_from_mds_partition(block_index: np.ndarray, arity: int, q: int) -> Quasigroup:
    """Quasigroup whose value on a word is the index of the MDS block containing it."""
    radix = q ** np.arange(arity, dtype=np.int64)
    tab = np.asarray(block_index, dtype=np.int64)

    def fn(J):
        return tab[J.astype(np.int64) @ radix]
    return Quasigroup(arity, q, fn, name=f"mds{arity}_ord{q}")


@dataclass
class QuasigroupReport:
    ok: bool
    exhaustive: bool
    lines_checked: int
    violation: tuple | None = None


def validate_quasigroup(Q: Quasigroup, budget: int | None = None, seed: int = 0,
                        samples: int = 10000) -> QuasigroupReport:
    """Check the Latin property: fixing all but one argument gives a bijection.

    Exhaustive when order**arity fits the budget, otherwise `samples` random
    lines drawn from the seeded stream.
    """
    from .hamming import materialization_budget
    limit = materialization_budget() if budget is None else budget
    q, m = Q.order, Q.arity
    if q ** m <= limit:
        sh = Shape(m, q)
        T = Q(all_vertices(sh, budget=limit)).reshape((q,) * m, order="F")
        # axis i of the F-ordered cube is argument i
        lines = 0
        for ax in range(m):
            S = np.sort(np.moveaxis(T, ax, -1), axis=-1)
            lines += S.size // q
            if not np.array_equal(S, np.broadcast_to(np.arange(q), S.shape)):
                bad = np.argwhere(S != np.arange(q))
                return QuasigroupReport(False, True, lines, tuple(bad[0]))
        return QuasigroupReport(True, True, lines)
    # sampled: random line = random word + random varying position
    words = rng.sample_ints(seed, samples * m, q).reshape(samples, m)
    pos = rng.sample_ints(seed ^ 0x5EED, samples, m)
    for ax in range(m):
        sel = words[pos == ax]
        if not len(sel):
            continue
        rep = np.repeat(sel[:, None, :], q, axis=1)
        rep[:, :, ax] = np.arange(q)
        vals = Q(rep.reshape(-1, m)).reshape(-1, q)
        ok = np.array_equal(np.sort(vals, axis=1),
                            np.broadcast_to(np.arange(q), vals.shape))
        if not ok:
            i = int(np.argmax((np.sort(vals, axis=1) != np.arange(q)).any(axis=1)))
            return QuasigroupReport(False, False, samples, tuple(sel[i]))
    return QuasigroupReport(True, False, samples)
