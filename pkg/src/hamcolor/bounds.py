"""
Necessary conditions and lower bounds on the minimal dimension n for which a
(b,c)-coloring of H(n,q) can exist, plus the matching threshold upper bounds
for prime-power alphabets.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from typing import List

from .algebra import is_prime, prime_power


def factorize(m: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


@dataclass(frozen=True)
class Params2:
    """Canonicalized parameters of a (b,c)-coloring candidate."""

    q: int
    b: int
    c: int

    def __post_init__(self):
        if self.q < 2 or self.b < 1 or self.c < 1:
            raise ValueError(f"bad parameters q={self.q}, b={self.b}, c={self.c}")

    @property
    def g(self) -> int:
        return math.gcd(self.b, self.c)

    @property
    def reduced(self) -> tuple[int, int]:
        return self.b // self.g, self.c // self.g

    @property
    def canonical(self) -> "Params2":
        return self if self.b >= self.c else Params2(self.q, self.c, self.b)


def eigenvalue_condition(q: int, b: int, c: int) -> bool:
    """q must divide b+c (the main eigenvalue n(q-1)-(b+c) is an eigenvalue)."""
    return (b + c) % q == 0


def divisibility_exponent(q: int, b: int, c: int) -> int | None:
    """Minimal k with (b'+c') | q^k, or None when no such k exists.

    None means the parameters are inadmissible in every dimension: some prime
    divides b'+c' but not q.
    """
    p = Params2(q, b, c)
    bp, cp = p.reduced
    s = bp + cp
    fq = factorize(q)
    k = 0
    for prime, e in factorize(s).items():
        if prime not in fq:
            return None
        k = max(k, -(-e // fq[prime]))
    return k


def divisibility_bound(q: int, b: int, c: int) -> int | None:
    """Lower bound n >= (b+c)/q + k - 1 from the correlation-immunity argument."""
    k = divisibility_exponent(q, b, c)
    if k is None:
        return None
    return (b + c) // q + k - 1


def c1_condition(q: int, b: int) -> bool:
    """Necessary condition for c = 1: (q-1) | b, and for prime-power q
    additionally b + 1 = q^r for some r."""
    if b % (q - 1):
        return False
    if prime_power(q) is not None:
        m = b + 1
        while m % q == 0:
            m //= q
        return m == 1
    return True


def degree_bound(q: int, b: int) -> int:
    """n(q-1) >= b, i.e. n >= ceil(b / (q-1))."""
    return -(-b // (q - 1))


def fdf_bound(b: int, c: int) -> int | None:
    """Binary-only bound n >= ceil(3(b+c)/4) when b != c (Fon-Der-Flaass)."""
    if b == c:
        return None
    return -(-(3 * (b + c)) // 4)


@dataclass(frozen=True)
class ExceptionRecord:
    q: int
    b: int
    c: int
    n: int
    tag: str


_DATA = os.path.join(os.path.dirname(__file__), "data", "exceptions.txt")


def load_exceptions(path: str | None = None) -> List[ExceptionRecord]:
    """Parse the exception file: one `q b c n citation-tag` record per line."""
    out = []
    with open(path or _DATA) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            qs, bs, cs, ns, tag = line.split()
            out.append(ExceptionRecord(int(qs), int(bs), int(cs), int(ns), tag))
    return out


@dataclass
class LowerBound:
    value: int | None            # None when inadmissible for every n
    reasons: list = field(default_factory=list)   # (name, value) pairs
    inadmissible_reason: str | None = None

    @property
    def inadmissible(self) -> bool:
        return self.value is None


def lower_bound(q: int, b: int, c: int,
                exceptions: List[ExceptionRecord] | None = None) -> LowerBound:
    """Best known lower bound on n for a canonical (b,c)-coloring of H(n,q)."""
    p = Params2(q, b, c).canonical
    b, c = p.b, p.c
    if not eigenvalue_condition(q, b, c):
        return LowerBound(None, inadmissible_reason="q does not divide b+c")
    k = divisibility_exponent(q, b, c)
    if k is None:
        return LowerBound(None, inadmissible_reason="a prime of b'+c' does not divide q")
    if c == 1 and not c1_condition(q, b):
        return LowerBound(None, inadmissible_reason="c=1 degree condition fails")
    reasons = [("degree", degree_bound(q, b)),
               ("divisibility", (b + c) // q + k - 1)]
    if q == 2 and (f := fdf_bound(b, c)) is not None:
        reasons.append(("fdf", f))
    value = max(v for _, v in reasons)
    if exceptions is None:
        exceptions = load_exceptions()
    bumped = True
    while bumped:
        bumped = False
        for rec in exceptions:
            if (rec.q, rec.b, rec.c) == (q, b, c) and rec.n == value:
                reasons.append((f"exception:{rec.tag}", rec.n + 1))
                value = rec.n + 1
                bumped = True
    return LowerBound(value, reasons)


def threshold_bounds_prime_power(q: int, b: int, c: int) -> tuple[int, int] | None:
    """For prime-power q with b'+c' a power of q, the parameters are realizable
    for all large n; returns (lo, hi) bracketing the threshold n0:

        max(ceil(b/(q-1)), (b+c)/q + k - 1)  <=  n0  <=  (b+c-gcd(b,c))/(q-1).

    Returns None when the hypothesis fails (then no n works at all for prime q).
    """
    p = Params2(q, b, c).canonical
    b, c = p.b, p.c
    if prime_power(q) is None or not eigenvalue_condition(q, b, c):
        return None
    k = divisibility_exponent(q, b, c)
    if k is None:
        return None
    bp, cp = p.reduced
    if q ** k != bp + cp:
        return None
    lo = max(degree_bound(q, b), (b + c) // q + k - 1)
    hi = (b + c - p.g) // (q - 1)
    return lo, hi
