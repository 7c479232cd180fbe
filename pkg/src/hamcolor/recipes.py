"""
Recipes: serializable construction trees, with a bottom-up parameter predictor
(shape, color count, quotient matrix, witness availability) and a builder that
turns a recipe into a concrete Coloring.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from . import codes, constructions as cons
from .coloring import Coloring, Recipe, complement
from .hamming import Shape


class RecipeError(ValueError):
    pass


@dataclass
class Predicted:
    shape: Shape
    k: int
    S: np.ndarray | None
    witness: tuple | None = None   # (color, dim)


def _two(S):
    return int(S[0, 1]), int(S[1, 0])


def _mat2(deg, b, c):
    return np.array([[deg - b, b], [c, deg - c]], dtype=np.int64)


def predict(rec: Recipe) -> Predicted:
    """Parameters of build(rec), computed without building anything."""
    kind = rec.kind
    if kind == "mds2":
        n, q, t = rec.p("n"), rec.p("q"), rec.p("t")
        S = np.array([[n * (t - 1), n * (q - t)], [n * t, n * (q - 1 - t)]])
        return Predicted(Shape(n, q), 2, S)
    if kind == "perfect":
        q, r, t = rec.p("q"), rec.p("r"), rec.p("t")
        n = 1 if r == 1 else (q ** r - 1) // (q - 1)
        deg = n * (q - 1)
        S = np.array([[t - 1, deg - t + 1], [t, deg - t]])
        w = (2, 1) if (r == 2 and t == 1 and q in (2, 3)) else None
        return Predicted(Shape(n, q), 2, S, w)
    if kind == "mds_cyclic":
        m, q, t = rec.p("m"), rec.p("q"), rec.p("t")
        S = np.array([[m * (t - 1), m * (q - t)], [m * t, m * (q - 1 - t)]])
        return Predicted(Shape(m, q), 2, S)
    if kind == "solid":
        return Predicted(Shape(rec.p("m"), rec.p("q")), rec.p("k", 2), None)
    if kind == "split_II":
        q, p, t = rec.p("q"), rec.p("p"), rec.p("t")
        shape = Shape(q + 1, p * q)
        bt = (q ** 2 - 1) * (p - t)
        ct = (q ** 2 - 1) * t + p
        return Predicted(shape, 2, _mat2(shape.degree, bt, ct), (2, 1))

    sub = predict(rec.children[0])
    q, n = sub.shape.q, sub.shape.n
    if kind == "complement":
        S = None
        if sub.S is not None:
            b, c = _two(sub.S)
            S = _mat2(sub.shape.degree, c, b)
        w = None if sub.witness is None else (3 - sub.witness[0], sub.witness[1])
        return Predicted(sub.shape, 2, S, w)
    if kind == "extend":
        t = rec.p("t")
        S = None if sub.S is None else sub.S + t * (q - 1) * np.eye(sub.k, dtype=np.int64)
        return Predicted(Shape(n + t, q), sub.k, S, sub.witness)
    if kind == "mult_length":
        t = rec.p("t")
        return Predicted(Shape(n * t, q), sub.k, None if sub.S is None else t * sub.S)
    if kind == "mult_alphabet":
        p = rec.p("p")
        S = None if sub.S is None else p * sub.S + n * (p - 1) * np.eye(sub.k, dtype=np.int64)
        return Predicted(Shape(n, p * q), sub.k, S)
    if kind == "splitI_base":
        T = np.repeat(np.repeat(sub.S, q, axis=0), q, axis=1)
        return Predicted(Shape(q * n, q), 2 * q, T)
    if kind == "splitI_faces":
        w = _witness_of(sub)
        if w is None or w[0] != 1:
            raise RecipeError("splitI_faces needs a face partition of color 1")
        k = w[1]
        a = int(sub.S[0, 0])
        b, c = _two(sub.S)
        d = int(sub.S[1, 1])
        T = np.zeros((q + 1, q + 1), dtype=np.int64)
        if rec.p("variant") == "prime":
            T[:q, :q] = a + k
            np.fill_diagonal(T[:q, :q], a - k * (q - 1))
        else:
            T[:q, :q] = a - k * (q - 1)
            np.fill_diagonal(T[:q, :q], a + k * (q - 1) ** 2)
        T[:q, q] = q * b
        T[q, :q] = c
        T[q, q] = q * d
        return Predicted(Shape(q * n, q), q + 1, T)
    if kind == "flaass_std":
        b, c = _two(sub.S)
        lam = int(sub.S[0, 0]) - c
        if lam > 0:
            raise RecipeError("flaass_std needs main eigenvalue <= 0")
        t1, t2 = rec.p("t1"), rec.p("t2")
        shape = Shape(q * n - lam, q)
        ct = c * t1 + b * t2
        return Predicted(shape, 2, _mat2(shape.degree, q * (b + c) - ct, ct))
    if kind == "flaass_impr":
        w = _witness_of(sub)
        if w is None or w[0] != 1:
            raise RecipeError("flaass_impr needs a face partition of color 1")
        k = w[1]
        b, c = _two(sub.S)
        lam = int(sub.S[0, 0]) - c
        variant, t = rec.p("variant"), rec.p("t")
        if variant == 1:
            if lam + k > 0:
                raise RecipeError("variant 1 needs lambda + k <= 0")
            shape = Shape(q * n - lam - k, q)
            wout = None
        else:
            if lam > k * (q - 1):
                raise RecipeError("variant 2 needs lambda <= k(q-1)")
            shape = Shape(q * n - lam + k * (q - 1), q)
            wout = (1, k * q)
        ct = t * c
        return Predicted(shape, 2, _mat2(shape.degree, q * (b + c) - ct, ct), wout)
    if kind == "invasion":
        subs = [predict(ch) for ch in rec.children]
        f, gs = subs[0], subs[1:]
        m = gs[0].shape.n
        return Predicted(Shape(f.shape.n + m, q), max(g.k for g in gs), None)
    raise RecipeError(f"unknown recipe kind {kind!r}")


def _witness_of(sub: Predicted) -> tuple | None:
    if sub.witness is not None:
        return sub.witness
    # any non-independent color 1 of a binary 2-coloring splits into edges
    if sub.shape.q == 2 and sub.k == 2 and sub.S is not None and sub.S[0, 0] > 0:
        return (1, 1)
    return None


def predicted_quotient(rec: Recipe) -> np.ndarray:
    S = predict(rec).S
    if S is None:
        raise RecipeError(f"no predicted quotient for {rec.kind} recipes")
    return S


def _ensure_witness(col: Coloring) -> Coloring:
    """Attach a line/edge partition of color 1 when the coloring lacks one."""
    if col.witness is not None and col.witness.color == 1:
        return col
    if col.shape.q == 2:
        return col.with_witness(cons.edge_partition_binary(col, 1))
    return col.with_witness(cons.line_partition_search(col, 1))


def build(rec: Recipe) -> Coloring:
    kind = rec.kind
    if kind == "mds2":
        return codes.mds2_coloring(rec.p("n"), rec.p("q"), rec.p("t"))
    if kind == "perfect":
        col = codes.hamming_perfect_coloring(rec.p("r"), rec.p("q"), rec.p("t"))
        if rec.p("r") == 2 and rec.p("t") == 1 and rec.p("q") in (2, 3):
            col = cons.perfect_code_with_line_partition(rec.p("q"))
        return col
    if kind == "mds_cyclic":
        return cons.mds_cyclic_coloring(rec.p("m"), rec.p("q"), rec.p("i"), rec.p("t"))
    if kind == "solid":
        return cons.solid_coloring(rec.p("m"), rec.p("q"), rec.p("color"), rec.p("k", 2))
    if kind == "split_II":
        base = cons.perfect_code_with_line_partition(rec.p("q"))
        return cons.split_II(base, rec.p("p"), rec.p("t"))
    if not rec.children:
        raise RecipeError(f"unknown recipe kind {kind!r}")
    child = build(rec.children[0])
    if kind == "complement":
        return complement(child)
    if kind == "extend":
        return cons.extend_dimension(child, rec.p("t"))
    if kind == "mult_length":
        return cons.multiply_length(child, rec.p("t"))
    if kind == "mult_alphabet":
        return cons.multiply_alphabet(child, rec.p("p"))
    if kind == "splitI_base":
        return cons.splitI_base(child)
    if kind == "splitI_faces":
        return cons.splitI_faces(_ensure_witness(child), rec.p("variant"))
    if kind == "flaass_std":
        return cons.flaass_standard(child, rec.p("t1"), rec.p("t2"))
    if kind == "flaass_impr":
        return cons.flaass_improved(_ensure_witness(child), rec.p("variant"), rec.p("t"))
    if kind == "invasion":
        gs = [build(ch) for ch in rec.children[1:]]
        return cons.invasion(child, gs)
    raise RecipeError(f"unknown recipe kind {kind!r}")


# ---------------------------------------------------------------------------
# s-expression serialization


def recipe_to_text(rec: Recipe) -> str:
    parts = [rec.kind]
    for k, v in rec.params:
        parts.append(f":{k} {v}")
    for ch in rec.children:
        parts.append(recipe_to_text(ch))
    return "(" + " ".join(parts) + ")"


_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def parse_recipe(text: str) -> Recipe:
    tokens = _TOKEN.findall(text)
    pos = 0

    def parse():
        nonlocal pos
        if tokens[pos] != "(":
            raise RecipeError(f"expected '(' at token {pos}")
        pos += 1
        kind = tokens[pos]
        pos += 1
        params = {}
        children = []
        while tokens[pos] != ")":
            tok = tokens[pos]
            if tok.startswith(":"):
                key = tok[1:]
                pos += 1
                val = tokens[pos]
                pos += 1
                params[key] = int(val) if re.fullmatch(r"-?\d+", val) else val
            elif tok == "(":
                children.append(parse())
            else:
                raise RecipeError(f"unexpected token {tok!r}")
        pos += 1
        return Recipe.make(kind, children, **params)

    try:
        rec = parse()
    except IndexError:
        raise RecipeError("unbalanced parentheses in recipe") from None
    if pos != len(tokens):
        raise RecipeError("trailing tokens after recipe")
    return rec
