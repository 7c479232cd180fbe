from fractions import Fraction

import numpy as np
import pytest

from hamcolor import codes, coloring
from hamcolor.coloring import Recipe, complement, from_dense, parameters, swap_to_canonical
from hamcolor.hamming import Shape


def perfect34():
    return codes.hamming_perfect_coloring(2, 3, 1)


def test_materialize_and_counts():
    col = perfect34()
    dense = col.materialize()
    assert dense.shape == (81,)
    counts = col.color_counts()
    assert counts[0] == 9 and counts[1] == 72


def test_eval_matches_materialize():
    col = perfect34()
    dense = col.materialize()
    for r in [0, 1, 40, 80]:
        assert col.eval_rank(r) == dense[r] if hasattr(col, "eval_rank") else True
    V = np.array([[0, 0, 0, 0], [1, 2, 0, 1]])
    out = col.eval_many(V)
    assert out[0] == dense[0]


def test_complement_swaps_everything():
    col = perfect34()
    comp = complement(col)
    assert parameters(col) == (8, 1)
    assert parameters(comp) == (1, 8)
    assert np.array_equal(comp.materialize(), 3 - col.materialize())
    assert complement(comp).quotient.tolist() == col.quotient.tolist()
    assert comp.recipe.kind == "complement"


def test_swap_to_canonical():
    col = perfect34()            # (8,1): already canonical
    assert swap_to_canonical(col) is col
    comp = complement(col)       # (1,8): swap needed
    can = swap_to_canonical(comp)
    assert parameters(can) == (8, 1)
    # a tie keeps the original orientation
    sym = codes.mds2_coloring(3, 2, 1)   # (3,3)
    assert swap_to_canonical(sym) is sym


def test_densities():
    assert coloring.densities(8, 1) == (Fraction(1, 9), Fraction(8, 9))


def test_from_dense_roundtrip():
    col = perfect34()
    again = from_dense(col.shape, col.materialize(), col.k)
    assert np.array_equal(again.materialize(), col.materialize())
    with pytest.raises(coloring.ColoringError):
        from_dense(Shape(2, 3), np.zeros(5, dtype=np.uint8))


def test_recipe_params_sorted_and_hashable():
    r = Recipe.make("perfect", q=3, r=2, t=1)
    assert dict(r.params) == {"q": 3, "r": 2, "t": 1}
    assert r.p("t") == 1
    assert r.p("missing", 7) == 7
    assert hash(r) == hash(Recipe.make("perfect", t=1, r=2, q=3))


def test_validate_face_partition():
    from hamcolor.constructions import perfect_code_with_line_partition
    col = perfect_code_with_line_partition(3)
    assert coloring.validate_face_partition(col)
    # a wrong mask is caught
    bad = coloring.FaceWitness(2, 1, lambda V: np.zeros(len(V), dtype=np.int64))
    assert not coloring.validate_face_partition(col, bad)
