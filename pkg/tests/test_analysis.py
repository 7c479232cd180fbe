import numpy as np
import pytest

from hamcolor import analysis, codes, constructions as cons
from hamcolor.coloring import complement, from_dense
from hamcolor.hamming import Shape


def perfect34():
    return codes.hamming_perfect_coloring(2, 3, 1)


def test_extract_quotient():
    Q = analysis.extract_quotient(perfect34())
    assert Q.tolist() == [[0, 8], [1, 7]]


def test_verify_full_catches_planted_defect():
    col = perfect34()
    dense = col.materialize().copy()
    dense[40] = 3 - dense[40]
    bad = from_dense(col.shape, dense, 2)
    rep = analysis.verify_full(bad, col.quotient)
    assert not rep.ok
    assert rep.violations
    # the defect vertex or a neighbor shows up in the violation list
    assert any(v[0] in range(81) for v in rep.violations)


def test_verify_sampled_deterministic():
    col = perfect34()
    r1 = analysis.verify_sampled(col, col.quotient, samples=500, seed=3)
    r2 = analysis.verify_sampled(col, col.quotient, samples=500, seed=3)
    assert r1.ok and r2.ok
    assert r1.checked == r2.checked == 500
    assert "sampled" in r1.summary()


def test_verify_sampled_catches_planted_defect():
    col = perfect34()
    dense = col.materialize().copy()
    dense[dense == 1] = 2      # kill color 1 entirely
    bad = from_dense(col.shape, dense, 2)
    rep = analysis.verify_sampled(bad, col.quotient, samples=300, seed=0)
    assert not rep.ok


def test_verify_auto_picks_mode():
    col = perfect34()
    rep = analysis.verify(col, col.quotient)
    assert rep.mode == "full"
    rep = analysis.verify(col, col.quotient, budget=10, samples=200)
    assert rep.mode == "sampled"


def test_weight_distribution_recurrence_vs_bruteforce():
    col = perfect34()
    W = analysis.weight_distribution_recurrence(col.quotient, col.shape, 1)
    assert W == [[1, 0, 0, 8, 0], [0, 8, 24, 24, 16]]
    assert W == analysis.weight_distribution_bruteforce(col, (0, 0, 0, 0))


def test_weight_distribution_start_color_2():
    col = perfect34()
    W = analysis.weight_distribution_recurrence(col.quotient, col.shape, 2)
    origin = (1, 0, 0, 0)
    assert col.eval_many(np.array([origin]))[0] == 2
    assert W == analysis.weight_distribution_bruteforce(col, origin)


def test_weight_distribution_totals():
    col = codes.hamming_perfect_coloring(2, 4)
    W = analysis.weight_distribution_recurrence(col.quotient, col.shape, 1)
    sh = col.shape
    from hamcolor.hamming import sphere_size
    for j in range(sh.n + 1):
        assert W[0][j] + W[1][j] == sphere_size(sh, j)


def test_infeasible_distribution():
    # a 1-perfect code in H(4,2) cannot exist: the ball size 5 does not divide 16
    sh = Shape(4, 2)
    S = np.array([[0, 4], [1, 3]])
    with pytest.raises(analysis.InfeasibleDistribution):
        analysis.weight_distribution_recurrence(S, sh, 1)


def test_distribution_feasible():
    assert analysis.distribution_feasible(2, 3, 1, 3)
    assert not analysis.distribution_feasible(2, 4, 1, 4)


def test_face_balance_check():
    col = perfect34()
    assert analysis.face_balance_check(col)


def test_neighbor_color_counts_shape():
    col = perfect34()
    counts = analysis.neighbor_color_counts(col)
    assert counts.shape == (81, 2)
    assert np.all(counts.sum(axis=1) == col.shape.degree)
