import numpy as np
import pytest

from hamcolor import algebra


def test_prime_power():
    assert algebra.prime_power(8) == (2, 3)
    assert algebra.prime_power(9) == (3, 2)
    assert algebra.prime_power(7) == (7, 1)
    assert algebra.prime_power(6) is None
    assert algebra.prime_power(1) is None


def test_gf4_modulus_and_product():
    F = algebra.gf_for_order(4)
    # least monic irreducible of degree 2 over GF(2): x^2 + x + 1
    assert F.modulus == (1, 1, 1)
    assert int(F.mul(np.array([2]), np.array([2]))[0]) == 3


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
def test_field_axioms(q):
    F = algebra.gf_for_order(q)
    xs = np.arange(q)
    A, B = np.meshgrid(xs, xs, indexing="ij")
    add = F.add(A, B)
    mul = F.mul(A, B)
    # commutativity and identity
    assert np.array_equal(add, add.T)
    assert np.array_equal(mul, mul.T)
    assert np.array_equal(F.add(xs, np.zeros(q, dtype=int)), xs)
    assert np.array_equal(F.mul(xs, np.ones(q, dtype=int)), xs)
    # each row of the addition/multiplication table is a permutation
    assert np.array_equal(np.sort(add, axis=1), np.tile(xs, (q, 1)))
    assert np.array_equal(np.sort(mul[1:, 1:], axis=1), np.tile(xs[1:], (q - 1, 1)))
    # inverses
    nz = xs[1:]
    assert np.all(F.mul(nz, F.inv(nz)) == 1)
    assert np.all(F.add(xs, F.neg(xs)) == 0)
    # distributivity, spot-checked on the full cube for small q
    if q <= 9:
        for a in range(q):
            lhs = F.mul(np.full((q, q), a), add)
            rhs = F.add(F.mul(np.full((q, q), a), A), F.mul(np.full((q, q), a), B))
            assert np.array_equal(lhs, rhs)


def test_gf_rejects_non_prime_power():
    with pytest.raises(ValueError):
        algebra.gf_for_order(6)


def test_iterated_sum_quasigroup_is_latin():
    for arity, q in [(2, 3), (3, 4), (4, 2)]:
        rep = algebra.validate_quasigroup(algebra.iterated_sum_quasigroup(arity, q))
        assert rep.ok and rep.exhaustive


def test_validate_quasigroup_catches_defect():
    bad = algebra.Quasigroup(2, 3, lambda J: (J[:, 0] * 0))
    rep = algebra.validate_quasigroup(bad)
    assert not rep.ok


def test_validate_quasigroup_sampled_mode():
    # order**arity above the budget forces sampling
    Q = algebra.iterated_sum_quasigroup(30, 3)
    rep = algebra.validate_quasigroup(Q, budget=1000, samples=500)
    assert rep.ok and not rep.exhaustive
