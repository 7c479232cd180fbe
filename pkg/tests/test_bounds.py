import pytest

from hamcolor import bounds


def test_eigenvalue_condition():
    assert bounds.eigenvalue_condition(3, 8, 1)
    assert not bounds.eigenvalue_condition(3, 4, 1)   # 3 does not divide 5


def test_divisibility_exponent():
    # b'+c' = 9 = 3^2 over q=3: k = 2
    assert bounds.divisibility_exponent(3, 5, 4) == 2
    # b'+c' = 3 over q = 3: k = 1
    assert bounds.divisibility_exponent(3, 2, 1) == 1
    # a prime of b'+c' missing from q: inadmissible
    assert bounds.divisibility_exponent(4, 3, 3) is None or bounds.divisibility_exponent(4, 3, 3) >= 1
    assert bounds.divisibility_exponent(2, 2, 1) is None   # 3 does not divide 2


def test_divisibility_bound():
    # (5,4) over q=3: (b+c)/q + k - 1 = 3 + 1 = 4
    assert bounds.divisibility_bound(3, 5, 4) == 4
    # (14,13) over q=3: 9 + 3 - 1 = 11
    assert bounds.divisibility_bound(3, 14, 13) == 11


def test_degree_bound():
    assert bounds.degree_bound(3, 8) == 4
    assert bounds.degree_bound(4, 21) == 7


def test_fdf_bound():
    assert bounds.fdf_bound(5, 3) == 6    # ceil(24/4)
    assert bounds.fdf_bound(3, 3) is None # b = c excluded


def test_c1_condition():
    assert bounds.c1_condition(3, 8)       # 2 | 8 and 9 = 3^2
    assert not bounds.c1_condition(3, 7)   # 2 does not divide 7
    assert not bounds.c1_condition(4, 6)   # 7 is not a power of 4
    # for q that is not a prime power only the divisibility part applies
    assert bounds.c1_condition(6, 35)


def test_lower_bound_canonicalizes():
    lb1 = bounds.lower_bound(3, 8, 1)
    lb2 = bounds.lower_bound(3, 1, 8)
    assert lb1.value == lb2.value == 4


def test_lower_bound_inadmissible():
    lb = bounds.lower_bound(3, 4, 1)
    assert lb.inadmissible
    lb = bounds.lower_bound(2, 2, 1)
    assert lb.inadmissible


def test_exceptions_raise_lower_bound():
    lb = bounds.lower_bound(3, 14, 4)
    assert lb.value == 8
    assert any("HSS97" in name for name, _ in lb.reasons)
    lb = bounds.lower_bound(6, 35, 1)
    assert lb.value == 8
    assert any("GolombPosner64" in name for name, _ in lb.reasons)


def test_exception_only_applies_at_the_boundary():
    # the exception list stores n = 7; it must only bump when LB lands on 7
    lb = bounds.lower_bound(3, 28, 8)   # scaled version, different LB
    assert lb.value != 8 or not any("HSS97" in n for n, _ in lb.reasons)


def test_threshold_bounds_prime_power():
    assert bounds.threshold_bounds_prime_power(3, 6, 3) == (3, 3)
    assert bounds.threshold_bounds_prime_power(3, 5, 4) == (4, 4)
    # b'+c' = 8 is not a power of q = 4: no threshold statement
    assert bounds.threshold_bounds_prime_power(4, 5, 3) is None


def test_factorize():
    assert bounds.factorize(360) == {2: 3, 3: 2, 5: 1}
    assert bounds.factorize(1) == {}
