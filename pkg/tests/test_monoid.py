"""Hilbert monoid divisor theory and the singular monoid counterexample."""

from math import gcd

import pytest

from kummerlab.arith import factorize_int
from kummerlab.monoid import (
    HilbertMonoid,
    SingularMonoid,
    class_group,
    defined_at,
    factor_into_irreducibles,
    ideal_factorization,
    is_irreducible,
    multiplicity_monoid,
    singular_monoid_report,
    square_test,
    uniformizer,
)

M4 = HilbertMonoid(4, [1])


def test_membership_and_validation():
    assert 21 in M4 and 9 in M4 and 1 in M4
    assert 3 not in M4 and 0 not in M4
    with pytest.raises(ValueError):
        HilbertMonoid(4, [2])  # 2 is not a unit mod 4
    with pytest.raises(ValueError):
        HilbertMonoid(5, [1, 2])  # not closed: 2*2 = 4 missing


def test_irreducibles():
    assert is_irreducible(M4, 9)
    assert is_irreducible(M4, 21)
    assert is_irreducible(M4, 49)
    assert not is_irreducible(M4, 25)  # 5 * 5
    assert not is_irreducible(M4, 1)


def test_factorizations_of_441():
    assert factor_into_irreducibles(M4, 441, all_factorizations=True) == [
        (9, 49),
        (21, 21),
    ]
    assert factor_into_irreducibles(M4, 9) == (9,)
    assert factor_into_irreducibles(M4, 1) == ()
    with pytest.raises(ValueError):
        factor_into_irreducibles(M4, 7)


def test_ideal_factorization():
    assert [(pr.p, e) for pr, e in ideal_factorization(M4, 441)] == [
        (3, 2),
        (7, 2),
    ]
    assert [(pr.p, e) for pr, e in ideal_factorization(M4, 9)] == [(3, 2)]
    five = ideal_factorization(M4, 5)
    assert five[0][0].is_principal()
    three = ideal_factorization(M4, 9)[0][0]
    assert not three.is_principal()
    with pytest.raises(ValueError):
        ideal_factorization(M4, 12)  # not in M / shares factor with modulus


def test_ideal_factorization_matches_integers():
    for a in range(1, 10001):
        if a in M4:
            factors = ideal_factorization(M4, a)
            assert {pr.p: e for pr, e in factors} == factorize_int(a)
            prod = 1
            for pr, e in factors:
                prod *= pr.p**e
            assert prod == a


def test_defined_at_cancellation_chain():
    assert defined_at(M4, 3, 9, 21) == {"defined": True, "value": 0}
    second = defined_at(M4, 3, 9, 21**2)
    assert second["defined"] and second["value"] == 1  # value of 1/49 mod 3
    third = defined_at(M4, 3, 9, 21**3)
    assert third == {"defined": False, "value": "oo"}
    assert defined_at(M4, 3, 21, 9) == {"defined": False, "value": "oo"}


def test_uniformizers():
    assert uniformizer(M4, 3) == 21
    assert uniformizer(M4, 5) == 5
    assert uniformizer(M4, 7) == 7 * 3
    with pytest.raises(ValueError):
        uniformizer(M4, 2)  # divides the modulus: outside theory


def test_nine_is_not_a_uniformizer():
    # 21 is killed by the map, but the map is undefined at 21/9
    assert defined_at(M4, 3, 21, 9)["defined"] is False


def test_multiplicity():
    assert multiplicity_monoid(M4, 3, 9) == 2
    assert multiplicity_monoid(M4, 3, 5) == 0
    assert multiplicity_monoid(M4, 7, 441) == 2
    for q in (21, 33, 57):  # 3*7, 3*11, 3*19
        assert multiplicity_monoid(M4, 3, 9, q) == 2


def test_multiplicity_uniformizer_independent_sweep():
    for a in range(1, 1001):
        if a in M4:
            expected = multiplicity_monoid(M4, 3, a, 21)
            for q in (33, 57):
                assert multiplicity_monoid(M4, 3, a, q) == expected, a


def test_multiplicity_equals_integer_exponent():
    for a in range(1, 1000):
        if a in M4 and gcd(a, 4) == 1:
            for p in (3, 5, 7):
                exp = 0
                n = a
                while n % p == 0:
                    exp += 1
                    n //= p
                assert multiplicity_monoid(M4, p, a) == exp


def test_class_groups():
    rep = class_group(M4)
    assert rep["order"] == 2 and rep["invariant_factors"] == [2]
    assert class_group(HilbertMonoid(5, [1, 2, 3, 4]))["order"] == 1
    klein = class_group(HilbertMonoid(8, [1]))
    assert klein["order"] == 4
    assert klein["invariant_factors"] == [2, 2]
    assert klein["isomorphic_to"] == "C2 x C2"
    cyclic = class_group(HilbertMonoid(5, [1]))
    assert cyclic["order"] == 4 and cyclic["invariant_factors"] == [4]


def test_class_group_law_well_defined():
    M = HilbertMonoid(8, [1])
    rep = class_group(M)
    cosets = [tuple(c) for c in rep["cosets"]]
    table = rep["table"]
    for i, ci in enumerate(cosets):
        for j, cj in enumerate(cosets):
            # any pair of representatives lands in the product coset
            for a in ci:
                for b in cj:
                    assert a * b % 8 in cosets[table[i][j]]


def test_square_tests():
    assert square_test(M4, 25) == {"square_in_M": True, "square_in_QM": True}
    assert square_test(M4, 9) == {"square_in_M": False, "square_in_QM": False}
    assert square_test(M4, 441) == {"square_in_M": True, "square_in_QM": True}


def test_square_booleans_coincide():
    for a in range(1, 10001):
        if a in M4:
            rep = square_test(M4, a)
            assert rep["square_in_M"] == rep["square_in_QM"], a


def test_dichotomy_in_hilbert_monoids():
    members = [a for a in range(1, 501) if a in M4]
    for p in (3, 7):
        for a in members:
            for b in members:
                forward = defined_at(M4, p, a, b)["defined"]
                backward = defined_at(M4, p, b, a)["defined"]
                assert forward or backward, (p, a, b)


def test_singular_monoid_membership():
    N = SingularMonoid()
    assert 6 in N and 2 in N and 9 in N
    assert 3 not in N and 7 not in N


def test_singular_dichotomy_failure_pattern():
    # undefined in both directions exactly when the reduced fraction is a
    # ratio of odd numbers whose product is 3 mod 4
    N = SingularMonoid()
    for a in range(1, 61):
        for b in range(1, 61):
            if a not in N or b not in N:
                continue
            g = gcd(a, b)
            a0, b0 = a // g, b // g
            forward = defined_at(N, 2, a, b)["defined"]
            backward = defined_at(N, 2, b, a)["defined"]
            both_fail = not forward and not backward
            expected = a0 % 2 == 1 and b0 % 2 == 1 and (a0 * b0) % 4 == 3
            assert both_fail == expected, (a, b)


def test_singular_report():
    rep = singular_monoid_report()
    assert rep["holds"]
    assert not rep["defined_at_6_over_2"]
    assert not rep["defined_at_2_over_6"]
    assert rep["nine_square_in_QN"] and not rep["nine_square_in_N"]
