"""Symmetric-function vector arithmetic and basis-conversion tests."""

from fractions import Fraction
from math import comb

import pytest

from csfkit.compositions import Partition
from csfkit.symfunc import (
    Basis,
    BasisVector,
    e_partition_to_p,
    evector_to_p,
    first_difference,
)


def partitions_of(n):
    # auxiliary enumeration used only by tests
    if n == 0:
        yield ()
        return
    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest
    yield from rec(n, n)


def test_e1_is_p1():
    assert e_partition_to_p((1,)).terms == {Partition((1,)): Fraction(1)}


def test_e2_newton_image():
    assert e_partition_to_p((2,)).terms == {
        Partition((1, 1)): Fraction(1, 2),
        Partition((2,)): Fraction(-1, 2),
    }


def test_e3_newton_image():
    assert e_partition_to_p((3,)).terms == {
        Partition((1, 1, 1)): Fraction(1, 6),
        Partition((2, 1)): Fraction(-1, 2),
        Partition((3,)): Fraction(1, 3),
    }


def test_e_partition_rejects_empty():
    with pytest.raises(ValueError):
        e_partition_to_p(())


def test_linearity_of_vector_conversion():
    two_e2 = BasisVector(Basis.E, 2, {(2,): 2})
    assert evector_to_p(two_e2).terms == {
        Partition((1, 1)): Fraction(1),
        Partition((2,)): Fraction(-1),
    }
    mix = BasisVector(Basis.E, 3, {(2, 1): 1, (3,): 3})
    assert evector_to_p(mix).terms == {
        Partition((1, 1, 1)): Fraction(1),
        Partition((2, 1)): Fraction(-2),
        Partition((3,)): Fraction(1),
    }
    zero = BasisVector(Basis.E, 4)
    assert evector_to_p(zero).is_zero()


def test_conversion_requires_e_basis():
    pvec = BasisVector(Basis.P, 2, {(2,): 1})
    with pytest.raises(ValueError):
        evector_to_p(pvec)


def test_conversion_is_multiplicative_over_parts():
    # image of e_lambda equals the p-product of the single-part images,
    # multiplied here by an independent convolution
    def p_multiply(lhs, rhs):
        out = {}
        for mu, c1 in lhs.items():
            for nu, c2 in rhs.items():
                key = Partition(tuple(mu) + tuple(nu))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return {k: v for k, v in out.items() if v}

    for n in range(1, 11):
        for lam in partitions_of(n):
            product = {Partition(()): Fraction(1)}
            for part in lam:
                product = p_multiply(product, e_partition_to_p((part,)).terms)
            assert product == e_partition_to_p(lam).terms


def test_specialization_at_all_ones_matches_binomials():
    # e_m(1^k) = C(k, m) and p_m(1^k) = k, so both sides of the conversion
    # must evaluate identically for every small variable count
    for n in range(1, 13):
        for lam in partitions_of(n):
            evec = BasisVector(Basis.E, n, {lam: 1})
            pvec = e_partition_to_p(lam)
            for k in range(1, 5):
                expected = Fraction(1)
                for part in lam:
                    expected *= comb(k, part)
                assert evec.evaluate_ones(k) == expected
                assert pvec.evaluate_ones(k) == expected


def test_vector_construction_prunes_zeros_and_checks_degree():
    vec = BasisVector(Basis.E, 3, {(2, 1): 0, (3,): 5})
    assert vec.terms == {Partition((3,)): Fraction(5)}
    with pytest.raises(ValueError):
        BasisVector(Basis.E, 3, {(2, 2): 1})


def test_add_scale_equals():
    vec = BasisVector(Basis.E, 2, {(2,): 1, (1, 1): 3})
    assert vec.add(vec.scale(-1)).is_zero()
    assert vec.scale(Fraction(1, 2)).scale(2).equals(vec)
    noisy = BasisVector(Basis.E, 2, {(2,): 1, (1, 1): 3})
    assert vec.equals(noisy)
    assert vec.subtract(noisy).is_zero()


def test_mismatched_operands_are_usage_errors():
    e2 = BasisVector(Basis.E, 2, {(2,): 1})
    p2 = BasisVector(Basis.P, 2, {(2,): 1})
    e3 = BasisVector(Basis.E, 3, {(3,): 1})
    with pytest.raises(ValueError):
        e2.add(p2)
    with pytest.raises(ValueError):
        e2.equals(e3)


def test_first_difference_reports_reverse_lex_first_mismatch():
    lhs = BasisVector(Basis.E, 4, {(4,): 1, (2, 2): 5})
    rhs = BasisVector(Basis.E, 4, {(4,): 1, (2, 2): 6, (2, 1, 1): 1})
    lam, a, b = first_difference(lhs, rhs)
    assert lam == Partition((2, 2)) and (a, b) == (5, 6)
    assert first_difference(lhs, lhs) is None


def test_json_round_trip_preserves_exact_coefficients():
    vec = BasisVector(
        Basis.E, 9, {(5, 2, 2): -3, (9,): Fraction(7, 2)}
    )
    data = vec.to_json_dict()
    assert data["basis"] == "e" and data["degree"] == 9
    assert data["terms"][0] == {"partition": [9], "num": "7", "den": "2"}
    assert data["terms"][1] == {"partition": [5, 2, 2], "num": "-3", "den": "1"}
    again = BasisVector.from_json(vec.to_json())
    assert again.equals(vec) and again.basis is vec.basis
