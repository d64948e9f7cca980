"""Composition enumeration and prefix-statistic tests."""

import pytest

from csfkit.compositions import (
    Composition,
    Partition,
    compositions_of,
    format_parts,
    parse_composition,
    weight_positive_compositions,
)


def test_enumeration_of_three_is_complete_and_lexicographic():
    got = [tuple(c) for c in compositions_of(3, 1)]
    assert got == [(1, 1, 1), (1, 2), (2, 1), (3,)]


def test_enumeration_with_min_part_two():
    got = [tuple(c) for c in compositions_of(5, 2)]
    assert got == [(2, 3), (3, 2), (5,)]


def test_enumeration_count_is_two_to_the_n_minus_one():
    for n in range(1, 13):
        assert sum(1 for _ in compositions_of(n, 1)) == 2 ** (n - 1)


def test_enumeration_yields_no_duplicates_and_correct_sums():
    for n in range(1, 10):
        seen = set()
        for comp in compositions_of(n, 1):
            assert comp.modulus == n
            assert comp.parts not in seen
            seen.add(comp.parts)


def test_enumeration_order_is_lexicographic():
    for n in range(1, 10):
        tuples = [c.parts for c in compositions_of(n, 1)]
        assert tuples == sorted(tuples)


def test_min_part_two_counts_follow_fibonacci_recurrence():
    # c(2) = c(3) = 1 and c(n) = c(n-1) + c(n-2): appending a 2 or growing
    # the last part by 1 are inverse bijections
    counts = {n: sum(1 for _ in compositions_of(n, 2)) for n in range(2, 21)}
    assert counts[2] == 1 and counts[3] == 1
    for n in range(4, 21):
        assert counts[n] == counts[n - 1] + counts[n - 2]


def test_enumeration_rejects_degenerate_arguments():
    with pytest.raises(ValueError):
        next(compositions_of(0, 1))
    with pytest.raises(ValueError):
        next(compositions_of(3, 0))
    with pytest.raises(ValueError):
        next(compositions_of(65, 1))


def test_weight_positive_stream_matches_filtered_full_stream():
    for n in range(1, 11):
        expected = [c.parts for c in compositions_of(n, 1) if c.weight > 0]
        got = [c.parts for c in weight_positive_compositions(n)]
        assert got == expected


def test_composition_rejects_bad_parts():
    with pytest.raises(ValueError):
        Composition((2, 0, 1))
    with pytest.raises(ValueError):
        Composition((-3,))
    with pytest.raises(ValueError):
        Composition([1] * 65)


def test_empty_composition_is_internal_only():
    empty = Composition(())
    assert empty.modulus == 0 and len(empty) == 0 and not empty
    with pytest.raises(ValueError):
        empty.rho()
    with pytest.raises(ValueError):
        _ = empty.weight


def test_rho_sorts_parts_decreasingly():
    assert Composition((2, 3, 2)).rho() == Partition((3, 2, 2))
    assert Composition((5,)).rho() == Partition((5,))
    assert Composition((2, 2, 5, 2)).rho() == Partition((5, 2, 2, 2))


def test_reversal_examples_and_involution():
    assert Composition((7, 2, 2)).reversed() == Composition((2, 2, 7))
    assert Composition((5,)).reversed() == Composition((5,))
    for n in range(1, 9):
        for comp in compositions_of(n, 1):
            assert comp.reversed().reversed() == comp


def test_weight_examples():
    assert Composition((3, 2)).weight == 3
    assert Composition((2, 1, 2)).weight == 0
    assert Composition((2, 5, 2, 2)).weight == 8


def test_weight_zero_exactly_when_a_later_part_is_one():
    for n in range(1, 10):
        for comp in compositions_of(n, 1):
            positive = all(p >= 2 for p in comp.parts[1:])
            assert (comp.weight > 0) == positive


def test_sigma_theta_plus_examples():
    comp = Composition((2, 3, 2))
    assert comp.sigma_plus(4) == 5 and comp.theta_plus(4) == 1
    assert Composition((7, 2, 2)).theta_plus(2) == 5
    for n in range(1, 9):
        for comp in compositions_of(n, 1):
            assert comp.theta_plus(0) == 0
            assert comp.theta_minus(n) == 0


def test_sigma_theta_minus_examples():
    comp = Composition((2, 3, 2))
    assert comp.sigma_minus(4) == 2 and comp.theta_minus(4) == 2
    assert Composition((2, 2, 7)).theta_minus(6) == 2


def test_threshold_domain_errors():
    comp = Composition((2, 3))
    for bad in (-1, 6, 100):
        with pytest.raises(ValueError):
            comp.theta_plus(bad)
        with pytest.raises(ValueError):
            comp.theta_minus(bad)


def test_reversal_duality_of_undershoot_and_overshoot():
    for n in range(1, 11):
        for comp in compositions_of(n, 1):
            rev = comp.reversed()
            for a in range(0, n + 1):
                assert comp.theta_minus(a) == rev.theta_plus(n - a)


def test_overshoot_is_bounded_by_the_straddling_part():
    # the overshoot at a >= 1 never reaches the part that crosses a
    for n in range(1, 11):
        for comp in compositions_of(n, 1):
            for a in range(1, n + 1):
                sigma = comp.sigma_plus(a)
                index = comp.prefix_moduli.index(sigma)
                if index > 0:
                    assert comp.theta_plus(a) < comp.parts[index - 1]


def test_format_and_parse_round_trip():
    assert format_parts((7, 2, 2)) == "722"
    assert format_parts((12, 2, 2)) == "12,2,2"
    assert format_parts(()) == "()"
    assert parse_composition("7,2,2") == Composition((7, 2, 2))
    assert parse_composition("12,2,2") == Composition((12, 2, 2))
    with pytest.raises(ValueError):
        parse_composition("7,x")
    with pytest.raises(ValueError):
        parse_composition("7,0,2")


def test_composition_equality_hash_and_str():
    a, b = Composition((2, 3)), Composition((2, 3))
    assert a == b and hash(a) == hash(b)
    assert a != Composition((3, 2))
    assert str(a) == "23"
    assert a[0] == 2 and list(a) == [2, 3]
