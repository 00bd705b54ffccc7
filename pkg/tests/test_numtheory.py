import pytest
from hypothesis import given
from hypothesis import strategies as st

from wordrep.errors import NoInverseError, NoUniqueSolutionError
from wordrep.numtheory import (
    additive_order,
    gcd_all,
    mod_inverse,
    solve_linear_congruence,
    unit_residues,
)


def test_gcd_all_examples():
    assert gcd_all([12, 2, 4, 6]) == 2
    assert gcd_all([7, 1]) == 1
    assert gcd_all([9]) == 9


def test_gcd_all_usage_errors():
    with pytest.raises(ValueError):
        gcd_all([])
    with pytest.raises(ValueError):
        gcd_all([4, 0])


def test_solve_linear_congruence_examples():
    assert solve_linear_congruence(3, 4, 10) == 8
    assert solve_linear_congruence(1, 5, 12) == 5
    with pytest.raises(NoUniqueSolutionError):
        solve_linear_congruence(2, 1, 10)


def test_solve_linear_congruence_exhaustive_scan():
    # cross-check against a literal residue scan
    for m in (7, 10, 12):
        for b in range(1, m):
            for a in range(m):
                scan = [x for x in range(m) if b * x % m == a % m]
                if len(scan) == 1:
                    assert solve_linear_congruence(b, a, m) == scan[0]


def test_negative_arguments_reduce_mod_m():
    assert solve_linear_congruence(-7, -6, 10) == solve_linear_congruence(3, 4, 10)
    assert additive_order(-2, 12) == additive_order(10, 12)


def test_additive_order_examples():
    assert additive_order(5, 10) == 2  # the half jump always has order 2
    assert additive_order(0, 8) == 1
    assert additive_order(4, 12) == 3


def test_additive_order_invariants_scan():
    for m in range(2, 201):
        for k in range(m):
            o = additive_order(k, m)
            assert m % o == 0
            assert k * o % m == 0
            assert all(k * j % m != 0 for j in range(1, o))


def test_unit_residues_examples():
    assert unit_residues(10) == [1, 3, 7, 9]
    assert unit_residues(2) == [1]
    assert unit_residues(12) == [1, 5, 7, 11]


def test_unit_residues_generate():
    for m in (5, 8, 12, 30):
        for g in unit_residues(m):
            assert len({g * k % m for k in range(m)}) == m


def test_mod_inverse_examples():
    assert mod_inverse(3, 10) == 7
    assert mod_inverse(1, 9) == 1
    assert mod_inverse(5, 12) == 5
    with pytest.raises(NoInverseError):
        mod_inverse(4, 10)


@given(st.integers(min_value=2, max_value=500), st.integers(min_value=1, max_value=499))
def test_congruence_and_inverse_roundtrip(m, b):
    from math import gcd

    if gcd(b, m) != 1:
        with pytest.raises(NoInverseError):
            mod_inverse(b, m)
        return
    inv = mod_inverse(b, m)
    assert b * inv % m == 1
    assert mod_inverse(inv, m) == b % m
    for a in (0, 1, m - 1):
        x = solve_linear_congruence(b, a, m)
        assert 0 <= x < m
        assert b * x % m == a % m
