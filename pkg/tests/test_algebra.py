import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import ring_bounds, truncated_polys
from oracles import partitions_by_compositions, pascal_mod2, solve_by_enumeration
from z2bordism.algebra import (
    F2Matrix,
    TruncatedPoly,
    binom_mod2,
    is_partition,
    partitions_of,
    partitions_upto,
    poly_inverse,
    poly_mul,
    poly_pow,
    solve_f2,
)

PASCAL = pascal_mod2(64)


# binomials


@pytest.mark.parametrize("n", [0, 1, 7, 64])
def test_binom_k_zero(n):
    assert binom_mod2(n, 0) == 1


@pytest.mark.parametrize(
    "n,k,expected",
    [(4, 2, PASCAL[4][2]), (5, 2, PASCAL[5][2]), (5, 4, PASCAL[5][4]), (3, 1, PASCAL[3][1])],
)
def test_binom_examples(n, k, expected):
    assert binom_mod2(n, k) == expected


def test_binom_matches_pascal_table():
    for n in range(65):
        for k in range(n + 1):
            assert binom_mod2(n, k) == PASCAL[n][k], (n, k)
        assert binom_mod2(n, n + 1) == 0


def test_binom_rejects_negative():
    with pytest.raises(ValueError):
        binom_mod2(-1, 0)


@given(st.integers(0, 12))
def test_binomial_row_is_power_of_one_plus_x(n):
    bounds = (n + 2,)
    x = TruncatedPoly.var(bounds, 0)
    one = TruncatedPoly.one(bounds)
    power = one
    for _ in range(n):
        power = poly_mul(power, one + x)
    expected = TruncatedPoly.from_monomials(bounds, [(k,) for k in range(n + 1) if binom_mod2(n, k)])
    assert power == expected


# partitions


def test_partitions_small():
    assert partitions_of(0) == [()]
    assert partitions_of(3) == [(3,), (2, 1), (1, 1, 1)]
    assert len(partitions_of(5)) == 7


@pytest.mark.parametrize("d", range(21))
def test_partition_counts_match_enumeration(d):
    ours = partitions_of(d)
    assert len(ours) == len(partitions_by_compositions(d))
    assert set(ours) == partitions_by_compositions(d)


@given(st.integers(0, 12), st.integers(0, 12))
def test_partitions_canonical(d, cap):
    parts = partitions_of(d, cap)
    assert all(is_partition(J) and sum(J) == d and all(j <= cap for j in J) for J in parts)
    assert parts == sorted(parts, reverse=True)
    assert len(set(parts)) == len(parts)


def test_partitions_upto_order():
    assert partitions_upto(2) == ((), (1,), (2,), (1, 1))
    assert partitions_upto(-1) == ()
    assert len(partitions_upto(12)) == 272


# truncated polynomials


def _poly(bounds, *monos):
    return TruncatedPoly.from_monomials(bounds, monos)


def test_square_in_char_two():
    one_a = _poly((3,), (0,), (1,))
    assert one_a * one_a == _poly((3,), (0,), (2,))


def test_cube_truncated():
    one_a = _poly((3,), (0,), (1,))
    assert poly_pow(one_a, 3) == _poly((3,), (0,), (1,), (2,))


def test_distinct_variables():
    b = (2, 2)
    p = _poly(b, (0, 0), (1, 0))
    q = _poly(b, (0, 0), (0, 1))
    assert p * q == _poly(b, (0, 0), (1, 0), (0, 1), (1, 1))


def test_inverse_examples():
    b = (4,)
    assert poly_inverse(TruncatedPoly.one(b)) == TruncatedPoly.one(b)
    inv = poly_inverse(_poly(b, (0,), (1,)))
    assert inv == _poly(b, (0,), (1,), (2,), (3,))
    assert inv * inv == _poly(b, (0,), (2,))
    assert _poly(b, (0,), (1,)) ** -2 == _poly(b, (0,), (2,))


def test_inverse_of_non_unit():
    with pytest.raises(ZeroDivisionError):
        poly_inverse(_poly((3,), (1,)))


def test_ring_mismatch():
    with pytest.raises(ValueError):
        TruncatedPoly.one((2,)) * TruncatedPoly.one((3,))


def test_monomial_bounds_enforced():
    with pytest.raises(ValueError):
        TruncatedPoly((2,), frozenset([(2,)]))


@given(ring_bounds.flatmap(lambda b: st.tuples(truncated_polys(b), truncated_polys(b), truncated_polys(b))))
def test_ring_axioms(triple):
    p, q, r = triple
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert (p + p).is_zero()


@given(ring_bounds.flatmap(truncated_polys))
def test_inverse_multiplies_back(p):
    one = TruncatedPoly.one(p.bounds)
    if not p.constant_term():
        p = p + one
    assert p * poly_inverse(p) == one


# linear solving


def test_solve_identity():
    A = F2Matrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    sol = solve_f2(A, [1, 0, 1])
    assert sol.consistent and sol.x == (1, 0, 1) and sol.kernel_dim == 0


def test_solve_underdetermined():
    A = F2Matrix.from_rows([[1, 1]])
    sol = solve_f2(A, [0])
    assert sol.x == (0, 0) and sol.kernel_dim == 1
    assert set(solve_by_enumeration([[1, 1]], [0])) == {(0, 0), (1, 1)}


def test_solve_inconsistent():
    sol = solve_f2(F2Matrix.from_rows([[1], [1]]), [0, 1])
    assert not sol.consistent and sol.x is None


def test_solve_dimension_check():
    with pytest.raises(ValueError):
        solve_f2(F2Matrix.from_rows([[1, 0]]), [0, 1])


small_systems = st.integers(1, 5).flatmap(
    lambda rows: st.integers(1, 5).flatmap(
        lambda cols: st.tuples(
            st.lists(st.lists(st.integers(0, 1), min_size=cols, max_size=cols), min_size=rows, max_size=rows),
            st.lists(st.integers(0, 1), min_size=rows, max_size=rows),
        )
    )
)


@given(small_systems)
def test_solve_against_enumeration(system):
    rows, b = system
    A = F2Matrix.from_rows(rows)
    sol = solve_f2(A, b)
    brute = solve_by_enumeration(rows, b)
    assert sol.consistent == bool(brute)
    if sol.consistent:
        assert A.apply(sol.x) == tuple(b)
        assert sol.x in brute
        assert len(brute) == 2 ** sol.kernel_dim
    for v in sol.kernel_basis:
        assert not any(A.apply(v))
    # free variables are zero
    if sol.consistent:
        free = [c for c in range(A.cols) if c not in sol.pivots]
        assert all(sol.x[c] == 0 for c in free)
