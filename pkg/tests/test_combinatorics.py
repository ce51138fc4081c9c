import itertools

import pytest
from hypothesis import given, strategies as st

from oracles import all_exponents
from secpowers.combinatorics import (MultiIndex, N_d, N_dk, binom, dim_veronese_ideal,
                                     enumerate_monomials, exponent_matrix, expected,
                                     hockey_stick, monomial_index, num_monomials,
                                     quadric_double_points_dim, vdim_double_points,
                                     vdim_lambda_double_points, vdim_veronese_double_points,
                                     vdim_veronese_fatpoint)


@pytest.mark.parametrize("a,b,want", [(5, 2, 10), (4, 0, 1), (3, 5, 0), (3, -1, 0), (60, 30, 118264581564861424)])
def test_binom(a, b, want):
    assert binom(a, b) == want


@pytest.mark.parametrize("n,b,want", [(2, 3, 10), (1, 2, 3), (0, 7, 1)])
def test_num_monomials(n, b, want):
    assert num_monomials(n, b) == want


@pytest.mark.parametrize("n,b,want", [
    (1, 2, [(2, 0), (1, 1), (0, 2)]),
    (2, 1, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]),
    (1, 0, [(0, 0)]),
])
def test_enumerate_monomials_examples(n, b, want):
    assert [m.exponents for m in enumerate_monomials(n, b)] == want


def test_enumeration_lengths_and_uniqueness():
    for n in range(7):
        for b in range(13):
            mons = enumerate_monomials(n, b)
            assert len(mons) == num_monomials(n, b)
            assert len(set(mons)) == len(mons)


def test_enumeration_matches_brute_force():
    for n in range(5):
        for b in range(9):
            got = [m.exponents for m in enumerate_monomials(n, b)]
            assert got == all_exponents(n + 1, b)


def test_order_is_graded_and_total():
    mons = [m for b in range(4) for m in enumerate_monomials(2, b)]
    assert mons == sorted(mons)
    for a, b in itertools.combinations(mons, 2):
        assert (a < b) != (b < a)
        if a.degree != b.degree:
            assert (a < b) == (a.degree < b.degree)


@given(st.lists(st.integers(0, 9), min_size=1, max_size=6))
def test_multiindex_degree(exps):
    m = MultiIndex(tuple(exps))
    assert m.degree == sum(exps)
    assert len(m) == len(exps) and tuple(m) == tuple(exps)


def test_multiindex_rejects_negative():
    with pytest.raises(ValueError):
        MultiIndex((1, -1))


def test_exponent_matrix_and_index_agree():
    E = exponent_matrix(3, 4)
    idx = monomial_index(3, 4)
    assert not E.flags.writeable
    for i, row in enumerate(E):
        assert idx[tuple(int(x) for x in row)] == i


def test_N_d_examples():
    assert N_d(2, 3) == 9
    assert N_d(1, 2) == 2
    assert N_dk(1, 2, 2) == 5


@pytest.mark.parametrize("n,a,want", [(2, 3, (6, 6)), (1, 5, (5, 5)), (3, 2, (4, 4))])
def test_hockey_stick_examples(n, a, want):
    assert hockey_stick(n, a) == want


def test_hockey_stick_identity():
    for n in range(1, 7):
        for a in range(1, 11):
            lhs, rhs = hockey_stick(n, a)
            assert lhs == rhs


def test_dimension_counts():
    assert vdim_lambda_double_points(5, 3, 1, 2) == 39
    assert vdim_veronese_fatpoint(1, 2, 2, 2) == -1
    assert vdim_veronese_fatpoint(1, 2, 4, 3) == 2
    assert vdim_veronese_double_points(1, 2, 4, 1) == 2
    assert vdim_double_points(2, 4, 5) == -1
    assert dim_veronese_ideal(2, 2, 2) == 6
    assert expected(-7) == -1 and expected(4) == 4


def test_quadric_formula():
    assert quadric_double_points_dim(2, 2) == 0
    # cones over quadrics: the singular locus is the span of the h points
    for N in range(1, 7):
        for h in range(N + 2):
            assert quadric_double_points_dim(N, h) == binom(N - h + 2, 2) - 1
        assert quadric_double_points_dim(N, N + 2) == -1
