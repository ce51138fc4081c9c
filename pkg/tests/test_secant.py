import json

import numpy as np
import pytest

from secpowers.combinatorics import N_d, binom
from secpowers.engine import ah_exception
from secpowers.modlinalg import PrimeField
from secpowers.secant import (cross_check, expected_secant_dim, generic_rank_ceiling,
                              identifiability_bound, secant_dimension, tangent_space_rows)

F = PrimeField()


def test_tangent_rows_linear_square():
    rows = tangent_space_rows(1, 1, 2, [1, 0], F)
    assert rows.tolist() == [[1, 0, 0], [0, 1, 0]]


def test_tangent_rows_quadric_square():
    rows = tangent_space_rows(1, 2, 2, [1, 0, 0], F)
    assert rows.tolist() == [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0]]


def test_tangent_rows_cube_of_sum():
    # (x0 + x1)^2 * {x0, x1} for k = 3, d = 1
    rows = tangent_space_rows(1, 1, 3, [1, 1], PrimeField(101))
    assert rows.tolist() == [[1, 2, 1, 0], [0, 1, 2, 1]]


def test_tangent_row_count_independent_of_form():
    for seed in range(5):
        f = F.random_point(np.random.default_rng(seed), binom(2 + 2, 2))
        assert tangent_space_rows(2, 2, 3, f, F).shape == (6, binom(2 + 6, 2))
    with pytest.raises(ValueError):
        tangent_space_rows(1, 2, 2, [0, 0, 0], F)


@pytest.mark.parametrize("n,d,k,h,dim", [(1, 2, 2, 2, 4), (1, 1, 3, 2, 3), (1, 1, 2, 1, 1)])
def test_secant_examples(n, d, k, h, dim):
    r = secant_dimension(n, d, k, h)
    assert r.computed_secant_dim == dim == r.expected_secant_dim
    assert r.non_defective


def test_single_point_gives_dimension_of_variety():
    for n in (1, 2):
        for d in (1, 2, 3):
            for k in (1, 2, 3):
                assert secant_dimension(n, d, k, 1).computed_secant_dim == N_d(n, d)


def test_secant_growth_and_filling():
    for n in (1, 2):
        for d in (1, 2, 3):
            for k in (2, 3, 4):
                ambient = binom(n + d * k, n)
                top = -(-ambient // (N_d(n, d) + 1)) + 1
                dims = [secant_dimension(n, d, k, h).computed_secant_dim for h in range(1, top + 1)]
                steps = [b - a for a, b in zip(dims, dims[1:])]
                assert all(0 <= s <= N_d(n, d) + 1 for s in steps)
                assert dims[-1] == ambient - 1
                assert all(x <= expected_secant_dim(n, d, k, h + 1) for h, x in enumerate(dims))


def test_quadric_veronese_is_defective():
    # the square of a ternary form: Sec_2 of nu_2(P^2) is the cubic discriminant
    r = secant_dimension(2, 1, 2, 2)
    assert r.computed_secant_dim == 4 < r.expected_secant_dim == 5


@pytest.mark.parametrize("args", [(1, 2, 3, 1), (2, 2, 3, 1), (1, 2, 5, 2), (2, 2, 4, 1)])
def test_cross_check_agrees_below_the_bound(args):
    agree, sec, lin = cross_check(*args)
    assert agree and sec.cross_check is True
    assert sec.non_defective and lin.certified


def test_cross_check_disagrees_on_quadric_exceptions():
    # with d = 1 the linear system is empty, but nu_k(P^n) itself is defective
    for n, d, k, h in ((2, 1, 2, 2), (2, 1, 4, 5), (2, 2, 2, 2), (2, 3, 2, 3)):
        assert ah_exception(N_d(n, d), k, h)
        agree, sec, lin = cross_check(n, d, k, h)
        assert not agree and lin.certified and not sec.non_defective


def test_cross_check_disagrees_beyond_the_bound():
    # quartics through a conic singular at two points are C * L^2, one too many,
    # while Sec_2 of the fourth powers of binary quadrics is non-defective
    for seed in (0, 1, 2):
        agree, sec, lin = cross_check(1, 2, 4, 2, seed=seed)
        assert not agree
        assert (lin.computed_dim, lin.expected_dim) == (0, -1)
        assert sec.non_defective


def test_identifiability_bound_examples():
    assert identifiability_bound(1, 2, 5) == 1
    assert identifiability_bound(2, 2, 5) == 2
    assert identifiability_bound(2, 3, 3) == -1
    with pytest.raises(ValueError):
        identifiability_bound(1, 2, 2)


def test_generic_rank_ceiling():
    assert generic_rank_ceiling(1, 2, 2) == 2
    assert generic_rank_ceiling(2, 3, 4) == 10


def test_report_json():
    r = secant_dimension(1, 2, 2, 2, seed=4)
    d = json.loads(r.to_json())
    assert d["computed_secant_dim"] == 4 and d["cross_check"] is None
    assert r.to_json() == secant_dimension(1, 2, 2, 2, seed=4).to_json()
