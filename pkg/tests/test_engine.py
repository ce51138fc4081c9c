import json

import pytest

from secpowers.combinatorics import N_d, binom, quadric_double_points_dim
from secpowers.conditions import FatPoint, LinearSubspace, VeroneseImage
from secpowers.engine import (FormulaUndefined, LinearSystemSpec, ResourceLimitError, Verdict,
                              ah_exception, certify_main_theorem, compute_dimension,
                              expected_dimension, lambda_double_points, main_bound,
                              plain_double_points, planes_fatpoint, veronese_double_points,
                              veronese_fatpoint)
from secpowers.modlinalg import PrimeField

REPORT_KEYS = ["label", "N", "k", "components", "computed_dim", "expected_dim", "virtual_dim",
               "verdict", "seed", "prime", "trials"]


def test_five_double_points_on_quartics():
    r = compute_dimension(plain_double_points(2, 4, 5))
    assert (r.computed_dim, r.virtual_dim, r.expected_dim) == (0, -1, -1)
    assert r.verdict is Verdict.CLOSED_FORM


def test_two_double_points_on_plane_conics():
    r = compute_dimension(plain_double_points(2, 2, 2))
    assert r.computed_dim == 0 == quadric_double_points_dim(2, 2)
    assert r.verdict is Verdict.CLOSED_FORM


def test_veronese_double_point_example():
    r = compute_dimension(veronese_double_points(1, 2, 4, 1))
    assert r.computed_dim == r.expected_dim == 2
    assert r.certified


def test_expected_dimension_examples():
    assert expected_dimension(lambda_double_points(5, 3, 1, 2)) == (39, 39)
    assert expected_dimension(veronese_fatpoint(1, 2, 2, 2)) == (-1, -1)
    assert expected_dimension(veronese_double_points(1, 2, 4, 1)) == (2, 2)


def test_formula_undefined():
    with pytest.raises(FormulaUndefined):
        expected_dimension(veronese_fatpoint(1, 2, 2, 3))
    spec = LinearSystemSpec(2, 3, (VeroneseImage(1, 2), FatPoint(3)))
    r = compute_dimension(spec)
    assert r.verdict is Verdict.UNDEFINED and r.expected_dim is None


def test_spec_validation():
    with pytest.raises(ValueError):
        LinearSystemSpec(3, 2, (VeroneseImage(1, 2),))
    with pytest.raises(ValueError):
        LinearSystemSpec(3, 2, (LinearSubspace(4),))


@pytest.mark.parametrize("n,d,k,dims", [
    (1, 2, 3, [2]),
    (1, 2, 5, [9, 6, 3]),
    (2, 2, 4, [80, 74]),
])
def test_certify_main_theorem_examples(n, d, k, dims):
    reports = certify_main_theorem(n, d, k)
    assert [r.computed_dim for r in reports] == dims
    assert all(r.verdict is Verdict.CERTIFIED for r in reports)


def test_main_bound():
    assert main_bound(1, 2, 5) == 2
    assert main_bound(2, 2, 4) == 1
    with pytest.raises(ValueError):
        main_bound(1, 2, 2)


def test_computed_never_below_virtual_on_any_seed():
    for seed in range(5):
        for n, d in ((1, 2), (1, 3), (2, 2)):
            for k in (2, 3, 4):
                for h in range(4):
                    r = compute_dimension(veronese_double_points(n, d, k, h), seed=seed, trials=1)
                    assert r.computed_dim >= r.expected_dim >= r.virtual_dim


def test_monotone_in_h():
    N = 4
    for k in (2, 3, 4):
        dims = [compute_dimension(plain_double_points(N, k, h)).computed_dim for h in range(10)]
        steps = [a - b for a, b in zip(dims, dims[1:])]
        assert all(0 <= s <= N + 1 for s in steps)


def test_lambda_with_double_points_is_expected_below_bound():
    for N in range(2, 7):
        for n in range(N):
            for k in range(2, 6):
                top = binom(N + k - 1, N) // (N + 1)
                for h in range(top + 1):
                    if ah_exception(N, k - 1, h):
                        continue
                    spec = lambda_double_points(N, k, n, h)
                    if spec.columns > 500:
                        continue
                    r = compute_dimension(spec)
                    assert r.certified, (N, n, k, h, r.computed_dim, r.expected_dim)


def test_planes_and_veronese_fatpoint():
    assert compute_dimension(planes_fatpoint(2, 2, 2, 2)).computed_dim == 2
    assert compute_dimension(planes_fatpoint(1, 2, 2, 1)).computed_dim == 0
    assert compute_dimension(veronese_fatpoint(1, 2, 4, 3)).computed_dim == 2


def test_size_cap_and_prime_guard():
    with pytest.raises(ResourceLimitError):
        compute_dimension(veronese_double_points(2, 3, 4, 1), size_cap=100)
    with pytest.raises(ValueError):
        compute_dimension(veronese_double_points(1, 2, 4, 1), field=PrimeField(7))


def test_report_json_schema_and_determinism():
    r1 = compute_dimension(veronese_double_points(1, 2, 4, 2), seed=9)
    r2 = compute_dimension(veronese_double_points(1, 2, 4, 2), seed=9)
    assert r1.to_json() == r2.to_json()
    assert list(json.loads(r1.to_json())) == REPORT_KEYS


def test_small_prime_still_sound():
    # tiny primes can only lose rank, never certify a wrong value
    for seed in range(20):
        r = compute_dimension(veronese_double_points(1, 2, 4, 1), seed=seed, trials=1,
                              field=PrimeField(11))
        assert r.computed_dim >= 2


def test_random_and_coordinate_lambda_agree():
    for N, n, k, h in ((4, 1, 3, 2), (5, 2, 3, 3), (3, 1, 4, 2)):
        a = compute_dimension(lambda_double_points(N, k, n, h))
        b = compute_dimension(lambda_double_points(N, k, n, h, "random"), seed=3)
        assert a.computed_dim == b.computed_dim
