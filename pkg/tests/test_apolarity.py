import pytest

from secpowers.apolarity import (conditions_count_planes_plus_fatpoint, dim_L_planes_fatpoint,
                                 expected_dim_V_fatpoint, face_slice, fatpoint_slice,
                                 sink_intersection_dim, span_count)
from secpowers.combinatorics import N_d, binom, hockey_stick
from secpowers.engine import compute_dimension, planes_fatpoint, veronese_fatpoint
from secpowers.toric import sink_hyperplane, standard_triangulation, union_planes


def test_condition_count_examples():
    assert conditions_count_planes_plus_fatpoint(1, 2, 2, 1) == 5
    assert conditions_count_planes_plus_fatpoint(1, 2, 2, 2) == 6
    with pytest.raises(ValueError):
        conditions_count_planes_plus_fatpoint(1, 2, 2, 3)


def test_count_never_exceeds_space():
    for n in (1, 2):
        for d in (1, 2, 3):
            for k in range(1, 5):
                N = N_d(n, d)
                assert conditions_count_planes_plus_fatpoint(n, d, k, k) <= binom(N + k, N)


@pytest.mark.parametrize("args,want", [((1, 2, 2, 1), 0), ((1, 2, 2, 2), -1), ((2, 2, 2, 2), 2)])
def test_dim_planes_examples(args, want):
    assert dim_L_planes_fatpoint(*args) == want
    assert compute_dimension(planes_fatpoint(*args)).computed_dim == want


@pytest.mark.parametrize("args,want", [((1, 2, 2, 2), -1), ((1, 2, 4, 3), 2)])
def test_expected_dim_V_fatpoint(args, want):
    assert expected_dim_V_fatpoint(*args) == want


def test_slice_dims_match_membership():
    for n in (1, 2):
        for d in (1, 2, 3):
            t = standard_triangulation(n, d)
            N = N_d(n, d)
            for k in range(1, 4):
                for face in union_planes(t):
                    s = face_slice(N, face, k)
                    assert len(s.members()) == s.dim == binom(n + k, n)
                for a in range(1, k + 1):
                    s = fatpoint_slice(N, a, k, sink_hyperplane(t))
                    assert len(s.members()) == s.dim == binom(N + a - 1, N)


def test_span_oracle_matches_closed_form():
    for n in (1, 2):
        for d in (1, 2, 3):
            t = standard_triangulation(n, d)
            N = N_d(n, d)
            j = sink_hyperplane(t)
            for k in range(1, 5):
                faces = [face_slice(N, f, k) for f in union_planes(t)]
                for a in range(1, k + 1):
                    got = span_count(faces + [fatpoint_slice(N, a, k, j)])
                    assert got == conditions_count_planes_plus_fatpoint(n, d, k, a, t)


def test_sink_intersection_is_hockey_stick():
    for n in (1, 2, 3):
        t = standard_triangulation(n, 2)
        N, j = N_d(n, 2), sink_hyperplane(t)
        sink = face_slice(N, union_planes(t)[0], 4)
        for a in range(1, 5):
            fp = fatpoint_slice(N, a, 4, j)
            overlap = set(sink.members()) & set(fp.members())
            assert len(overlap) == sink_intersection_dim(n, a) == hockey_stick(n, a)[1]


def test_veronese_bounded_by_planes():
    # semicontinuity along the toric degeneration
    for n in (1, 2):
        for d in (1, 2, 3):
            for k in range(1, 4):
                for a in range(1, k + 1):
                    v = compute_dimension(veronese_fatpoint(n, d, k, a)).computed_dim
                    pi = compute_dimension(planes_fatpoint(n, d, k, a)).computed_dim
                    assert expected_dim_V_fatpoint(n, d, k, a) <= v <= pi
