import math

import numpy as np
import pytest
from conftest import F2, Z, Z2, Z3
from pytest import mark

from groups.vertex_group import IntegerGroup
from product.graph import GraphSpec, cycle_graph, path_graph
from verifying.ball import enumerate_ball
from verifying.checks import (
    check_cnd,
    check_coset_stability,
    check_degeneration,
    check_eigensolver,
    check_group_axioms,
    check_invariance,
    check_kernel_identity,
    check_length_bounded_growth,
    check_normal_form_oracle,
    check_pointwise_limit,
    check_properness,
    check_psd,
    check_restriction,
    check_schoenberg,
    check_shuffle_invariance,
    check_vanishing,
    check_vertex_gram,
    check_vertex_properness,
    properness_profile,
    vertex_sphere_minima,
)
from verifying.matrix import build_kernel_matrix

E1 = math.exp(-1)
SWAP = np.array([[0.0, 1.0], [1.0, 0.0]])


##################
# matrix checks  #
##################


@mark.parametrize('solver', ['jacobi', 'numpy'])
def test_psd_examples(solver):
    assert check_psd([[1.0, E1], [E1, 1.0]], solver=solver).passed
    assert not check_psd(SWAP, solver=solver).passed
    assert check_psd(np.eye(4), solver=solver).passed


def test_psd_reports_the_min_eigenvalue():
    report = check_psd(SWAP)

    assert report.metric == pytest.approx(-1.0)
    assert report.size == 2


def test_cnd_examples():
    assert check_cnd(SWAP).passed
    assert check_cnd(2 * SWAP).passed
    assert not check_cnd(-SWAP).passed


def test_schoenberg_examples():
    assert all(r.passed for r in check_schoenberg(SWAP, [1, 2]))
    assert all(r.passed for r in check_schoenberg(np.zeros((3, 3)), [0.5]))

    (report,) = check_schoenberg(-SWAP, [1])
    assert not report.passed
    assert report.metric == pytest.approx(1 - math.e)


def test_schoenberg_bad_input():
    with pytest.raises(ValueError):
        check_schoenberg(SWAP, [])
    with pytest.raises(ValueError):
        check_schoenberg(np.eye(2), [1])


def test_non_symmetric_matrix_is_rejected():
    with pytest.raises(ValueError):
        check_psd([[0.0, 1.0], [0.0, 0.0]])
    with pytest.raises(ValueError):
        check_cnd([[0.0, 1.0], [0.0, 0.0]])


@mark.parametrize('solver', ['jacobi', 'numpy'])
def test_eigensolver_check(solver):
    assert check_eigensolver(solver).passed


@mark.parametrize('fn', ['phi_gamma', 'phi_tilde', 'reduced_length'])
def test_kernel_matrices_are_cnd_on_a_square(fn):
    graph = cycle_graph([Z2, Z3, Z, Z2], 'square')
    M = build_kernel_matrix(graph, enumerate_ball(graph, 3, cap=120), fn)

    report = check_cnd(M)
    assert report.passed, report

    assert all(r.passed for r in check_schoenberg(M, [0.1, 1, 5]))


#######################
# group-level checks  #
#######################


def test_vertex_gram(path3):
    assert check_vertex_gram(path3, samples=20).passed


def test_normal_form_oracle_small(z2_edge, z2_edgeless):
    assert check_normal_form_oracle(z2_edge, 4).passed
    assert check_normal_form_oracle(z2_edgeless, 4).passed


def test_normal_form_oracle_needs_finite_groups(path3):
    with pytest.raises(ValueError):
        check_normal_form_oracle(path3, 2)


@mark.parametrize(
    'check',
    [
        check_shuffle_invariance,
        check_coset_stability,
        check_group_axioms,
        check_invariance,
        check_kernel_identity,
        check_restriction,
    ],
)
def test_random_property_checks(path3, check):
    report = check(path3, samples=40, seed=7)

    assert report.passed, report
    assert report.seed == 7


def test_degeneration_free_product(z2_edgeless):
    report = check_degeneration(z2_edgeless, enumerate_ball(z2_edgeless, 4))

    assert report.passed
    assert report.detail == 'free product'


def test_degeneration_direct_product(k3):
    assert check_degeneration(k3, enumerate_ball(k3, 3)).passed


def test_degeneration_single_vertex():
    graph = GraphSpec((Z,), frozenset(), 'single')
    report = check_degeneration(graph, enumerate_ball(graph, 4))

    assert report.passed
    assert report.detail == 'single vertex'


def test_degeneration_rejects_mixed_graphs(path3):
    with pytest.raises(ValueError):
        check_degeneration(path3, enumerate_ball(path3, 1))


##########################
# Haagerup-type checks   #
##########################


def test_pointwise_limit(path3):
    report = check_pointwise_limit(path3, enumerate_ball(path3, 2), [1, 2, 5, 10, 100])

    assert report.passed
    assert report.metric >= 1 - 5 / 100

    with pytest.raises(ValueError):
        check_pointwise_limit(path3, enumerate_ball(path3, 1), [5, 2])


def test_properness_profile(z2_edgeless):
    profile, truncated = properness_profile(z2_edgeless, 3)

    assert profile == [(1, 2.0, 2), (2, 4.0, 2), (3, 6.0, 2)]
    assert not truncated


def test_properness_profile_omits_empty_spheres(z2_edge):
    profile, _ = properness_profile(z2_edge, 5)

    assert [r for r, _, _ in profile] == [1, 2]


def test_properness_profile_on_infinite_vertex_groups(z_edgeless):
    profile, truncated = properness_profile(z_edgeless, 5, cap=1000)
    minima = [m for _, m, _ in profile]

    assert not truncated
    assert [r for r, _, _ in profile] == [1, 2, 3, 4, 5]
    assert all(a < b for a, b in zip(minima, minima[1:]))
    assert all(m >= r + 1 for r, m, _ in profile)


def test_properness_requires_the_linear_bound_on_infinite_vertex_groups(z_edgeless):
    report = check_properness(z_edgeless, 5, cap=1000)

    assert report.passed
    assert report.detail.endswith('min >= r + 1')
    assert report.metric == 6.0


def test_properness_and_vanishing(path3):
    ball = enumerate_ball(path3, 3)

    assert check_properness(path3, 3, ball=ball).passed
    assert check_vanishing(path3, ball).passed


def test_length_bounded_growth():
    graph = path_graph([Z2, Z2, Z], 'case-1')

    assert check_length_bounded_growth(graph, 2, n_max=30).passed

    with pytest.raises(ValueError):
        check_length_bounded_growth(graph, 0)


def test_vertex_sphere_minima():
    profile, mismatches = vertex_sphere_minima(F2, 3)

    assert profile == [(1, 1.0, 4), (2, 2.0, 12), (3, 3.0, 36)]
    assert mismatches == 0


def test_vertex_properness_on_infinite_vertex_groups():
    graph = path_graph([Z2, Z, F2, Z], 'mixed')

    report = check_vertex_properness(graph)

    assert report.passed
    assert report.metric == 0.0
    assert report.size == 1 + 2 * 6 + 1 + sum(4 * 3**k for k in range(6))
    assert 'Z: 1:1, 2:2' in report.detail


def test_vertex_properness_catches_a_bounded_phi():
    class BoundedIntegers(IntegerGroup):
        def phi_exact(self, a):
            return min(abs(a), 2)

    report = check_vertex_properness(GraphSpec((BoundedIntegers(),), frozenset(), 'bounded'))

    assert not report.passed
    assert report.metric == -4.0
