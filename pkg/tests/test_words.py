import itertools
import threading
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest
from conftest import Z, Z2, Z3
from pytest import mark

from errors import DomainError, NotCommutingError
from product.graph import GraphSpec, complete_graph, path_graph
from product.words import (
    Syllable,
    coset_representative,
    inverse,
    is_reduced,
    link,
    multiply,
    normalize,
    reduced_distance,
    reduced_length,
    set_debug_checks,
    shuffle,
    star,
    subgroup_generators,
)
from verifying.sampling import make_rng, random_element, random_shuffles

S = Syllable


def test_star(path3, z2_edgeless, k3):
    assert star(path3, 1) == {0, 1, 2}
    assert star(path3, 0) == {0, 1}
    assert star(z2_edgeless, 0) == {0}
    assert star(k3, 2) == {0, 1, 2}

    with pytest.raises(DomainError):
        star(path3, 3)


def test_link(path3, z2_edgeless):
    assert link(path3, 1) == {0, 2}
    assert link(path3, 2) == {1}
    assert link(z2_edgeless, 0) == set()


def test_shuffle(z2_edge, z2_edgeless, k3):
    assert shuffle(z2_edge, [S(0, 1), S(1, 1)], 0) == (S(1, 1), S(0, 1))
    assert shuffle(k3, [S(0, 1), S(1, 1), S(2, 1)], 1) == (S(0, 1), S(2, 1), S(1, 1))

    with pytest.raises(NotCommutingError, match='not commuting'):
        shuffle(z2_edgeless, [S(0, 1), S(1, 1)], 0)

    with pytest.raises(IndexError):
        shuffle(z2_edge, [S(0, 1), S(1, 1)], 1)


def test_normalize_examples(z2_edge, z2_edgeless):
    aba = [S(0, 1), S(1, 1), S(0, 1)]

    assert normalize(z2_edge, aba) == (S(1, 1),)
    assert normalize(z2_edgeless, aba) == tuple(aba)
    assert normalize(z2_edge, []) == ()


def test_normalize_drops_and_merges(z_edgeless):
    assert normalize(z_edgeless, [S(0, 0), S(1, 4), S(1, -4), S(0, 2)]) == (S(0, 2),)
    assert normalize(z_edgeless, [S(0, 2), S(0, 3)]) == (S(0, 5),)


def test_normalize_restarts_after_cancellation():
    # 1 commutes with 0 and 2, 0 and 2 do not commute: 0 2 | 1 | 2^-1 1^-1 0
    graph = GraphSpec((Z, Z, Z), frozenset({(0, 1), (1, 2)}), 'star')

    word = [S(0, 1), S(2, 1), S(1, 1), S(2, -1), S(1, -1), S(0, 1)]

    assert normalize(graph, word) == (S(0, 2),)


def test_canonical_order_is_global():
    # vertex 1 commutes with both others, 0 and 2 do not commute
    graph = path_graph([Z2, Z2, Z2])

    assert normalize(graph, [S(2, 1), S(0, 1), S(1, 1)]) == (S(1, 1), S(2, 1), S(0, 1))
    assert normalize(graph, [S(1, 1), S(2, 1), S(0, 1)]) == (S(1, 1), S(2, 1), S(0, 1))


def test_normalize_rejects_foreign_elements(z2_edge):
    with pytest.raises(DomainError):
        normalize(z2_edge, [S(0, 2)])
    with pytest.raises(DomainError):
        normalize(z2_edge, [S(2, 1)])


def test_multiply_examples(z_complete, z_edgeless):
    Z2_only = GraphSpec((Z2,), frozenset(), 'single')

    assert multiply(Z2_only, [S(0, 1)], [S(0, 1)]) == ()
    assert multiply(z_complete, [S(0, 3)], [S(1, -2)]) == (S(0, 3), S(1, -2))
    assert multiply(z_complete, [S(1, -2)], [S(0, 3)]) == (S(0, 3), S(1, -2))
    assert multiply(z_edgeless, [S(0, 1)], [S(1, 2)]) == (S(0, 1), S(1, 2))


def test_inverse_examples(z_edgeless, z2_edgeless):
    assert inverse(z_edgeless, ()) == ()
    assert inverse(z_edgeless, (S(0, 3),)) == (S(0, -3),)
    assert inverse(z2_edgeless, (S(0, 1), S(1, 1))) == (S(1, 1), S(0, 1))


def test_reduced_length(z2_edgeless, z_complete):
    assert reduced_length(()) == 0
    assert reduced_length(normalize(z2_edgeless, [S(0, 1), S(1, 1), S(0, 1)])) == 3
    assert reduced_length(normalize(z_complete, [S(0, 3), S(1, -2)])) == 2


def test_reduced_distance(path3):
    rng = make_rng(1)

    for _ in range(30):
        g, h = random_element(path3, rng), random_element(path3, rng)

        assert reduced_distance(path3, g, ()) == reduced_length(g)
        assert reduced_distance(path3, g, h) == reduced_distance(path3, h, g)


def test_is_reduced(z2_edge, z2_edgeless):
    aba = [S(0, 1), S(1, 1), S(0, 1)]

    assert is_reduced(z2_edgeless, aba)
    assert not is_reduced(z2_edge, aba)
    assert not is_reduced(z2_edge, [S(0, 0)])


def test_coset_representative_examples(z2_edge, path3):
    assert coset_representative(z2_edge, (S(0, 1), S(1, 1)), 0) == ()
    assert coset_representative(path3, (S(1, (1, 2)),), 1) == ()

    g = normalize(path3, [S(2, 1), S(0, 1)])
    assert coset_representative(path3, g, 0) == (S(2, 1),)


def test_coset_representative_is_stable(path3):
    rng = make_rng(3)

    for _ in range(50):
        g = random_element(path3, rng)
        for v in range(path3.size):
            rep = coset_representative(path3, g, v)
            for k in subgroup_generators(path3, star(path3, v)):
                assert coset_representative(path3, multiply(path3, g, k), v) == rep


def test_debug_checks_pass_on_valid_input(path3):
    set_debug_checks(True)
    try:
        g = normalize(path3, [S(2, 1), S(0, 1), S(1, (2,))])
        coset_representative(path3, g, 0)
    finally:
        set_debug_checks(False)


def test_debug_checks_run_for_every_call_across_threads(path3, monkeypatch):
    import product.words as words

    calls = []
    lock = threading.Lock()
    verify = words._verify_coset_representative

    def counting(graph, rep, v):
        with lock:
            calls.append(v)
        verify(graph, rep, v)

    monkeypatch.setattr(words, '_verify_coset_representative', counting)

    rng = make_rng(11)
    pairs = [(random_element(path3, rng), v) for _ in range(100) for v in range(3)]

    set_debug_checks(True)
    try:
        with ThreadPoolExecutor(max_workers=8) as pool:
            list(pool.map(lambda pair: coset_representative(path3, *pair), pairs))
    finally:
        set_debug_checks(False)

    assert len(calls) == len(pairs)


@mark.parametrize('seed', [0, 1, 2])
def test_group_axioms_on_random_elements(path3, seed):
    rng = make_rng(seed)

    for _ in range(40):
        f, g, h = (random_element(path3, rng) for _ in range(3))

        assert multiply(path3, multiply(path3, f, g), h) == multiply(
            path3, f, multiply(path3, g, h)
        )
        assert multiply(path3, g, inverse(path3, g)) == ()
        assert normalize(path3, normalize(path3, g)) == normalize(path3, g)


def test_shuffles_keep_the_normal_form(path3):
    rng = make_rng(5)

    for _ in range(50):
        g = random_element(path3, rng)
        w = random_shuffles(path3, g, rng)

        assert len(w) == len(g)
        assert is_reduced(path3, w)
        assert normalize(path3, w) == g


def test_complete_graph_sorts_by_vertex():
    graph = complete_graph([Z3, Z3, Z3])

    for word in itertools.product([S(2, 1), S(0, 2), S(1, 1)], repeat=3):
        g = normalize(graph, word)
        vertices = [s.vertex for s in g]
        assert vertices == sorted(vertices)


def test_rng_is_deterministic(path3):
    a = [random_element(path3, np.random.default_rng(9)) for _ in range(3)]
    b = [random_element(path3, np.random.default_rng(9)) for _ in range(3)]

    assert a == b
