import itertools

from conftest import Z2, Z3
from pytest import mark

from product.graph import GraphSpec, complete_graph, edgeless_graph, path_graph
from verifying.checks import check_normal_form_oracle
from verifying.oracles import (
    free_product_normalize,
    reduced_forms,
    rewriting_closure,
    to_tuple,
    tuple_multiply,
)


def test_free_product_normalize():
    graph = edgeless_graph([Z3, Z3])

    assert free_product_normalize(graph, [(0, 1), (0, 2), (1, 1)]) == ((1, 1),)
    assert free_product_normalize(graph, [(0, 1), (1, 0), (0, 1)]) == ((0, 2),)
    assert free_product_normalize(graph, [(0, 1), (1, 1), (0, 1)]) == (
        (0, 1),
        (1, 1),
        (0, 1),
    )


def test_tuple_arithmetic():
    graph = complete_graph([Z2, Z3])

    assert to_tuple(graph, [(1, 2), (0, 1), (1, 2)]) == (1, 1)
    assert tuple_multiply(graph, (1, 2), (1, 2)) == (0, 1)


def test_rewriting_closure_contains_every_shuffle():
    graph = GraphSpec((Z2, Z2), frozenset({(0, 1)}))

    closure = rewriting_closure(graph, [(0, 1), (1, 1), (0, 1)])

    assert ((1, 1), (0, 1), (0, 1)) in closure
    assert ((1, 1),) in closure


def test_reduced_forms_of_commuting_pair():
    graph = GraphSpec((Z2, Z2), frozenset({(0, 1)}))

    assert reduced_forms(graph, [(0, 1), (1, 1)]) == frozenset(
        {((0, 1), (1, 1)), ((1, 1), (0, 1))}
    )


def test_reduced_forms_of_identity():
    graph = edgeless_graph([Z2, Z2])

    assert reduced_forms(graph, [(0, 1), (0, 1)]) == frozenset({()})


def _small_graphs():
    for groups in itertools.product([Z2, Z3], repeat=3):
        yield path_graph(groups)
        yield GraphSpec(groups, frozenset({(0, 2)}), 'one-edge')


@mark.parametrize('graph', list(_small_graphs()), ids=lambda g: g.label())
def test_normal_form_oracle_three_vertices(graph):
    assert check_normal_form_oracle(graph, 3).passed


@mark.slow
@mark.parametrize(
    'graph',
    [
        path_graph([Z2, Z2, Z2]),
        path_graph([Z3, Z2, Z3]),
        complete_graph([Z2, Z3, Z2]),
        edgeless_graph([Z2, Z2, Z3]),
    ],
    ids=lambda g: g.label(),
)
def test_normal_form_oracle_length_five(graph):
    assert check_normal_form_oracle(graph, 5).passed
