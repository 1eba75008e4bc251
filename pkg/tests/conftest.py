from pytest import fixture

from groups.vertex_group import CyclicGroup, FreeGroup, IntegerGroup
from product.graph import GraphSpec, complete_graph, edgeless_graph, path_graph

Z2 = CyclicGroup(2)
Z3 = CyclicGroup(3)
Z = IntegerGroup()
F2 = FreeGroup(2)


@fixture
def z2_edge():
    """Two Z/2 vertices joined by an edge: Z/2 x Z/2"""
    return GraphSpec((Z2, Z2), frozenset({(0, 1)}), 'edge')


@fixture
def z2_edgeless():
    """Infinite dihedral group Z/2 * Z/2"""
    return edgeless_graph([Z2, Z2], 'edgeless')


@fixture
def z_edgeless():
    return edgeless_graph([Z, Z], 'edgeless-Z')


@fixture
def z_complete():
    return complete_graph([Z, Z], 'complete-Z')


@fixture
def path3():
    return path_graph([Z2, F2, Z3], 'path-3')


@fixture
def k3():
    return complete_graph([Z2, Z2, Z2], 'complete-3')
