"""Hilbert-space embedding R of a graph product

H is the orthogonal sum of summands H_t, one per coset t = g G(st(v)),
each a copy of H_v. For a reduced word g = g_1 ... g_m,

    R(g) = sum_i R_{v_i}(g_i) placed in summand  g_1 ... g_{i-1} G(st(v_i))

A summand is keyed by CosetKey(canonical coset representative, vertex), and
R(g) is stored as the finitely supported map CosetKey -> vertex element.
Vectors are compared and paired only through vertex inner products.
"""

from typing import NamedTuple

from errors import ConsistencyError, DomainError
from product.words import Syllable, coset_representative, is_reduced, normalize


class CosetKey(NamedTuple):
    prefix: tuple
    vertex: int


class AbstractVector:
    """Finitely supported CosetKey -> element map representing R(g)

    Args:
        graph (GraphSpec): Graph the keys belong to
        entries (dict[CosetKey, Any]): Non-identity element per summand
    """

    def __init__(self, graph, entries=None):
        self.graph = graph
        self.entries = dict(entries or {})

        for key, a in self.entries.items():
            if graph.groups[key.vertex].is_identity(a):
                raise ConsistencyError(f'Error: Identity entry stored at {key}')

    def __eq__(self, other):
        if not isinstance(other, AbstractVector):
            return NotImplemented

        return self.graph == other.graph and self.entries == other.entries

    def __len__(self):
        return len(self.entries)

    def __contains__(self, key):
        return key in self.entries

    def __getitem__(self, key):
        return self.entries[key]

    def keys(self):
        return self.entries.keys()

    def __repr__(self):
        return f'AbstractVector({self.entries!r})'


def embed(graph, g):
    """R(g) as an AbstractVector

    Any reduced word of g gives the same vector; an unreduced word is
    normalized first.

    Args:
        graph (GraphSpec): The graph of groups
        g (tuple[Syllable]): Element of G(Gamma)

    Returns:
        AbstractVector: Empty for the identity

    Raises:
        ConsistencyError: If two syllables land on one CosetKey
    """
    word = tuple(Syllable(*s) for s in g)

    if not is_reduced(graph, word):
        word = normalize(graph, word)

    entries = {}

    for i, syllable in enumerate(word):
        key = CosetKey(
            coset_representative(graph, word[:i], syllable.vertex), syllable.vertex
        )

        if key in entries:
            raise ConsistencyError(
                f'Error: Syllables of one reduced word collide on summand {key}'
            )

        entries[key] = syllable.element

    return AbstractVector(graph, entries)


def vec_inner(x, y):
    """<x, y> in H: summands are orthogonal, each pairs by its vertex inner

    Raises:
        DomainError: If x and y come from different graphs
    """
    if x.graph != y.graph:
        raise DomainError('Error: Vectors belong to different graph products')

    total = 0.0

    for key in x.keys() & y.keys():
        total += x.graph.groups[key.vertex].inner(x[key], y[key])

    return total


def embedding_kernel(graph, g, h):
    """k(g, h) = ||R(g) - R(h)||^2"""
    x = embed(graph, g)
    y = embed(graph, h)

    return vec_inner(x, x) - 2 * vec_inner(x, y) + vec_inner(y, y)


def function_from_kernel(kernel, g, identity=()):
    """phi_k(g) = k(g, e) for a G-invariant kernel k

    Args:
        kernel (Callable): k(g, h)
        g: Element
        identity: Identity element, () for graph products
    """
    return kernel(g, identity)
