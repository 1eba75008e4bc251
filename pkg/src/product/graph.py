"""Graph of groups module

A finite simple graph whose vertices carry vertex groups. Vertex ids are
0..|V|-1 and also give the total order used for canonical forms. The
commutation graph itself is a networkx Graph.
"""

from dataclasses import dataclass, field

import networkx as nx

from errors import DomainError


@dataclass(frozen=True)
class GraphSpec:
    """Finite simple graph with a vertex group on every vertex

    Args:
        groups (tuple[VertexGroup]): groups[v] is the group of vertex v
        edges (frozenset[tuple[int, int]]): Unordered edges stored as (min, max)
        name (str): Optional display name
    """

    groups: tuple
    edges: frozenset = frozenset()
    name: str = ''
    _graph: nx.Graph = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.groups)

        normalized = set()
        for edge in self.edges:
            v, w = tuple(edge)

            for u in (v, w):
                if not isinstance(u, int) or not 0 <= u < n:
                    raise DomainError(f'Error: Edge endpoint {u!r} is not a vertex id')

            if v == w:
                raise DomainError(f'Error: Loop edge [{v}, {w}]')

            normalized.add((min(v, w), max(v, w)))

        G = nx.empty_graph(n)
        G.add_edges_from(normalized)
        nx.freeze(G)

        object.__setattr__(self, 'groups', tuple(self.groups))
        object.__setattr__(self, 'edges', frozenset(normalized))
        object.__setattr__(self, '_graph', G)

    @property
    def graph(self):
        """The commutation graph (frozen networkx Graph)"""
        return self._graph

    @property
    def size(self):
        return len(self.groups)

    def check_vertex(self, v):
        if not isinstance(v, int) or not 0 <= v < self.size:
            raise DomainError(f'Error: Invalid vertex id {v!r}')

    def group(self, v):
        self.check_vertex(v)

        return self.groups[v]

    def link(self, v):
        """lk(v): neighbours of v"""
        self.check_vertex(v)

        return set(self._graph[v])

    def star(self, v):
        """st(v) = lk(v) | {v}"""
        return self.link(v) | {v}

    def commute(self, v, w):
        """True if G_v and G_w commute, i.e. v and w are joined by an edge"""
        return self._graph.has_edge(v, w)

    def is_edgeless(self):
        return nx.is_empty(self._graph)

    def is_complete(self):
        n = self.size

        return self._graph.number_of_edges() == n * (n - 1) // 2

    def label(self):
        groups = ', '.join(g.label() for g in self.groups)
        edges = ' '.join(f'{v}-{w}' for v, w in sorted(self.edges)) or 'no edges'

        return f'{self.name or "graph"} [{groups}] ({edges})'


#################
# named graphs  #
#################


def _from_nx(groups, G, name):
    return GraphSpec(tuple(groups), frozenset(G.edges), name)


def edgeless_graph(groups, name='edgeless'):
    return _from_nx(groups, nx.empty_graph(len(groups)), name)


def complete_graph(groups, name='complete'):
    return _from_nx(groups, nx.complete_graph(len(groups)), name)


def path_graph(groups, name='path'):
    return _from_nx(groups, nx.path_graph(len(groups)), name)


def cycle_graph(groups, name='cycle'):
    return _from_nx(groups, nx.cycle_graph(len(groups)), name)
