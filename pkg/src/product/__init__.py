# graph product module
from product.graph import (
    GraphSpec,
    complete_graph,
    cycle_graph,
    edgeless_graph,
    path_graph,
)
from product.syntax import format_word, parse_word
from product.words import (
    Syllable,
    coset_representative,
    generators,
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

__all__ = [
    'GraphSpec',
    'Syllable',
    'complete_graph',
    'coset_representative',
    'cycle_graph',
    'edgeless_graph',
    'format_word',
    'generators',
    'inverse',
    'is_reduced',
    'link',
    'multiply',
    'normalize',
    'parse_word',
    'path_graph',
    'reduced_distance',
    'reduced_length',
    'set_debug_checks',
    'shuffle',
    'star',
    'subgroup_generators',
]
