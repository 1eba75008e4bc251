# groups module
from groups.vertex_group import (
    GROUP_KINDS,
    CyclicGroup,
    FreeGroup,
    IntegerGroup,
    VertexGroup,
    make_group,
)

__all__ = [
    'GROUP_KINDS',
    'CyclicGroup',
    'FreeGroup',
    'IntegerGroup',
    'VertexGroup',
    'make_group',
]
