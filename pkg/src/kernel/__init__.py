# kernel module
from kernel.embedding import (
    AbstractVector,
    CosetKey,
    embed,
    embedding_kernel,
    function_from_kernel,
    vec_inner,
)
from kernel.functions import (
    KERNEL_FUNCTIONS,
    GluedFunction,
    haagerup_sequence,
    length_only,
    phi_gamma,
    phi_tilde,
    schoenberg_transform,
)

__all__ = [
    'KERNEL_FUNCTIONS',
    'AbstractVector',
    'CosetKey',
    'GluedFunction',
    'embed',
    'embedding_kernel',
    'function_from_kernel',
    'haagerup_sequence',
    'length_only',
    'phi_gamma',
    'phi_tilde',
    'schoenberg_transform',
    'vec_inner',
]
