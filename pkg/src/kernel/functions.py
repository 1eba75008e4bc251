"""Glued CND functions on a graph product

    phi_tilde(g) = sum_i phi_{v_i}(g_i)      over a reduced form of g
    l_r(g)       = number of syllables
    phi_gamma    = l_r + phi_tilde

plus the Schoenberg transform exp(-t K) that turns CND kernel matrices into
positive definite ones.
"""

import dataclasses
import math

import numpy as np

from product.words import Syllable, is_reduced, normalize, reduced_length


def _reduced(graph, g):
    word = tuple(Syllable(*s) for s in g)

    if not is_reduced(graph, word):
        word = normalize(graph, word)

    return word


def phi_tilde(graph, g):
    """Sum of the vertex CND functions over the syllables of g

    Returns:
        float: phi_tilde(g)
    """
    word = _reduced(graph, g)

    return float(sum(graph.groups[s.vertex].phi_exact(s.element) for s in word))


def phi_gamma(graph, g):
    """phi_Gamma(g) = l_r(g) + phi_tilde(g), proper and CND on G(Gamma)"""
    word = _reduced(graph, g)

    return reduced_length(word) + phi_tilde(graph, word)


def length_only(graph, g):
    """l_r(g) as a float, so it can stand in any kernel slot"""
    return float(reduced_length(_reduced(graph, g)))


class GluedFunction:
    """A named CND function on G(Gamma), usable as fn(g)

    Args:
        graph (GraphSpec): The graph of groups
        mode (str): 'phi_tilde', 'length_only' (alias 'reduced_length') or
                    'phi_gamma'
    """

    MODES = {
        'phi_tilde': phi_tilde,
        'length_only': length_only,
        'reduced_length': length_only,
        'phi_gamma': phi_gamma,
    }

    def __init__(self, graph, mode='phi_gamma'):
        if mode not in self.MODES:
            raise ValueError(f'Error: Unknown function mode: {mode!r}')

        self.graph = graph
        self.mode = mode

    def __call__(self, g):
        return self.MODES[self.mode](self.graph, g)

    def __repr__(self):
        return f'GluedFunction({self.mode})'


# kernel functions offered to build_kernel_matrix
KERNEL_FUNCTIONS = ('phi_gamma', 'phi_tilde', 'reduced_length')


def haagerup_sequence(graph, g, n):
    """phi_n(g) = exp(-phi_Gamma(g) / n)

    Each phi_n is positive definite and vanishes at infinity; phi_n -> 1
    pointwise as n grows.
    """
    if n <= 0:
        raise ValueError(f'Error: n must be positive, got {n}')

    return math.exp(-phi_gamma(graph, g) / n)


def schoenberg_transform(K, t=1.0):
    """Entrywise exp(-t K)

    Args:
        K (KernelMatrix | np.ndarray): Symmetric kernel matrix
        t (float): Positive scale

    Returns:
        KernelMatrix | np.ndarray: exp(-t * K), a KernelMatrix over the same
            elements when K is one

    Raises:
        ValueError: If t <= 0
    """
    if not t > 0:
        raise ValueError(f'Error: Schoenberg scale t must be positive, got {t}')

    values = np.exp(-t * np.asarray(getattr(K, 'values', K), dtype=float))

    if hasattr(K, 'values'):
        return dataclasses.replace(K, values=values)

    return values
