"""Seeded random elements for the property checks"""

import numpy as np

from product.words import multiply, shuffle, subgroup_generators


def make_rng(seed):
    return np.random.default_rng(seed)


def random_element(graph, rng, max_length=6):
    """Product of at most max_length random generators of G(Gamma)

    Returns:
        tuple[Syllable]: NormalForm with word length <= max_length
    """
    return random_subgroup_element(graph, range(graph.size), rng, max_length)


def random_subgroup_element(graph, vertices, rng, max_factors=3):
    """Random element of G(A), A a vertex subset, from <= max_factors generators"""
    gens = subgroup_generators(graph, vertices)

    g = ()
    for _ in range(int(rng.integers(0, max_factors + 1))):
        g = multiply(graph, g, gens[int(rng.integers(0, len(gens)))])

    return g


def random_shuffles(graph, word, rng, steps=8):
    """Apply up to `steps` random legal shuffles to a word

    Returns:
        tuple[Syllable]: A word equal to `word` in G(Gamma), same length
    """
    word = tuple(word)

    for _ in range(steps):
        legal = [
            i
            for i in range(len(word) - 1)
            if graph.commute(word[i].vertex, word[i + 1].vertex)
        ]
        if not legal:
            break

        word = shuffle(graph, word, legal[int(rng.integers(0, len(legal)))])

    return word
