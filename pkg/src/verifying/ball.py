"""Cayley ball enumeration

The word metric uses the union of the vertex generating sets, so the ball of
radius r holds every element that is a product of at most r generators.
"""

from collections import deque
from dataclasses import dataclass

import pandas as pd

from kernel.functions import phi_gamma, phi_tilde
from product.syntax import format_word
from product.words import generators, multiply, reduced_length


@dataclass(frozen=True)
class Ball:
    """Enumerated ball of the Cayley graph

    Args:
        graph (GraphSpec): The graph of groups
        radius (int): Requested radius
        elements (tuple): NormalForms sorted by (word length, canonical text)
        lengths (tuple[int]): Word length of each element
        truncated (bool): True if the element cap stopped the search early
    """

    graph: object
    radius: int
    elements: tuple
    lengths: tuple
    truncated: bool = False

    def __len__(self):
        return len(self.elements)

    def spheres(self):
        """Elements grouped by word length

        Returns:
            dict[int, list]: {r: elements at distance exactly r}, empty spheres omitted
        """
        result = {}

        for g, r in zip(self.elements, self.lengths):
            result.setdefault(r, []).append(g)

        return result


def enumerate_ball(graph, radius, cap=300):
    """Breadth-first closure of {e} under right multiplication by generators

    Args:
        graph (GraphSpec): The graph of groups
        radius (int): Maximum word length, >= 0
        cap (int): Maximum number of elements, >= 1

    Returns:
        Ball: Deduplicated by canonical form; truncated=True if cap was hit
    """
    if radius < 0:
        raise ValueError(f'Error: Radius must be >= 0, got {radius}')
    if cap < 1:
        raise ValueError(f'Error: Cap must be >= 1, got {cap}')

    gens = generators(graph)

    seen = {(): 0}
    queue = deque([()])
    truncated = False

    while queue and not truncated:
        g = queue.popleft()
        r = seen[g]

        if r == radius:
            continue

        for s in gens:
            h = multiply(graph, g, s)

            if h in seen:
                continue

            if len(seen) >= cap:
                truncated = True
                break

            seen[h] = r + 1
            queue.append(h)

    order = sorted(seen, key=lambda g: (seen[g], format_word(graph, g)))

    return Ball(
        graph,
        radius,
        tuple(order),
        tuple(seen[g] for g in order),
        truncated,
    )


def ball_table(ball):
    """Ball as a DataFrame for display

    Returns:
        pd.DataFrame: columns ['word', 'length', 'l_r', 'phi_tilde', 'phi_gamma']
    """
    graph = ball.graph

    rows = [
        (
            format_word(graph, g),
            r,
            reduced_length(g),
            phi_tilde(graph, g),
            phi_gamma(graph, g),
        )
        for g, r in zip(ball.elements, ball.lengths)
    ]

    return pd.DataFrame(rows, columns=['word', 'length', 'l_r', 'phi_tilde', 'phi_gamma'])
