"""Kernel matrices over an enumerated element list

K[i, j] = fn(g_j^-1 g_i) for the elements g_1 ... g_n of a ball.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from kernel.functions import GluedFunction
from product.words import inverse, multiply


@dataclass(frozen=True)
class KernelMatrix:
    """Dense symmetric kernel matrix

    Args:
        elements (tuple): Element list the rows and columns refer to
        values (np.ndarray): K[i, j] = fn(g_j^-1 g_i)
        name (str): Function name, e.g. 'phi_gamma'
    """

    elements: tuple
    values: np.ndarray
    name: str = ''

    @property
    def size(self):
        return self.values.shape[0]


def build_kernel_matrices(graph, ball, names, workers=1):
    """Kernel matrices of several functions sharing one pass over pairs

    Only j >= i is evaluated; K[j, i] is taken as K[i, j], relying on
    fn(g) = fn(g^-1), which check_kernel_identity certifies separately.

    Args:
        graph (GraphSpec): The graph of groups
        ball (Ball): Non-empty element list
        names (list[str]): Function names accepted by GluedFunction
        workers (int): Thread pool size for row evaluation

    Returns:
        dict[str, KernelMatrix]: One matrix per name
    """
    elements = ball.elements if hasattr(ball, 'elements') else tuple(ball)

    if not elements:
        raise ValueError('Error: Cannot build a kernel matrix over no elements')

    n = len(elements)
    functions = [GluedFunction(graph, name) for name in names]
    inverses = [inverse(graph, g) for g in elements]

    def row(i):
        values = np.zeros((len(functions), n))

        for j in range(i, n):
            diff = multiply(graph, inverses[j], elements[i])
            for k, fn in enumerate(functions):
                values[k, j] = fn(diff)

        return i, values

    matrices = np.zeros((len(functions), n, n))

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(row, range(n)))
    else:
        rows = [row(i) for i in range(n)]

    for i, values in rows:
        matrices[:, i, i:] = values[:, i:]
        matrices[:, i:, i] = values[:, i:]

    return {
        name: KernelMatrix(tuple(elements), matrices[k], name)
        for k, name in enumerate(names)
    }


def build_kernel_matrix(graph, ball, fn='phi_gamma', workers=1):
    """Kernel matrix [fn(g_j^-1 g_i)] over the ball

    Args:
        fn (str): 'phi_gamma', 'phi_tilde' or 'reduced_length'

    Returns:
        KernelMatrix: Symmetric, zero diagonal since fn(e) = 0
    """
    return build_kernel_matrices(graph, ball, [fn], workers)[fn]


def centered(M):
    """P M P with the centering projector P = I - ones / n"""
    M = np.asarray(M, dtype=float)
    n = M.shape[0]

    P = np.eye(n) - np.full((n, n), 1.0 / n)
    C = P @ M @ P

    # the product is symmetric up to rounding
    return (C + C.T) / 2
