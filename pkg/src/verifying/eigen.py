"""Symmetric eigensolvers

jacobi_eigenvalues() is a cyclic Jacobi method in round-robin (tournament)
ordering: each round rotates n/2 disjoint index pairs at once. The matrix is
kept permuted so that a round's pairs are the rows (and columns) i and k + i,
which turns every rotation into arithmetic on contiguous blocks. A sweep
visits every pair exactly once.
"""

from functools import lru_cache

import numpy as np

SOLVERS = ('jacobi', 'numpy')

# pairs this far below the convergence threshold are not rotated
SKIP_FACTOR = 1e-3


def is_symmetric(M, rel_tol=1e-12):
    M = np.asarray(M, dtype=float)

    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        return False

    scale = 1.0 + (np.max(np.abs(M)) if M.size else 0.0)

    return bool(np.all(np.abs(M - M.T) <= rel_tol * scale))


@lru_cache(maxsize=16)
def round_robin_layouts(n):
    """Index layouts of the rounds of one round-robin sweep over n indices

    In round r the pairs are (layouts[r][i], layouts[r][k + i]) for i < k,
    the remaining index (odd n) comes last. moves[r] reorders a matrix laid
    out for round r - 1 (cyclically) into the layout of round r.

    Returns:
        tuple: (k, layouts, moves), the arrays are read-only
    """
    # one dummy player when n is odd; its pairs are skipped
    m = n + n % 2
    players = list(range(m))

    layouts = []
    for _ in range(m - 1):
        pairs = sorted(
            (min(a, b), max(a, b))
            for a, b in ((players[i], players[m - 1 - i]) for i in range(m // 2))
            if a < n and b < n
        )
        paired = {v for pair in pairs for v in pair}
        order = [p for p, _ in pairs] + [q for _, q in pairs]
        order += [v for v in range(n) if v not in paired]
        layouts.append(np.array(order))

        # rotate every player but the first
        players = [players[0], players[-1]] + players[1:-1]

    moves = []
    for r, order in enumerate(layouts):
        position = np.empty(n, dtype=int)
        position[layouts[r - 1]] = np.arange(n)
        moves.append(position[order])

    for array in layouts + moves:
        array.flags.writeable = False

    return n // 2, tuple(layouts), tuple(moves)


def _off_diagonal_max(A):
    n = A.shape[0]

    # strided view of the off-diagonal entries of a contiguous square matrix
    return np.max(np.abs(A.ravel()[1:].reshape(n - 1, n + 1)[:, :-1]))


def _rotations(app, aqq, apq, floor):
    """Cosines and sines that zero each apq, None if nothing needs rotating"""
    active = np.abs(apq) > floor
    if not np.any(active):
        return None

    c = np.ones(len(apq))
    s = np.zeros(len(apq))

    theta = (aqq[active] - app[active]) / (2 * apq[active])
    t = np.copysign(1.0, theta) / (np.abs(theta) + np.hypot(theta, 1.0))

    c[active] = 1 / np.hypot(t, 1.0)
    s[active] = t * c[active]

    return c, s


def jacobi_eigenvalues(M, rel_tol=1e-12, max_sweeps=60):
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations

    Converged when every off-diagonal magnitude is below
    rel_tol * ||M||_F.

    Args:
        M (np.ndarray): Symmetric n x n matrix
        rel_tol (float): Relative off-diagonal threshold
        max_sweeps (int): Sweep limit

    Returns:
        np.ndarray: Eigenvalues in ascending order

    Raises:
        ValueError: If M is not square
        RuntimeError: If the sweep limit is reached
    """
    A = np.array(M, dtype=float, copy=True)

    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f'Error: Matrix must be square, got shape {A.shape}')

    n = A.shape[0]

    if n <= 1:
        return np.sort(np.diag(A))

    fro = np.linalg.norm(A)
    if fro == 0:
        return np.zeros(n)

    threshold = rel_tol * fro

    k, layouts, moves = round_robin_layouts(n)
    P, Q = slice(0, k), slice(k, 2 * k)

    B = A[np.ix_(layouts[-1], layouts[-1])]

    for _ in range(max_sweeps):
        if _off_diagonal_max(B) < threshold:
            return np.sort(np.diag(B))

        for move in moves:
            B = B[np.ix_(move, move)]

            diagonal = np.diagonal(B)
            rotation = _rotations(
                diagonal[P], diagonal[Q], np.diagonal(B[P, Q]), threshold * SKIP_FACTOR
            )
            if rotation is None:
                continue

            c, s = rotation

            # B <- J^T B J, rows first then columns
            row_p = B[P].copy()
            row_q = B[Q].copy()
            B[P] = c[:, None] * row_p - s[:, None] * row_q
            B[Q] = s[:, None] * row_p + c[:, None] * row_q

            col_p = B[:, P].copy()
            col_q = B[:, Q].copy()
            B[:, P] = col_p * c - col_q * s
            B[:, Q] = col_p * s + col_q * c

    raise RuntimeError(f'Error: Jacobi did not converge in {max_sweeps} sweeps')


def eigenvalues(M, solver='jacobi'):
    """Ascending eigenvalues of a symmetric matrix

    Args:
        M (np.ndarray): Symmetric matrix
        solver (str): 'jacobi' (cyclic Jacobi) or 'numpy' (LAPACK eigvalsh)
    """
    if solver == 'jacobi':
        return jacobi_eigenvalues(M)
    if solver == 'numpy':
        return np.linalg.eigvalsh(np.asarray(M, dtype=float))

    raise ValueError(f'Error: Unknown eigensolver: {solver!r}')
