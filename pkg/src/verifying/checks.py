"""Certification checks

Every check returns a CertReport (check_schoenberg returns a list). Matrix
checks use relative tolerances scaled by (1 + max |M_ij|). Checks on
asymptotic statements (properness, pointwise limit, vanishing at infinity)
only test the enumerated range: a pass means "not falsified", not "proved".
"""

import itertools
import math
import time

import numpy as np

from kernel.embedding import embed, embedding_kernel
from kernel.functions import phi_gamma, phi_tilde, schoenberg_transform
from product.words import (
    Syllable,
    coset_representative,
    generators,
    inverse,
    is_reduced,
    multiply,
    normalize,
    reduced_length,
)
from verifying.ball import enumerate_ball
from verifying.eigen import eigenvalues, is_symmetric
from verifying.matrix import centered
from verifying.oracles import (
    free_product_normalize,
    reduced_forms,
    to_tuple,
    tuple_multiply,
)
from verifying.report import CertReport
from verifying.sampling import (
    make_rng,
    random_element,
    random_shuffles,
    random_subgroup_element,
)

KERNEL_TOL = 1e-10


def _elapsed_ms(start):
    return (time.perf_counter() - start) * 1000


def _values(M):
    return np.asarray(getattr(M, 'values', M), dtype=float)


def _scale(M):
    return 1.0 + (float(np.max(np.abs(M))) if M.size else 0.0)


def _require_symmetric(M):
    if not is_symmetric(M):
        raise ValueError('Error: Matrix is not symmetric')


##################
# matrix checks  #
##################


def check_psd(M, tol=1e-8, solver='jacobi', name='psd', instance=''):
    """Positive semidefiniteness: min eigenvalue >= -tol * (1 + max |M_ij|)

    Args:
        M (np.ndarray | KernelMatrix): Symmetric matrix
        tol (float): Relative tolerance
        solver (str): Eigensolver name

    Raises:
        ValueError: If M is not symmetric
    """
    start = time.perf_counter()
    M = _values(M)

    _require_symmetric(M)

    bound = -tol * _scale(M)
    lowest = float(eigenvalues(M, solver)[0]) if M.size else 0.0

    return CertReport(
        name,
        instance,
        M.shape[0],
        lowest,
        tol,
        lowest >= bound,
        _elapsed_ms(start),
        detail='min eigenvalue',
    )


def check_cnd(M, tol=1e-8, solver='jacobi', name='cnd', instance=''):
    """Conditional negative definiteness

    c^T M c <= 0 for every c with sum(c) = 0, tested as: the largest
    eigenvalue of P M P (P the centering projector) is <= tol * (1 + max |M_ij|).

    Raises:
        ValueError: If M is not symmetric
    """
    start = time.perf_counter()
    M = _values(M)

    _require_symmetric(M)

    bound = tol * _scale(M)
    highest = float(eigenvalues(centered(M), solver)[-1]) if M.size else 0.0

    return CertReport(
        name,
        instance,
        M.shape[0],
        highest,
        tol,
        highest <= bound,
        _elapsed_ms(start),
        detail='max centered eigenvalue',
    )


def check_schoenberg(M, t_list, tol=1e-8, solver='jacobi', name='schoenberg', instance=''):
    """exp(-t M) is PSD for every t in t_list

    Returns:
        list[CertReport]: One report per t

    Raises:
        ValueError: If t_list is empty or M has a non-zero diagonal
    """
    M = _values(M)

    if not len(t_list):
        raise ValueError('Error: Schoenberg check needs at least one t')

    if np.any(np.diag(M) != 0):
        raise ValueError('Error: Schoenberg check needs a zero diagonal')

    return [
        check_psd(
            schoenberg_transform(M, t),
            tol,
            solver,
            name=f'{name}[t={t:g}]',
            instance=instance,
        )
        for t in t_list
    ]


def check_eigensolver(solver='jacobi', tol=1e-10):
    """Eigenvalues of matrices with known spectrum

    diagonal, the 2 x 2 closed forms 1 +- e^-1 and +-1, rank one vv^T, and a
    seeded random symmetric matrix against numpy's eigvalsh.
    """
    start = time.perf_counter()

    e1 = math.exp(-1)
    v = np.array([1.0, 2.0, 3.0])
    rng = make_rng(7)
    R = rng.normal(size=(12, 12))
    R = R + R.T

    cases = [
        (np.diag([3.0, -1.0, 2.0, 0.5]), [-1.0, 0.5, 2.0, 3.0]),
        (np.array([[1.0, e1], [e1, 1.0]]), [1 - e1, 1 + e1]),
        (np.array([[0.0, 1.0], [1.0, 0.0]]), [-1.0, 1.0]),
        (np.outer(v, v), [0.0, 0.0, 14.0]),
        (np.eye(5), [1.0] * 5),
        (R, np.linalg.eigvalsh(R)),
    ]

    worst = 0.0
    for M, expected in cases:
        error = np.max(np.abs(eigenvalues(M, solver) - np.asarray(expected)))
        worst = max(worst, float(error))

    return CertReport(
        f'eigensolver[{solver}]',
        'known spectra',
        len(cases),
        worst,
        tol,
        worst <= tol,
        _elapsed_ms(start),
        detail='max eigenvalue error',
    )


#########################
# vertex group checks   #
#########################


def check_vertex_gram(graph, samples=30, seed=42, tol=1e-8):
    """Axioms, symmetry, normalization and Gram positivity of every phi_v

    For each vertex: phi_v(e) = 0, phi_v(a) = phi_v(a^-1), group axioms on
    random triples, and [<R_v(a_i), R_v(a_j)>] PSD for up to 30 samples.
    """
    start = time.perf_counter()
    rng = make_rng(seed)

    samples = min(samples, 30)
    lowest = math.inf
    exact = True

    for group in graph.groups:
        e = group.identity()
        elements = [e] + [group.random_element(rng) for _ in range(samples - 1)]

        exact &= group.phi(e) == 0
        for a in elements:
            exact &= group.phi(a) == group.phi(group.inverse(a))
            exact &= group.multiply(a, group.inverse(a)) == e
            exact &= group.multiply(e, a) == a == group.multiply(a, e)
            exact &= group.inner(a, a) == group.phi(a)
            exact &= group.inner(e, a) == 0

        for a, b, c in zip(elements, elements[1:], elements[2:]):
            exact &= group.multiply(group.multiply(a, b), c) == group.multiply(
                a, group.multiply(b, c)
            )

        G = np.array([[group.inner(a, b) for b in elements] for a in elements])
        scale = 1.0 + float(np.max(np.diag(G)))
        lowest = min(lowest, float(np.linalg.eigvalsh(G)[0]) / scale)

    return CertReport(
        'vertex_groups',
        graph.label(),
        samples * graph.size,
        lowest,
        tol,
        bool(exact) and lowest >= -tol,
        _elapsed_ms(start),
        seed,
        'axioms, phi symmetry, min Gram eigenvalue / (1 + max diagonal)',
    )


def vertex_sphere_minima(group, radius):
    """min phi_v over each word-length sphere of group, r = 1..radius

    Returns:
        tuple: (list of (r, min phi, sphere size), number of elements whose
            word_length disagrees with their search depth)
    """
    profile = []
    mismatches = 0

    for r, sphere in enumerate(group.spheres(radius)):
        if r == 0:
            continue
        mismatches += sum(group.word_length(a) != r for a in sphere)
        profile.append((r, min(group.phi(a) for a in sphere), len(sphere)))

    return profile, mismatches


def check_vertex_properness(graph, radius=6):
    """phi_v grows at least linearly in word length on infinite vertex groups

    For every distinct infinite vertex group the sphere minima of phi_v are
    nondecreasing and at least r for r = 1..radius.
    """
    start = time.perf_counter()

    groups = list(dict.fromkeys(g for g in graph.groups if g.kind != 'cyclic'))

    passed = True
    n_elements = 0
    lowest = math.inf
    parts = []

    for group in groups:
        profile, mismatches = vertex_sphere_minima(group, radius)
        minima = [m for _, m, _ in profile]

        passed &= mismatches == 0
        passed &= all(a <= b for a, b in zip(minima, minima[1:]))
        passed &= all(m >= r for r, m, _ in profile)

        n_elements += 1 + sum(count for _, _, count in profile)
        lowest = min([lowest] + [m - r for r, m, _ in profile])
        parts.append(f'{group.label()}: ' + ', '.join(f'{r}:{m:g}' for r, m, _ in profile))

    return CertReport(
        'vertex_properness',
        graph.label(),
        n_elements,
        lowest,
        0,
        bool(passed),
        _elapsed_ms(start),
        detail=f'sphere minima {"; ".join(parts)}',
    )


#######################
# word engine checks  #
#######################


def check_normal_form_oracle(graph, max_length=4):
    """normalize agrees with the exhaustive rewriting oracle

    Every raw word of at most max_length non-identity syllables is sent to
    its normal form and to its oracle set of reduced forms; the two
    partitions of words must coincide and the normal form must be one of
    the oracle's reduced forms.

    Raises:
        ValueError: If some vertex group is infinite
    """
    start = time.perf_counter()

    letters = []
    for v, group in enumerate(graph.groups):
        if group.kind != 'cyclic':
            raise ValueError('Error: The rewriting oracle needs finite vertex groups')
        letters += [(v, a) for a in range(1, group.n)]

    by_form = {}
    by_oracle = {}
    mismatches = 0
    count = 0

    for length in range(max_length + 1):
        for word in itertools.product(letters, repeat=length):
            count += 1
            form = normalize(graph, word)
            oracle = reduced_forms(graph, word)

            if tuple(tuple(s) for s in form) not in oracle:
                mismatches += 1

            if by_form.setdefault(form, oracle) != oracle:
                mismatches += 1
            if by_oracle.setdefault(oracle, form) != form:
                mismatches += 1

    return CertReport(
        'normal_form_oracle',
        graph.label(),
        count,
        mismatches,
        0,
        mismatches == 0,
        _elapsed_ms(start),
        detail=f'raw words up to {max_length} syllables',
    )


def check_shuffle_invariance(graph, samples=200, seed=42):
    """Shuffling a reduced word changes neither its normal form nor R(g)"""
    start = time.perf_counter()
    rng = make_rng(seed)

    failures = 0
    for _ in range(samples):
        g = random_element(graph, rng)
        w = random_shuffles(graph, g, rng)

        if not is_reduced(graph, w) or len(w) != len(g):
            failures += 1
        elif normalize(graph, w) != g or normalize(graph, g) != g:
            failures += 1
        elif embed(graph, w) != embed(graph, g):
            failures += 1

    return CertReport(
        'shuffle_invariance',
        graph.label(),
        samples,
        failures,
        0,
        failures == 0,
        _elapsed_ms(start),
        seed,
        'normalize and embed after random shuffles',
    )


def check_coset_stability(graph, samples=200, seed=42):
    """coset_representative(g k, v) = coset_representative(g, v), k in G(st(v))"""
    start = time.perf_counter()
    rng = make_rng(seed)

    failures = 0
    for _ in range(samples):
        g = random_element(graph, rng)
        v = int(rng.integers(0, graph.size))
        k = random_subgroup_element(graph, graph.star(v), rng, 3)

        if coset_representative(graph, multiply(graph, g, k), v) != coset_representative(
            graph, g, v
        ):
            failures += 1

    return CertReport(
        'coset_stability',
        graph.label(),
        samples,
        failures,
        0,
        failures == 0,
        _elapsed_ms(start),
        seed,
    )


def check_group_axioms(graph, samples=200, seed=42):
    """Group axioms and l_r subadditivity/symmetry on random triples"""
    start = time.perf_counter()
    rng = make_rng(seed)

    failures = 0
    for _ in range(samples):
        f, g, h = (random_element(graph, rng) for _ in range(3))

        ok = multiply(graph, multiply(graph, f, g), h) == multiply(
            graph, f, multiply(graph, g, h)
        )
        ok &= multiply(graph, g, ()) == g == multiply(graph, (), g)
        ok &= multiply(graph, g, inverse(graph, g)) == ()
        ok &= normalize(graph, g) == g
        ok &= reduced_length(multiply(graph, g, h)) <= reduced_length(g) + reduced_length(h)
        ok &= reduced_length(inverse(graph, g)) == reduced_length(g)

        failures += not ok

    return CertReport(
        'group_axioms',
        graph.label(),
        samples,
        failures,
        0,
        failures == 0,
        _elapsed_ms(start),
        seed,
        'associativity, identity, inverse, idempotence, l_r subadditivity',
    )


def check_degeneration(graph, ball):
    """Free product / direct product degenerations

    Edgeless graphs: normal forms alternate vertices, l_r equals the free
    product syllable count, and right multiplication by each generator
    matches an independent free product normalizer.
    Complete graphs: normal forms are sorted by vertex, elements biject with
    coordinate tuples and multiplication is componentwise; when every group
    is cyclic and the radius covers the group, the ball is the whole group.
    A single vertex graph also checks phi_Gamma = 1 + phi_v off the identity.

    Raises:
        ValueError: If the graph is neither edgeless nor complete
    """
    start = time.perf_counter()

    edgeless = graph.is_edgeless()
    complete = graph.is_complete()

    if not edgeless and not complete:
        raise ValueError('Error: Degeneration check needs an edgeless or complete graph')

    gens = generators(graph)
    failures = 0

    if edgeless:
        for g in ball.elements:
            plain = tuple(tuple(s) for s in g)

            if any(a.vertex == b.vertex for a, b in zip(g, g[1:])):
                failures += 1
            if len(free_product_normalize(graph, plain)) != reduced_length(g):
                failures += 1

            for s in gens:
                expected = free_product_normalize(graph, plain + tuple(tuple(x) for x in s))
                if tuple(tuple(x) for x in multiply(graph, g, s)) != expected:
                    failures += 1

    if complete:
        coords = {}
        for g in ball.elements:
            if [s.vertex for s in g] != sorted(s.vertex for s in g):
                failures += 1
            coords[to_tuple(graph, g)] = g

        if len(coords) != len(ball):
            failures += 1

        head = ball.elements[:60]
        for g, h in itertools.product(head, head):
            expected = tuple_multiply(graph, to_tuple(graph, g), to_tuple(graph, h))
            if to_tuple(graph, multiply(graph, g, h)) != expected:
                failures += 1

        if all(group.kind == 'cyclic' for group in graph.groups):
            diameter = sum(group.n // 2 for group in graph.groups)
            if ball.radius >= diameter and not ball.truncated:
                order = math.prod(group.n for group in graph.groups)
                failures += len(ball) != order

    if graph.size == 1:
        group = graph.groups[0]
        for g in ball.elements[1:]:
            failures += phi_gamma(graph, g) != 1 + group.phi(g[0].element)

    kind = 'free product' if edgeless else 'direct product'
    if edgeless and complete:
        kind = 'single vertex'

    return CertReport(
        'degeneration',
        graph.label(),
        len(ball),
        failures,
        0,
        failures == 0,
        _elapsed_ms(start),
        detail=kind,
    )


###################
# kernel checks   #
###################


def check_invariance(graph, samples=200, seed=42, tol=KERNEL_TOL):
    """k(fg, fh) = k(g, h) on random triples of word length <= 6"""
    start = time.perf_counter()
    rng = make_rng(seed)

    worst = 0.0
    for _ in range(samples):
        f, g, h = (random_element(graph, rng) for _ in range(3))

        moved = embedding_kernel(graph, multiply(graph, f, g), multiply(graph, f, h))
        worst = max(worst, abs(moved - embedding_kernel(graph, g, h)))

    return CertReport(
        'invariance',
        graph.label(),
        samples,
        worst,
        tol,
        worst <= tol,
        _elapsed_ms(start),
        seed,
        'max |k(fg,fh) - k(g,h)|',
    )


def check_kernel_identity(graph, samples=200, seed=42, tol=KERNEL_TOL):
    """k(g, h) = phi_tilde(h^-1 g), k(g, e) = phi_tilde(g), phi_Gamma symmetric"""
    start = time.perf_counter()
    rng = make_rng(seed)

    worst = 0.0
    for _ in range(samples):
        g, h = random_element(graph, rng), random_element(graph, rng)

        diff = multiply(graph, inverse(graph, h), g)

        worst = max(
            worst,
            abs(embedding_kernel(graph, g, h) - phi_tilde(graph, diff)),
            abs(embedding_kernel(graph, g, ()) - phi_tilde(graph, g)),
            abs(phi_gamma(graph, g) - phi_gamma(graph, inverse(graph, g))),
        )

    return CertReport(
        'kernel_identity',
        graph.label(),
        samples,
        worst,
        tol,
        worst <= tol,
        _elapsed_ms(start),
        seed,
        'max |k(g,h) - phi_tilde(h^-1 g)|',
    )


def check_restriction(graph, samples=50, seed=42):
    """phi_Gamma(a) = 1 + phi_v(a) for non-identity a in every G_v (exact)"""
    start = time.perf_counter()
    rng = make_rng(seed)

    failures = 0
    for v, group in enumerate(graph.groups):
        for _ in range(samples):
            a = group.random_nontrivial(rng)
            failures += phi_gamma(graph, (Syllable(v, a),)) != 1 + group.phi(a)

    return CertReport(
        'restriction',
        graph.label(),
        samples * graph.size,
        failures,
        0,
        failures == 0,
        _elapsed_ms(start),
        seed,
    )


##########################
# Haagerup-type checks   #
##########################


def check_pointwise_limit(graph, ball, n_list, tol=1e-12):
    """exp(-phi_Gamma(g)/n) is nondecreasing in n and near 1 at the largest n

    Finite proxy for phi_n -> 1 pointwise: at n_max the value must exceed
    1 - (phi_Gamma(g)/n_max + tol). The metric is the minimum over the ball
    at n_max.

    Raises:
        ValueError: If n_list is empty or not increasing
    """
    start = time.perf_counter()

    n_list = list(n_list)
    if not n_list or any(a >= b for a, b in zip(n_list, n_list[1:])):
        raise ValueError('Error: n_list must be non-empty and increasing')

    n_max = n_list[-1]
    lowest = 1.0
    failures = 0

    for g in ball.elements:
        phi = phi_gamma(graph, g)
        values = [math.exp(-phi / n) for n in n_list]

        failures += any(a > b for a, b in zip(values, values[1:]))
        failures += values[-1] < 1 - (phi / n_max + tol)

        lowest = min(lowest, values[-1])

    return CertReport(
        'pointwise_limit',
        graph.label(),
        len(ball),
        lowest,
        tol,
        failures == 0,
        _elapsed_ms(start),
        detail=f'min exp(-phi/n) at n={n_max}',
    )


def properness_profile(graph, radius_max, cap=300, ball=None):
    """Minimum of phi_Gamma on each sphere of the Cayley graph

    Args:
        graph (GraphSpec): The graph of groups
        radius_max (int): Largest radius, >= 1
        cap (int): Element cap for the ball
        ball (Ball): Reuse an enumerated ball instead

    Returns:
        tuple[list[tuple[int, float, int]], bool]:
            [(r, min phi_Gamma on sphere r, element count)], truncated.
            Empty spheres are omitted.
    """
    if radius_max < 1:
        raise ValueError(f'Error: radius_max must be >= 1, got {radius_max}')

    if ball is None:
        ball = enumerate_ball(graph, radius_max, cap)

    profile = []
    for r, sphere in sorted(ball.spheres().items()):
        if r == 0 or r > radius_max:
            continue
        profile.append((r, min(phi_gamma(graph, g) for g in sphere), len(sphere)))

    return profile, ball.truncated


def check_properness(graph, radius_max, cap=300, ball=None):
    """Sphere minima of phi_Gamma are nondecreasing on the enumerated range

    When the ball was truncated the outermost sphere is incomplete and left
    out. If every vertex group is infinite, phi_v equals word length and the
    minima must also be strictly increasing with min >= r + 1.
    """
    start = time.perf_counter()

    profile, truncated = properness_profile(graph, radius_max, cap, ball)
    if truncated and profile:
        profile = profile[:-1]

    minima = [m for _, m, _ in profile]
    monotone = all(a <= b for a, b in zip(minima, minima[1:]))
    strict = all(a < b for a, b in zip(minima, minima[1:]))

    infinite = all(group.kind != 'cyclic' for group in graph.groups)
    bounded = all(m >= r + 1 for r, m, _ in profile)
    passed = monotone and (not infinite or (strict and bounded))

    text = ', '.join(f'{r}:{m:g}' for r, m, _ in profile)
    if not monotone:
        detail = f'sphere minima {text} (not monotone)'
    else:
        detail = f'sphere minima {text} ({"strictly " if strict else ""}monotone)'
    if infinite:
        detail += ', min >= r + 1' if bounded else ', below r + 1'

    return CertReport(
        'properness',
        graph.label(),
        sum(count for _, _, count in profile),
        minima[-1] if minima else 0.0,
        0,
        passed,
        _elapsed_ms(start),
        detail=detail,
    )


def check_vanishing(graph, ball, n=10):
    """max over sphere r of exp(-phi_Gamma/n) is nonincreasing in r"""
    start = time.perf_counter()

    spheres = sorted(ball.spheres().items())
    if ball.truncated and len(spheres) > 1:
        spheres = spheres[:-1]

    peaks = [max(math.exp(-phi_gamma(graph, g) / n) for g in sphere) for _, sphere in spheres]
    failures = sum(a < b for a, b in zip(peaks, peaks[1:]))

    return CertReport(
        'vanishing',
        graph.label(),
        len(ball),
        peaks[-1] if peaks else 1.0,
        0,
        failures == 0,
        _elapsed_ms(start),
        detail=f'max exp(-phi/{n}) per sphere nonincreasing',
    )


def check_length_bounded_growth(graph, vertex, n_max=50):
    """Elements with l_r = 1 but growing word length: phi_Gamma((v:n)) = 1 + n

    Uses a^n for the first generator a of an infinite vertex group.

    Raises:
        ValueError: If the vertex group is finite
    """
    start = time.perf_counter()

    group = graph.group(vertex)
    if group.kind == 'cyclic':
        raise ValueError('Error: Needs an infinite vertex group')

    a = group.generators()[0]

    failures = 0
    element = group.identity()
    for n in range(1, n_max + 1):
        element = group.multiply(element, a)
        g = (Syllable(vertex, element),)

        failures += reduced_length(g) != 1
        failures += group.word_length(element) != n
        failures += phi_gamma(graph, g) != 1 + n

    return CertReport(
        'length_bounded_growth',
        graph.label(),
        n_max,
        failures,
        0,
        failures == 0,
        _elapsed_ms(start),
        detail=f'phi_Gamma(v{vertex}:a^n) = 1 + n, n = 1..{n_max}',
    )
