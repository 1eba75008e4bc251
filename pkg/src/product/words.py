"""Word engine for graph products

Elements of G(Gamma) are written as syllable words g_1 g_2 ... g_m with each
g_i a non-identity element of one vertex group. The three rewriting
operations are:

    shuffle  swap neighbouring syllables whose vertices are adjacent
    drop     remove an identity syllable
    merge    multiply neighbouring syllables of the same vertex

A word is reduced when none of them can shorten it. Reduced words of one
element differ only by shuffles, so the canonical NormalForm is the reduced
word whose vertex sequence is lexicographically least among all its
shuffles. Equal elements therefore have identical (==) NormalForms.

NormalForm and SyllableWord are plain tuples of Syllable.
"""

from typing import Any, NamedTuple

from errors import ConsistencyError, DomainError, NotCommutingError

# runtime self-checks in coset_representative, see set_debug_checks().
# Only ever written by set_debug_checks, worker threads just read it.
_debug_checks = False


class Syllable(NamedTuple):
    vertex: int
    element: Any


def set_debug_checks(enabled=True):
    """Enable or disable runtime re-verification of coset representatives"""
    global _debug_checks

    _debug_checks = bool(enabled)


#########
# graph #
#########


def star(graph, v):
    """st(v) = lk(v) | {v}

    Raises:
        DomainError: If v is not a vertex id
    """
    return graph.star(v)


def link(graph, v):
    """lk(v), the neighbours of v"""
    return graph.link(v)


##############
# operations #
##############


def check_word(graph, word):
    """Validate every syllable of a raw word

    Raises:
        DomainError: If a vertex id is invalid or an element is outside its group
    """
    for syllable in word:
        graph.check_vertex(syllable.vertex)
        graph.groups[syllable.vertex].check(syllable.element)


def shuffle(graph, word, i):
    """Swap syllables i and i+1

    Args:
        graph (GraphSpec): The graph of groups
        word (tuple[Syllable]): Any syllable word
        i (int): Position, 0 <= i < len(word) - 1

    Returns:
        tuple[Syllable]: Word with positions i and i+1 transposed

    Raises:
        IndexError: If i is out of range
        NotCommutingError: If the two vertices are not adjacent
    """
    word = tuple(word)

    if not 0 <= i < len(word) - 1:
        raise IndexError(f'Error: Shuffle position {i} out of range')

    v, w = word[i].vertex, word[i + 1].vertex

    if not graph.commute(v, w):
        raise NotCommutingError(
            f'Error: Syllables at {i} (vertex {v}) and {i + 1} (vertex {w}) '
            f'are not commuting'
        )

    return word[:i] + (word[i + 1], word[i]) + word[i + 2 :]


def _reduce(graph, word):
    """Reduce a word by insertion; the result is reduced but not canonical"""
    pending = list(word)

    while True:
        result = []
        restart = False

        for k, syllable in enumerate(pending):
            group = graph.groups[syllable.vertex]

            # drop
            if group.is_identity(syllable.element):
                continue

            # walk left over syllables that commute with the new one
            j = len(result) - 1
            while j >= 0 and graph.commute(result[j].vertex, syllable.vertex):
                j -= 1

            if j < 0 or result[j].vertex != syllable.vertex:
                result.append(syllable)
                continue

            # merge: result[j] and syllable become neighbours after shuffles
            product = group._multiply(result[j].element, syllable.element)

            if not group.is_identity(product):
                result[j] = Syllable(syllable.vertex, product)
                continue

            # the cancelled syllable may have separated two others, start over
            del result[j]
            pending = result + pending[k + 1 :]
            restart = True
            break

        if not restart:
            return result


def _canonical_order(graph, word):
    """Lexicographically least shuffle of a reduced word (by vertex id)"""
    remaining = list(word)
    result = []

    while remaining:
        best = None

        for i, syllable in enumerate(remaining):
            # a syllable can move to the front if it commutes with all before it
            movable = all(
                graph.commute(earlier.vertex, syllable.vertex)
                for earlier in remaining[:i]
            )
            if movable and (best is None or syllable.vertex < remaining[best].vertex):
                best = i

        result.append(remaining.pop(best))

    return tuple(result)


def normalize(graph, word):
    """Canonical reduced form of a raw syllable word

    Identity syllables are dropped, same-vertex syllables that can be brought
    together are merged, and the survivors are put in canonical order.

    Args:
        graph (GraphSpec): The graph of groups
        word (Iterable[Syllable]): Raw word, may be unreduced

    Returns:
        tuple[Syllable]: The NormalForm; () is the identity

    Raises:
        DomainError: If a syllable's element is not in its vertex group
    """
    word = [Syllable(*syllable) for syllable in word]

    check_word(graph, word)

    return _canonical_order(graph, _reduce(graph, word))


def multiply(graph, g, h):
    """Product g * h of two elements"""
    return normalize(graph, tuple(g) + tuple(h))


def inverse(graph, g):
    """Inverse: reverse the word and invert every syllable"""
    check_word(graph, g)

    return normalize(
        graph,
        [
            Syllable(s.vertex, graph.groups[s.vertex]._inverse(s.element))
            for s in reversed(g)
        ],
    )


def reduced_length(g):
    """l_r(g): number of syllables of a reduced form of g"""
    return len(g)


def reduced_distance(graph, g, h):
    """d_r(g, h) = l_r(h^-1 g)"""
    return reduced_length(multiply(graph, inverse(graph, h), g))


def is_reduced(graph, word):
    """Check the reduced-form criterion

    A word is reduced iff it has no identity syllable and between any two
    syllables of the same vertex v lies a syllable whose vertex is outside
    st(v).

    Returns:
        bool: True if no shuffle/drop/merge sequence can shorten the word
    """
    word = [Syllable(*syllable) for syllable in word]

    check_word(graph, word)

    for syllable in word:
        if graph.groups[syllable.vertex].is_identity(syllable.element):
            return False

    for i, first in enumerate(word):
        around = graph.star(first.vertex)

        for j in range(i + 1, len(word)):
            if word[j].vertex != first.vertex:
                continue

            if not any(word[q].vertex not in around for q in range(i + 1, j)):
                return False

            # later pairs are separated through the nearer one
            break

    return True


##########
# cosets #
##########


def coset_representative(graph, g, v):
    """Canonical minimal representative of the coset g G(st(v))

    Repeatedly deletes a syllable whose vertex lies in st(v) and which
    commutes with every later syllable (so it can be shuffled to the end and
    absorbed into G(st(v))), then normalizes.

    Args:
        graph (GraphSpec): The graph of groups
        g (tuple[Syllable]): A reduced word
        v (int): Vertex id

    Returns:
        tuple[Syllable]: NormalForm depending only on the coset

    Raises:
        DomainError: If v is not a vertex id
    """
    result = _coset_representative(graph, g, v)

    if _debug_checks:
        _verify_coset_representative(graph, result, v)

    return result


def _coset_representative(graph, g, v):
    around = graph.star(v)

    word = list(normalize(graph, g))

    changed = True
    while changed:
        changed = False

        for i in range(len(word) - 1, -1, -1):
            if word[i].vertex not in around:
                continue

            if all(graph.commute(word[i].vertex, s.vertex) for s in word[i + 1 :]):
                del word[i]
                changed = True
                break

    return normalize(graph, word)


def _verify_coset_representative(graph, rep, v):
    # fixpoint: nothing removable is left
    around = graph.star(v)
    for i, syllable in enumerate(rep):
        if syllable.vertex in around and all(
            graph.commute(syllable.vertex, s.vertex) for s in rep[i + 1 :]
        ):
            raise ConsistencyError(
                f'Error: Coset representative {rep} of st({v}) is not a fixpoint'
            )

    # stability under right multiplication by G(st(v))
    for k in subgroup_generators(graph, around):
        moved = _coset_representative(graph, multiply(graph, rep, k), v)
        if moved != rep:
            raise ConsistencyError(
                f'Error: Coset representative unstable: {rep} * {k} -> {moved}'
            )


def subgroup_generators(graph, vertices):
    """Generators of G(A) for a vertex subset A, as single-syllable words

    Args:
        graph (GraphSpec): The graph of groups
        vertices (Iterable[int]): Vertex ids of A

    Returns:
        list[tuple[Syllable]]: One single-syllable word per vertex generator
    """
    result = []

    for v in sorted(vertices):
        graph.check_vertex(v)

        for a in graph.groups[v].generators():
            result.append((Syllable(v, a),))

    return result


def generators(graph):
    """Generators of G(Gamma): the union of all vertex generating sets"""
    return subgroup_generators(graph, range(graph.size))

