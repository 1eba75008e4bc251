"""Independent oracles used to cross-check the word engine

None of these call product.words; they work on plain (vertex, element)
tuples and only use vertex group arithmetic.
"""

from collections import deque


def free_product_normalize(graph, word):
    """Free product normal form, ignoring every edge of the graph

    Identity syllables are dropped and neighbouring same-vertex syllables
    merged with a stack, which is the whole story for a free product.

    Returns:
        tuple[tuple[int, Any]]: Alternating (vertex, element) pairs
    """
    stack = []

    for v, a in word:
        group = graph.groups[v]

        if group.is_identity(a):
            continue

        if stack and stack[-1][0] == v:
            merged = group._multiply(stack[-1][1], a)
            stack.pop()
            if not group.is_identity(merged):
                stack.append((v, merged))
        else:
            stack.append((v, a))

    return tuple(stack)


def to_tuple(graph, word):
    """Direct product coordinates of a word: one element per vertex"""
    coords = [group.identity() for group in graph.groups]

    for v, a in word:
        coords[v] = graph.groups[v]._multiply(coords[v], a)

    return tuple(coords)


def tuple_multiply(graph, x, y):
    """Componentwise product in the direct product of the vertex groups"""
    return tuple(
        group._multiply(a, b) for group, a, b in zip(graph.groups, x, y)
    )


def rewriting_closure(graph, word):
    """Every word reachable by shuffle, drop and merge

    Returns:
        set[tuple]: Reachable words, `word` included
    """
    start = tuple((v, a) for v, a in word)
    seen = {start}
    queue = deque([start])

    while queue:
        w = queue.popleft()
        moves = []

        for i, (v, a) in enumerate(w):
            # drop
            if graph.groups[v].is_identity(a):
                moves.append(w[:i] + w[i + 1 :])

            if i + 1 == len(w):
                continue

            u, b = w[i + 1]

            # shuffle
            if v != u and graph.commute(v, u):
                moves.append(w[:i] + (w[i + 1], w[i]) + w[i + 2 :])

            # merge
            if v == u:
                merged = graph.groups[v]._multiply(a, b)
                moves.append(w[:i] + ((v, merged),) + w[i + 2 :])

        for move in moves:
            if move not in seen:
                seen.add(move)
                queue.append(move)

    return seen


def reduced_forms(graph, word):
    """All reduced forms of the element a word represents

    These are the shortest words reachable by rewriting; two words represent
    the same element iff their reduced form sets are equal.

    Returns:
        frozenset[tuple]: The shuffle class of reduced forms
    """
    closure = rewriting_closure(graph, word)
    shortest = min(len(w) for w in closure)

    return frozenset(w for w in closure if len(w) == shortest)
