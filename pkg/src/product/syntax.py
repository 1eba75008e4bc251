"""Word text syntax

    word      := 'e' | syllable (';' syllable)*
    syllable  := 'v' <vertex id> ':' <element>

The element text follows the vertex group's own syntax (decimal residue,
signed decimal, or 'x1 x2^-1 x1'). Blank text and 'e' are the identity.
"""

import re

from errors import WordSyntaxError
from product.words import Syllable

SYLLABLE = re.compile(r'\s*v(\d+)\s*:(.*)$', re.DOTALL)


def parse_word(graph, text):
    """Parse word text into a raw syllable word

    Args:
        graph (GraphSpec): Graph whose vertex groups interpret the elements
        text (str): e.g. 'v0:3; v2:x1 x2^-1'

    Returns:
        tuple[Syllable]: Raw (possibly unreduced) word

    Raises:
        WordSyntaxError: On malformed text, with the character position
        DomainError: If an element is outside its vertex group
    """
    if text.strip() in ('', 'e'):
        return ()

    word = []
    offset = 0

    for piece in text.split(';'):
        if not piece.strip():
            raise WordSyntaxError('Empty syllable', offset)

        match = SYLLABLE.match(piece)
        if not match:
            raise WordSyntaxError(f"Bad syllable '{piece.strip()}'", offset)

        vertex = int(match.group(1))
        if not 0 <= vertex < graph.size:
            raise WordSyntaxError(f'Unknown vertex v{vertex}', offset)

        group = graph.groups[vertex]
        try:
            element = group.parse_element(match.group(2))
        except WordSyntaxError as error:
            raise WordSyntaxError(
                f'{error.message} in syllable v{vertex}',
                offset + match.start(2) + error.position,
            ) from None

        word.append(Syllable(vertex, element))

        offset += len(piece) + 1

    return tuple(word)


def format_word(graph, word):
    """Emit a word in the same syntax parse_word reads

    Returns:
        str: e.g. 'v1:1; v0:x1^-1', or 'e' for the empty word
    """
    if not word:
        return 'e'

    return '; '.join(
        f'v{s.vertex}:{graph.groups[s.vertex].format_element(s.element)}' for s in word
    )
