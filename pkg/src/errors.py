"""Exceptions shared by the toolkit

All of them derive from built-in exceptions, so callers that only know about
ValueError / RuntimeError keep working.
"""


class DomainError(ValueError):
    """Element, vertex or graph does not belong where it is used"""


class NotCommutingError(ValueError):
    """Shuffle requested between syllables whose vertices are not adjacent"""


class WordSyntaxError(ValueError):
    """Text could not be parsed as an element or a syllable word

    Args:
        message (str): Error description
        position (int): Character offset where parsing failed
    """

    def __init__(self, message, position=0):
        super().__init__(f'Error: {message} (at position {position})')

        self.message = message
        self.position = position


class ConfigError(ValueError):
    """Run configuration failed validation

    Args:
        errors (list[str]): Every validation error found, not just the first
    """

    def __init__(self, errors):
        self.errors = list(errors)

        super().__init__('Error: Invalid config:\n  ' + '\n  '.join(self.errors))


class ConsistencyError(RuntimeError):
    """An internal invariant was violated (a bug, never a user error)"""
