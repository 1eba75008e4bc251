"""Vertex groups module

Concrete groups that sit on the vertices of a graph product, each carrying a
proper, symmetric, conditionally negative definite (CND) function phi.

Element payloads (no wrapper objects, the owning group travels alongside):
    cyclic    int residue in [0, n)
    integers  int
    free      tuple of non-zero ints, +i for x_i and -i for x_i^-1,
              always freely reduced

The Hilbert-space map R_v of a group is never materialized. Inner products
come from phi by polarization, with R_v(e) = 0:

    <R(a), R(b)> = (phi(a) + phi(b) - phi(b^-1 a)) / 2
"""

import re
from abc import ABC, abstractmethod
from dataclasses import dataclass

from errors import DomainError, WordSyntaxError

FREE_LETTER = re.compile(r'x(\d+)(?:\^([+-]?\d+))?$')


@dataclass(frozen=True)
class VertexGroup(ABC):
    """Base of all vertex group descriptors"""

    kind = ''

    ##############
    # arithmetic #
    ##############

    @abstractmethod
    def identity(self):
        """Identity element payload"""

    @abstractmethod
    def contains(self, a):
        """Check whether payload a is a valid element of this group

        Returns:
            bool: True if a satisfies the encoding invariant
        """

    @abstractmethod
    def _multiply(self, a, b):
        pass

    @abstractmethod
    def _inverse(self, a):
        pass

    @abstractmethod
    def phi_exact(self, a):
        """Exact (integer) value of phi at a"""

    @abstractmethod
    def generators(self):
        """Symmetric finite generating set

        Returns:
            list: Generator payloads, self-inverse generators listed once
        """

    @abstractmethod
    def word_length(self, a):
        """Word length of a over generators()"""

    def spheres(self, radius):
        """Word-length spheres around the identity, by breadth-first search

        Args:
            radius (int): Largest word length to enumerate

        Returns:
            list[list]: Element payloads at distance 0..radius from e
        """
        seen = {self.identity()}
        spheres = [[self.identity()]]

        for _ in range(radius):
            shell = []
            for a in spheres[-1]:
                for s in self.generators():
                    b = self._multiply(a, s)
                    if b not in seen:
                        seen.add(b)
                        shell.append(b)

            if not shell:
                break
            spheres.append(shell)

        return spheres

    def check(self, a):
        """Raise DomainError unless a belongs to this group"""
        if not self.contains(a):
            raise DomainError(f'Error: {a!r} is not an element of {self.label()}')

    def is_identity(self, a):
        return a == self.identity()

    def multiply(self, a, b):
        """Group product a * b

        Raises:
            DomainError: If a or b is not an element of this group
        """
        self.check(a)
        self.check(b)

        return self._multiply(a, b)

    def inverse(self, a):
        """Group inverse of a

        Raises:
            DomainError: If a is not an element of this group
        """
        self.check(a)

        return self._inverse(a)

    def phi(self, a):
        """CND function phi_v at a, as a float

        Raises:
            DomainError: If a is not an element of this group
        """
        self.check(a)

        return float(self.phi_exact(a))

    def inner(self, a, b):
        """Inner product <R_v(a), R_v(b)> by polarization of phi_v

        Returns:
            float: (phi(a) + phi(b) - phi(b^-1 a)) / 2
        """
        self.check(a)
        self.check(b)

        diff = self._multiply(self._inverse(b), a)

        return (self.phi_exact(a) + self.phi_exact(b) - self.phi_exact(diff)) / 2

    ##########
    # syntax #
    ##########

    @abstractmethod
    def parse_element(self, text):
        """Parse element text syntax into a payload

        Raises:
            WordSyntaxError: If the text is malformed
            DomainError: If the value is outside the group
        """

    def format_element(self, a):
        return str(a)

    @abstractmethod
    def label(self):
        """Short human readable name, e.g. 'Z/3'"""

    @abstractmethod
    def describe(self):
        """Config / report representation, e.g. {'kind': 'cyclic', 'n': 3}"""

    ############
    # sampling #
    ############

    @abstractmethod
    def random_element(self, rng, max_length=6):
        """Draw an element with word length at most max_length

        Args:
            rng (numpy.random.Generator): Seeded generator
            max_length (int): Word length bound for infinite groups
        """

    def random_nontrivial(self, rng, max_length=6):
        while True:
            a = self.random_element(rng, max_length)
            if not self.is_identity(a):
                return a


@dataclass(frozen=True)
class CyclicGroup(VertexGroup):
    """Finite cyclic group Z/n with the discrete metric phi(a) = [a != 0]"""

    n: int = 2

    kind = 'cyclic'

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise DomainError(f'Error: Cyclic group order must be >= 2, got {self.n!r}')

    def identity(self):
        return 0

    def contains(self, a):
        return isinstance(a, int) and not isinstance(a, bool) and 0 <= a < self.n

    def _multiply(self, a, b):
        return (a + b) % self.n

    def _inverse(self, a):
        return (-a) % self.n

    def phi_exact(self, a):
        return 0 if a == 0 else 1

    def generators(self):
        if self.n == 2:
            return [1]

        return [1, self.n - 1]

    def word_length(self, a):
        self.check(a)

        return min(a, self.n - a)

    def parse_element(self, text):
        a = _parse_int(text)

        if not 0 <= a < self.n:
            raise DomainError(f'Error: {a} is not a residue of {self.label()}')

        return a

    def label(self):
        return f'Z/{self.n}'

    def describe(self):
        return {'kind': self.kind, 'n': self.n}

    def random_element(self, rng, max_length=6):
        return int(rng.integers(0, self.n))


@dataclass(frozen=True)
class IntegerGroup(VertexGroup):
    """Integers Z with phi(a) = |a|"""

    kind = 'integers'

    def identity(self):
        return 0

    def contains(self, a):
        return isinstance(a, int) and not isinstance(a, bool)

    def _multiply(self, a, b):
        return a + b

    def _inverse(self, a):
        return -a

    def phi_exact(self, a):
        return abs(a)

    def generators(self):
        return [1, -1]

    def word_length(self, a):
        self.check(a)

        return abs(a)

    def parse_element(self, text):
        return _parse_int(text)

    def label(self):
        return 'Z'

    def describe(self):
        return {'kind': self.kind}

    def random_element(self, rng, max_length=6):
        return int(rng.integers(-max_length, max_length + 1))


@dataclass(frozen=True)
class FreeGroup(VertexGroup):
    """Free group F_k with phi = reduced word length

    Payload +i stands for x_i and -i for x_i^-1 (1 <= i <= rank).
    """

    rank: int = 2

    kind = 'free'

    def __post_init__(self):
        if not isinstance(self.rank, int) or self.rank < 1:
            raise DomainError(f'Error: Free group rank must be >= 1, got {self.rank!r}')

    def identity(self):
        return ()

    def contains(self, a):
        if not isinstance(a, tuple):
            return False

        for i, letter in enumerate(a):
            if not isinstance(letter, int) or not 1 <= abs(letter) <= self.rank:
                return False
            # freely reduced
            if i and a[i - 1] == -letter:
                return False

        return True

    def _multiply(self, a, b):
        # cancel the longest common x . x^-1 junction
        k = 0
        while k < min(len(a), len(b)) and a[len(a) - 1 - k] == -b[k]:
            k += 1

        return a[: len(a) - k] + b[k:]

    def _inverse(self, a):
        return tuple(-letter for letter in reversed(a))

    def phi_exact(self, a):
        return len(a)

    def generators(self):
        gens = []
        for i in range(1, self.rank + 1):
            gens += [(i,), (-i,)]

        return gens

    def word_length(self, a):
        self.check(a)

        return len(a)

    def parse_element(self, text):
        tokens = text.split()

        if not tokens or tokens == ['e']:
            return ()

        word = ()
        offset = 0

        for token in tokens:
            offset = text.index(token, offset)

            match = FREE_LETTER.match(token)
            if not match:
                raise WordSyntaxError(f"Bad free group letter '{token}'", offset)

            index = int(match.group(1))
            power = int(match.group(2)) if match.group(2) is not None else 1

            if not 1 <= index <= self.rank:
                raise DomainError(
                    f"Error: Generator 'x{index}' is not in {self.label()}"
                )

            letter = index if power > 0 else -index
            word = self._multiply(word, (letter,) * abs(power))

            offset += len(token)

        return word

    def format_element(self, a):
        if not a:
            return 'e'

        return ' '.join(f'x{x}' if x > 0 else f'x{-x}^-1' for x in a)

    def label(self):
        return f'F{self.rank}'

    def describe(self):
        return {'kind': self.kind, 'rank': self.rank}

    def random_element(self, rng, max_length=6):
        length = int(rng.integers(0, max_length + 1))

        word = ()
        while len(word) < length:
            letter = int(rng.integers(1, self.rank + 1))
            if rng.integers(0, 2):
                letter = -letter
            if word and word[-1] == -letter:
                continue
            word += (letter,)

        return word


# global mapping of group kinds
# format: {kind: (group class, required size key)}
GROUP_KINDS = {
    'cyclic': (CyclicGroup, 'n'),
    'integers': (IntegerGroup, None),
    'free': (FreeGroup, 'rank'),
}


def make_group(spec):
    """Build a vertex group from its config dict

    Args:
        spec (dict): {'kind': 'cyclic', 'n': 3}, {'kind': 'integers'}
                     or {'kind': 'free', 'rank': 2}

    Returns:
        VertexGroup: The described group

    Raises:
        DomainError: If the kind is unknown or the size is missing/invalid
    """
    kind = spec.get('kind')

    if kind not in GROUP_KINDS:
        raise DomainError(f'Error: Unknown group kind: {kind!r}')

    cls, size_key = GROUP_KINDS[kind]

    if size_key is None:
        return cls()

    if size_key not in spec:
        raise DomainError(f"Error: Group kind '{kind}' requires '{size_key}'")

    return cls(spec[size_key])


def _parse_int(text):
    text = text.strip()

    try:
        return int(text)
    except ValueError:
        raise WordSyntaxError(f"Bad integer '{text}'", 0) from None
