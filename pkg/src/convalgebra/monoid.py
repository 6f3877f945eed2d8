"""Commutative semigroups with identity used as index sets.

Four instances are provided: the integers ``Z``, the whole numbers ``W``,
multi-indices ``W^n`` and residues ``Z/mZ``.  Elements are plain Python
values in canonical form (``int`` for Z, W and Z/m, a length-``n`` tuple of
ints for W^n); the descriptor validates membership, so mixing elements of
different monoids is caught where the descriptor is consulted.
"""

from __future__ import annotations

import itertools
import re
from numbers import Integral

from .errors import ContextMismatch, DomainError, InfiniteDecomposition, ParseError

__all__ = [
    "Integers",
    "MultiIndex",
    "Residues",
    "Wholes",
    "decompose",
    "degree",
    "identity",
    "op",
    "parse_monoid",
]


def _is_int(x):
    return isinstance(x, Integral) and not isinstance(x, bool)


class Monoid:
    """Base class for the monoid descriptors."""

    finite_decomposition = True
    is_group = False
    # regex matching one element at the start of a coefficient-file line
    element_pattern = r"-?\d+"

    def contains(self, x):
        raise NotImplementedError

    def check(self, x):
        if not self.contains(x):
            raise ContextMismatch(f"{x!r} is not an element of {self}")
        return x

    def op(self, x, y):
        raise NotImplementedError

    @property
    def identity(self):
        raise NotImplementedError

    def inverse(self, x):
        raise DomainError(f"{self} is not a group")

    def decompose(self, z):
        raise InfiniteDecomposition(
            f"{self} lacks the finite-decomposition property: "
            f"z = x + (z - x) for every x"
        )

    def sort_key(self, x):
        return x

    def grade(self, x):
        """Total degree used for truncation; only meaningful for W and W^n."""
        raise DomainError(f"{self} has no grading")

    def elements_of_grade(self, d):
        raise DomainError(f"{self} has no grading")

    def elements_below(self, bound):
        """Elements of grade < bound in canonical order."""
        out = []
        for d in range(bound):
            out.extend(self.elements_of_grade(d))
        return out

    def parse(self, text):
        s = text.strip()
        if not re.fullmatch(self.element_pattern, s):
            raise ParseError(f"invalid element {text!r} of {self}")
        return self.check(int(s))

    def format(self, x):
        return str(x)

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def _key(self):
        return ()


class Integers(Monoid):
    """The additive group Z."""

    finite_decomposition = False
    is_group = True

    def contains(self, x):
        return _is_int(x)

    def op(self, x, y):
        return self.check(x) + self.check(y)

    @property
    def identity(self):
        return 0

    def inverse(self, x):
        return -self.check(x)

    def __repr__(self):
        return "Z"


class Wholes(Monoid):
    """The whole numbers W = {0, 1, 2, ...} under addition."""

    element_pattern = r"\d+"

    def contains(self, x):
        return _is_int(x) and x >= 0

    def op(self, x, y):
        return self.check(x) + self.check(y)

    @property
    def identity(self):
        return 0

    def decompose(self, z):
        self.check(z)
        return [(x, z - x) for x in range(z + 1)]

    def grade(self, x):
        return x

    def elements_of_grade(self, d):
        return [d]

    def __repr__(self):
        return "W"


class MultiIndex(Monoid):
    """Multi-indices W^n: n-tuples of whole numbers, added componentwise.

    Canonical order is by degree, then lexicographic.
    """

    def __init__(self, n):
        if not _is_int(n) or n < 1:
            raise DomainError(f"W^n needs n >= 1, got {n!r}")
        self.n = int(n)
        self.element_pattern = r"\(\s*\d+(?:\s*,\s*\d+)*\s*,?\s*\)"

    def _key(self):
        return (self.n,)

    def contains(self, x):
        return (
            isinstance(x, tuple)
            and len(x) == self.n
            and all(_is_int(a) and a >= 0 for a in x)
        )

    def op(self, x, y):
        self.check(x)
        self.check(y)
        return tuple(a + b for a, b in zip(x, y))

    @property
    def identity(self):
        return (0,) * self.n

    def decompose(self, z):
        self.check(z)
        pairs = []
        for x in itertools.product(*(range(a + 1) for a in z)):
            pairs.append((x, tuple(a - b for a, b in zip(z, x))))
        return pairs

    def sort_key(self, x):
        return (sum(x), x)

    def grade(self, x):
        return sum(x)

    def elements_of_grade(self, d):
        # compositions of d into n whole parts, lexicographic
        if self.n == 1:
            return [(d,)]
        out = []
        for first in range(d + 1):
            for rest in MultiIndex(self.n - 1).elements_of_grade(d - first):
                out.append((first,) + rest)
        out.sort()
        return out

    def unit_vector(self, i):
        return tuple(1 if j == i else 0 for j in range(self.n))

    def parse(self, text):
        s = text.strip()
        if not re.fullmatch(self.element_pattern, s):
            raise ParseError(f"invalid multi-index {text!r}")
        parts = [p for p in s.strip("()").split(",") if p.strip()]
        return self.check(tuple(int(p) for p in parts))

    def format(self, x):
        return "(" + ",".join(str(a) for a in x) + ")"

    def __repr__(self):
        return f"W^{self.n}"


class Residues(Monoid):
    """The cyclic group Z/mZ; elements are residues in [0, m)."""

    is_group = True

    def __init__(self, m):
        if not _is_int(m) or m < 1:
            raise DomainError(f"Z/m needs m >= 1, got {m!r}")
        self.m = int(m)
        self.element_pattern = r"\d+(?:\s+mod\s+\d+)?"

    def _key(self):
        return (self.m,)

    def contains(self, x):
        return _is_int(x) and 0 <= x < self.m

    def op(self, x, y):
        return (self.check(x) + self.check(y)) % self.m

    @property
    def identity(self):
        return 0

    def inverse(self, x):
        return (-self.check(x)) % self.m

    def decompose(self, z):
        self.check(z)
        return [(x, (z - x) % self.m) for x in range(self.m)]

    def elements(self):
        return list(range(self.m))

    def parse(self, text):
        s = text.strip()
        m = re.fullmatch(r"(\d+)(?:\s+mod\s+(\d+))?", s)
        if not m or (m.group(2) is not None and int(m.group(2)) != self.m):
            raise ParseError(f"invalid element {text!r} of Z/{self.m}")
        return self.check(int(m.group(1)))

    def format(self, x):
        return f"{x} mod {self.m}"

    def __repr__(self):
        return f"Z/{self.m}"


def parse_monoid(text):
    """Parse ``Z``, ``W``, ``W^<n>`` or ``Zmod:<m>``."""
    s = text.strip()
    if s == "Z":
        return Integers()
    if s == "W":
        return Wholes()
    m = re.fullmatch(r"W\^(\d+)", s)
    if m:
        return MultiIndex(int(m.group(1)))
    m = re.fullmatch(r"(?:Zmod:|Z/)(\d+)", s)
    if m:
        return Residues(int(m.group(1)))
    raise ParseError(f"unknown monoid {text!r} (expected Z, W, W^<n> or Zmod:<m>)")


def op(E, x, y):
    return E.op(x, y)


def identity(E):
    return E.identity


def decompose(E, z):
    """All ordered pairs ``(x, y)`` with ``x o y == z``."""
    return E.decompose(z)


def degree(alpha):
    """|alpha| = alpha_1 + ... + alpha_n for a multi-index."""
    if not (isinstance(alpha, tuple) and all(_is_int(a) and a >= 0 for a in alpha)):
        raise DomainError(f"{alpha!r} is not a multi-index")
    return sum(alpha)
