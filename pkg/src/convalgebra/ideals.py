"""Principal ideals, quotient rings and ring homomorphisms.

Only the two Euclidean domains Z and k[t] are made concrete: an ideal is
given by one generator, membership is divisibility, and a coset is
represented by its Euclidean remainder.  Z/(m) and k[t]/(q) are then
ordinary finite or infinite commutative rings with unity.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import ContextMismatch, DomainError, NotInvertible, ParseError, UnsupportedError
from .expr import parse_with
from .poly import Polynomial, PolynomialBuilder, UnitalAlgebra, format_polynomial, poly_divmod, poly_xgcd
from .scalars import PrimeField, QQ, is_prime, parse_field

__all__ = [
    "HomomorphismCheck",
    "IdealClass",
    "IntegerRing",
    "PolynomialRing",
    "PrincipalIdeal",
    "QuotientElement",
    "QuotientRing",
    "ZZ",
    "classify_ideal",
    "ideal_member",
    "is_irreducible",
    "kernel_of",
    "parse_ring",
    "project",
    "quotient_invert",
    "verify_homomorphism",
    "zero_divisor_witness",
]

# max number of trial factors for the exhaustive F_p[t] irreducibility search
_FACTOR_SEARCH_BUDGET = 2_000_000


class IntegerRing:
    """The ring Z of integers."""

    zero = 0
    one = 1

    def __call__(self, x):
        if isinstance(x, bool) or not isinstance(x, int):
            raise DomainError(f"{x!r} is not an integer")
        return x

    def canonical_generator(self, g):
        return abs(self(g))

    def remainder(self, x, g):
        return x % g if g else x

    def divides(self, g, x):
        return x == 0 if g == 0 else x % g == 0

    def parse(self, text):
        return parse_with(text, _IntegerBuilder())

    def format(self, x):
        return str(x)

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("ZZ")

    def __repr__(self):
        return "Z"


ZZ = IntegerRing()


class _IntegerBuilder:
    def number(self, text):
        if not text.isdigit():
            raise ParseError(f"{text!r} is not an integer")
        return int(text)

    def imag(self, text):
        raise ParseError("imaginary literal in an integer expression")

    def variable(self, name):
        raise ParseError(f"unexpected symbol {name!r} in an integer expression")

    add = staticmethod(lambda a, b: a + b)
    sub = staticmethod(lambda a, b: a - b)
    neg = staticmethod(lambda a: -a)
    mul = staticmethod(lambda a, b: a * b)

    def div(self, a, b):
        raise ParseError("division is not a ring operation in Z")

    def power(self, a, n):
        if n < 0:
            raise ParseError("negative exponent in Z")
        return a ** n


class PolynomialRing:
    """The ring k[t] of univariate polynomials over a field."""

    def __init__(self, field):
        self.field = field

    @property
    def zero(self):
        return Polynomial.zero(1, self.field)

    @property
    def one(self):
        return Polynomial.one(1, self.field)

    def __call__(self, x):
        if isinstance(x, Polynomial):
            if x.nvars != 1 or x.field != self.field:
                raise ContextMismatch(f"{x!r} is not in {self}")
            return x
        return Polynomial.constant(1, self.field, self.field(x))

    def canonical_generator(self, g):
        return self(g).monic()

    def remainder(self, x, g):
        return poly_divmod(x, g)[1] if g else x

    def divides(self, g, x):
        return not x if not g else not poly_divmod(x, g)[1]

    def parse(self, text):
        return parse_with(text, PolynomialBuilder(self.field, 1))

    def format(self, x):
        return format_polynomial(x)

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and other.field == self.field

    def __hash__(self):
        return hash(("k[t]", self.field))

    def __repr__(self):
        return f"{self.field}[t]"


def parse_ring(text):
    """``Z`` or ``<field>[t]`` such as ``Q[t]``, ``F3[t]``, ``Fp:3[t]``."""
    s = text.strip()
    if s == "Z":
        return ZZ
    m = re.fullmatch(r"(.+)\[t\]", s)
    if m:
        return PolynomialRing(parse_field(m.group(1)))
    raise ParseError(f"unknown ring {text!r} (expected Z or <field>[t])")


class PrincipalIdeal:
    """The ideal (g) = {g*y : y in R} of Z or k[t]."""

    def __init__(self, ring, generator):
        self.ring = ring
        self.generator = ring.canonical_generator(generator)

    def contains(self, x):
        return self.ring.divides(self.generator, self.ring(x))

    __contains__ = contains

    def is_zero(self):
        return not self.generator

    def is_improper(self):
        """True when 1 is in the ideal (the generator is a unit)."""
        return self.contains(self.ring.one)

    def __eq__(self, other):
        return (
            isinstance(other, PrincipalIdeal)
            and self.ring == other.ring
            and self.generator == other.generator
        )

    def __hash__(self):
        return hash((self.ring, self.generator))

    def __repr__(self):
        return f"({self.ring.format(self.generator)}) in {self.ring}"


def ideal_member(x, ideal):
    return ideal.contains(x)


class QuotientRing(UnitalAlgebra):
    """R/I for a principal ideal I; also usable as an evaluation target."""

    def __init__(self, ideal):
        self.ideal = ideal
        self.ring = ideal.ring
        self.field = getattr(self.ring, "field", None)

    def __call__(self, x):
        return project(x, self.ideal)

    # UnitalAlgebra contract
    def zero(self):
        return self(self.ring.zero)

    def one(self):
        return self(self.ring.one)

    def coerce(self, a):
        if isinstance(a, QuotientElement):
            if a.ideal != self.ideal:
                raise ContextMismatch("element belongs to another quotient")
            return a
        return self(a)

    def scale(self, c, a):
        return self(self.ring(c)) * a

    def is_finite(self):
        g = self.ideal.generator
        if isinstance(self.ring, IntegerRing):
            return g != 0
        return bool(g) and isinstance(self.ring.field, PrimeField)

    def elements(self):
        """All residues, in a fixed order (finite quotients only)."""
        if not self.is_finite():
            raise DomainError(f"{self} is infinite")
        g = self.ideal.generator
        if isinstance(self.ring, IntegerRing):
            return [QuotientElement._make(self.ideal, r) for r in range(g)]
        field = self.ring.field
        d = g.degree
        out = []
        for coeffs in itertools.product(range(field.p), repeat=d):
            p = Polynomial.from_list(field, list(reversed(coeffs)))
            out.append(QuotientElement._make(self.ideal, p))
        return out

    def __eq__(self, other):
        return isinstance(other, QuotientRing) and other.ideal == self.ideal

    def __hash__(self):
        return hash(("quot", self.ideal))

    def __repr__(self):
        return f"{self.ring}/({self.ring.format(self.ideal.generator)})"


class QuotientElement:
    """A coset x + I, stored as its reduced representative."""

    __slots__ = ("ideal", "rep")

    def __init__(self, ideal, x):
        self.ideal = ideal
        self.rep = ideal.ring.remainder(ideal.ring(x), ideal.generator)

    @classmethod
    def _make(cls, ideal, rep):
        obj = object.__new__(cls)
        obj.ideal = ideal
        obj.rep = rep
        return obj

    @property
    def ring(self):
        return QuotientRing(self.ideal)

    def _other(self, other):
        if isinstance(other, QuotientElement):
            if other.ideal != self.ideal:
                raise ContextMismatch(f"quotients differ: {self.ideal} vs {other.ideal}")
            return other.rep
        try:
            return self.ideal.ring(other)
        except DomainError:
            return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return QuotientElement(self.ideal, self.rep + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return QuotientElement(self.ideal, self.rep - o)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return QuotientElement(self.ideal, -self.rep)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return QuotientElement(self.ideal, self.rep * o)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return quotient_invert(self) ** (-n)
        result = QuotientElement(self.ideal, self.ideal.ring.one)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self):
        return quotient_invert(self)

    def __eq__(self, other):
        if isinstance(other, QuotientElement):
            return self.ideal == other.ideal and self.rep == other.rep
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self == QuotientElement(self.ideal, o)

    def __hash__(self):
        return hash((self.ideal, self.rep))

    def __bool__(self):
        return bool(self.rep)

    def __str__(self):
        return self.ideal.ring.format(self.rep)

    def __repr__(self):
        return f"{self} mod ({self.ideal.ring.format(self.ideal.generator)})"


def project(x, ideal):
    """The canonical quotient map R -> R/I."""
    return QuotientElement(ideal, x)


def _int_xgcd(a, b):
    """Return ``(g, s, t)`` with ``s*a + t*b == g >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def quotient_invert(a):
    """Inverse of a coset by the extended Euclidean algorithm against the generator."""
    ideal = a.ideal
    g = ideal.generator
    if isinstance(ideal.ring, IntegerRing):
        if g == 1:
            return a  # zero ring: 0 * 0 = 0 = 1
        d, s, _ = _int_xgcd(a.rep, g)
        if d != 1:
            raise NotInvertible(
                f"not invertible: gcd({a.rep}, {g}) = {d}"
                + (" (zero divisor)" if a.rep else "")
            )
        return QuotientElement(ideal, s)
    if g and g.degree == 0:
        return a
    if not g:
        if a.rep and a.rep.degree == 0:
            return QuotientElement(ideal, a.rep.field.invert(a.rep.constant_term()))
        raise NotInvertible(f"not invertible: {a.rep} is not a unit of {ideal.ring}")
    d, s, _ = poly_xgcd(a.rep, g)
    if d != ideal.ring.one:
        raise NotInvertible(
            f"not invertible: gcd with the generator is {format_polynomial(d)}"
        )
    return QuotientElement(ideal, s)


class IdealClass(enum.Enum):
    ZERO = "zero"
    MAXIMAL = "proper-prime-maximal"
    PRIME_NONMAXIMAL = "proper-prime-nonmaximal"
    NONPRIME = "proper-nonprime"
    IMPROPER = "improper"

    def __str__(self):
        return self.value

    @property
    def is_prime(self):
        # Z and k[t] are integral domains, so (0) is prime but not maximal
        return self in (IdealClass.ZERO, IdealClass.MAXIMAL, IdealClass.PRIME_NONMAXIMAL)

    @property
    def is_maximal(self):
        return self is IdealClass.MAXIMAL


def _divisors(n):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _has_rational_root(q):
    coeffs = [Fraction(c) for c in q.coefficient_list()]
    den = lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    if ints[0] == 0:
        return True
    for r in _divisors(ints[0]):
        for s in _divisors(ints[-1]):
            if gcd(r, s) != 1:
                continue
            for cand in (Fraction(r, s), Fraction(-r, s)):
                if not q(cand):
                    return True
    return False


def _monic_polys(field, d):
    for tail in itertools.product(range(field.p), repeat=d):
        yield Polynomial.from_list(field, list(reversed(tail)) + [1])


def is_irreducible(q):
    """Irreducibility test for the supported instances.

    Degree 1 is irreducible over any field.  Over F_p the search tries
    every monic factor of degree <= deg/2 (deg <= 6); over Q, degrees 2 and
    3 are reducible exactly when there is a rational root.
    """
    d = q.degree
    if d is None or d == 0:
        raise DomainError("zero and constant polynomials are not irreducible elements")
    if d == 1:
        return True
    field = q.field
    if isinstance(field, PrimeField):
        if d > 6:
            raise UnsupportedError(f"classification unsupported: degree {d} > 6 over {field}")
        if sum(field.p ** k for k in range(1, d // 2 + 1)) > _FACTOR_SEARCH_BUDGET:
            raise UnsupportedError(f"classification unsupported: factor search too large over {field}")
        if any(not q(field(a)) for a in range(field.p)):
            return False
        for k in range(2, d // 2 + 1):
            for f in _monic_polys(field, k):
                if not poly_divmod(q, f)[1]:
                    return False
        return True
    if field == QQ and d <= 3:
        return not _has_rational_root(q)
    raise UnsupportedError(
        f"classification unsupported: degree {d} over {field}"
    )


def classify_ideal(ideal):
    """Place a principal ideal of Z or k[t] in the zero/prime/maximal taxonomy."""
    g = ideal.generator
    if ideal.is_zero():
        return IdealClass.ZERO
    if ideal.is_improper():
        return IdealClass.IMPROPER
    if isinstance(ideal.ring, IntegerRing):
        return IdealClass.MAXIMAL if is_prime(g) else IdealClass.NONPRIME
    # in a PID every nonzero prime ideal is maximal
    return IdealClass.MAXIMAL if is_irreducible(g) else IdealClass.NONPRIME


@dataclass(frozen=True)
class HomomorphismCheck:
    ok: bool
    witness: tuple = None
    law: str = None

    def __bool__(self):
        return self.ok


def verify_homomorphism(phi, domain=None, samples=None):
    """Check phi(a+b) = phi(a)+phi(b) and phi(ab) = phi(a)phi(b).

    Uses every pair of a finite ``domain`` (a :class:`QuotientRing` or a list
    of elements), or the given ``samples`` pairs.  On failure the first
    violating pair is reported as the witness.
    """
    if samples is None:
        if domain is None:
            raise DomainError("need a finite domain or explicit samples")
        elems = domain.elements() if hasattr(domain, "elements") else list(domain)
        samples = itertools.product(elems, repeat=2)
    for a, b in samples:
        if phi(a + b) != phi(a) + phi(b):
            return HomomorphismCheck(False, (a, b), "additive")
        if phi(a * b) != phi(a) * phi(b):
            return HomomorphismCheck(False, (a, b), "multiplicative")
    return HomomorphismCheck(True)


def kernel_of(phi, domain):
    """Elements of a finite domain mapped to zero."""
    elems = domain.elements() if hasattr(domain, "elements") else list(domain)
    return [a for a in elems if not phi(a)]


def zero_divisor_witness(quotient):
    """First pair of nonzero elements with product zero, or ``None``."""
    elems = [a for a in quotient.elements() if a]
    for a, b in itertools.product(elems, repeat=2):
        if not (a * b):
            return a, b
    return None
