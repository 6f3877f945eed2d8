"""Polynomials in n variables as finitely supported functions on W^n.

Multiplication is convolution over the multi-index monoid.  Polynomials
can be evaluated in any commutative unital algebra implementing the small
:class:`UnitalAlgebra` contract; composition is evaluation in another
polynomial algebra.  Univariate division, gcd and extended gcd live here
as well, since ideals and rational functions both need them.
"""

from __future__ import annotations

from fractions import Fraction

from .convolution import FinSupp, convolve_finite
from .errors import ContextMismatch, DomainError, NotInvertible, ParseError
from .expr import infer_nvars, parse_with, variable_index
from .monoid import MultiIndex
from .scalars import CC, FpElement

__all__ = [
    "FieldAlgebra",
    "Polynomial",
    "PolynomialAlgebra",
    "ProductAlgebra",
    "UnitalAlgebra",
    "compose",
    "evaluate",
    "homogeneous_component",
    "parse_polynomial",
    "poly_divmod",
    "poly_gcd",
    "poly_mul",
    "poly_xgcd",
    "total_degree",
]


class Polynomial:
    """A polynomial in ``nvars`` variables over ``field``.

    ``coeffs`` maps multi-indices (tuples of length ``nvars``) to
    coefficients; it may be a dict or a :class:`FinSupp` over W^nvars.
    """

    __slots__ = ("nvars", "field", "coeffs")

    def __init__(self, nvars, field, coeffs=()):
        monoid = MultiIndex(nvars)
        if isinstance(coeffs, FinSupp):
            if coeffs.monoid != monoid or coeffs.field != field:
                raise ContextMismatch("coefficient support does not match polynomial ring")
            fs = coeffs
        else:
            fs = FinSupp(monoid, field, coeffs)
        self.nvars = nvars
        self.field = field
        self.coeffs = fs

    @classmethod
    def _of(cls, fs):
        obj = object.__new__(cls)
        obj.nvars = fs.monoid.n
        obj.field = fs.field
        obj.coeffs = fs
        return obj

    @classmethod
    def constant(cls, nvars, field, c):
        return cls(nvars, field, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars, field):
        return cls.constant(nvars, field, 1)

    @classmethod
    def zero(cls, nvars, field):
        return cls(nvars, field)

    @classmethod
    def variable(cls, i, nvars, field):
        """The coordinate polynomial t_{i+1}."""
        return cls(nvars, field, {MultiIndex(nvars).unit_vector(i): 1})

    @classmethod
    def monomial(cls, alpha, field, c=1):
        return cls(len(alpha), field, {tuple(alpha): c})

    @classmethod
    def from_list(cls, field, coefficients):
        """Univariate polynomial from ``[c0, c1, ...]``."""
        return cls(1, field, {(j,): c for j, c in enumerate(coefficients) if field(c)})

    # basic access

    def __getitem__(self, alpha):
        if isinstance(alpha, int):
            alpha = (alpha,)
        return self.coeffs[alpha]

    def terms(self):
        return list(self.coeffs.items())

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars or other.field != self.field:
                raise ContextMismatch(
                    f"polynomial rings differ: {self.nvars} vars over {self.field} "
                    f"vs {other.nvars} vars over {other.field}"
                )
            return other
        try:
            return Polynomial.constant(self.nvars, self.field, self.field(other))
        except DomainError:
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial._of(self.coeffs + other.coeffs)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._of(-self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial._of(self.coeffs - other.coeffs)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return poly_mul(self, other)
        try:
            c = self.field(other)
        except DomainError:
            return NotImplemented
        return Polynomial._of(self.coeffs.scale(c))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise DomainError("negative powers of polynomials are not polynomials")
        result = Polynomial.one(self.nvars, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # grading

    def total_degree(self):
        """Largest |alpha| in the support, or ``None`` for the zero polynomial."""
        if not self.coeffs:
            return None
        return max(sum(a) for a in self.coeffs.keys())

    def homogeneous_component(self, l):
        return Polynomial._of(
            FinSupp._make(
                self.coeffs.monoid,
                self.field,
                {a: c for a, c in self.coeffs.items() if sum(a) == l},
            )
        )

    def is_homogeneous(self, l=None):
        degrees = {sum(a) for a in self.coeffs.keys()}
        if l is None:
            return len(degrees) <= 1
        return degrees <= {l}

    def constant_term(self):
        return self.coeffs[(0,) * self.nvars]

    # univariate helpers

    def _univariate(self):
        if self.nvars != 1:
            raise DomainError("operation only defined for polynomials in one variable")

    @property
    def degree(self):
        """Degree of a univariate polynomial (``None`` for zero)."""
        self._univariate()
        return self.total_degree()

    def leading_coefficient(self):
        self._univariate()
        d = self.degree
        return self.field.zero if d is None else self.coeffs[(d,)]

    def order(self):
        """Lowest power with a nonzero coefficient (``None`` for zero)."""
        self._univariate()
        if not self.coeffs:
            return None
        return min(a[0] for a in self.coeffs.keys())

    def coefficient_list(self):
        self._univariate()
        d = self.degree
        if d is None:
            return []
        return [self.coeffs[(j,)] for j in range(d + 1)]

    def monic(self):
        lc = self.leading_coefficient()
        if not lc:
            return self
        return self * self.field.invert(lc)

    def shift(self, k):
        """Multiply a univariate polynomial by t^k (k may be negative if exact)."""
        self._univariate()
        return Polynomial(1, self.field, {(a[0] + k,): c for a, c in self.terms()})

    def __call__(self, *args):
        return evaluate(self, list(args))

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self.nvars}, {self.field}, {format_polynomial(self)!r})"


def poly_mul(p, q):
    """Product of two polynomials: convolution of their coefficient functions."""
    if p.nvars != q.nvars or p.field != q.field:
        raise ContextMismatch(
            f"cannot multiply polynomials in {p.nvars} and {q.nvars} variables "
            f"over {p.field} and {q.field}"
        )
    return Polynomial._of(convolve_finite(p.coeffs, q.coeffs))


def total_degree(p):
    return p.total_degree()


def homogeneous_component(p, l):
    return p.homogeneous_component(l)


# evaluation in unital algebras

class UnitalAlgebra:
    """Minimal contract for a commutative unital algebra over a field."""

    field = None

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def scale(self, c, a):
        return c * a

    def coerce(self, a):
        return a

    def power(self, a, n):
        result = self.one()
        while n:
            if n & 1:
                result = self.mul(result, a)
            n >>= 1
            if n:
                a = self.mul(a, a)
        return result


class FieldAlgebra(UnitalAlgebra):
    """The scalar field viewed as an algebra over itself."""

    def __init__(self, field):
        self.field = field

    def zero(self):
        return self.field.zero

    def one(self):
        return self.field.one

    def coerce(self, a):
        return self.field(a)


class ProductAlgebra(UnitalAlgebra):
    """k^n with coordinatewise operations."""

    def __init__(self, field, n):
        self.field = field
        self.n = n

    def zero(self):
        return (self.field.zero,) * self.n

    def one(self):
        return (self.field.one,) * self.n

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def mul(self, a, b):
        return tuple(x * y for x, y in zip(a, b))

    def scale(self, c, a):
        return tuple(c * x for x in a)

    def coerce(self, a):
        a = tuple(self.field(x) for x in a)
        if len(a) != self.n:
            raise DomainError(f"expected a {self.n}-tuple")
        return a


class PolynomialAlgebra(UnitalAlgebra):
    def __init__(self, field, nvars):
        self.field = field
        self.nvars = nvars

    def zero(self):
        return Polynomial.zero(self.nvars, self.field)

    def one(self):
        return Polynomial.one(self.nvars, self.field)

    def coerce(self, a):
        if not isinstance(a, Polynomial):
            return Polynomial.constant(self.nvars, self.field, a)
        if a.nvars != self.nvars or a.field != self.field:
            raise ContextMismatch("argument not in the target polynomial algebra")
        return a


def evaluate(p, args, algebra=None):
    """Substitute ``args`` for the variables of ``p`` inside ``algebra``.

    Without an explicit algebra the arguments are taken to be scalars of
    ``p.field``.  The constant polynomial 1 goes to ``algebra.one()``.
    """
    if len(args) != p.nvars:
        raise DomainError(f"expected {p.nvars} argument(s), got {len(args)}", code="arity")
    A = algebra if algebra is not None else FieldAlgebra(p.field)
    args = [A.coerce(a) for a in args]
    # cache successive powers of each argument
    powers = [{0: A.one(), 1: a} for a in args]

    def pw(i, k):
        cache = powers[i]
        if k not in cache:
            cache[k] = A.power(args[i], k)
        return cache[k]

    result = A.zero()
    for alpha, c in p.terms():
        term = None
        for i, k in enumerate(alpha):
            if k:
                term = pw(i, k) if term is None else A.mul(term, pw(i, k))
        if term is None:
            term = A.one()
        result = A.add(result, A.scale(c, term))
    return result


def compose(p, qs):
    """Substitute the polynomials ``qs`` (all in m variables) into ``p``."""
    if len(qs) != p.nvars:
        raise DomainError(f"expected {p.nvars} polynomial(s), got {len(qs)}", code="arity")
    if not qs:
        raise DomainError("nothing to compose with")
    m = qs[0].nvars
    for q in qs:
        if q.nvars != m or q.field != p.field:
            raise ContextMismatch("substituted polynomials must share ring and field")
    return evaluate(p, list(qs), PolynomialAlgebra(p.field, m))


# univariate Euclidean algorithm

def poly_divmod(a, b):
    """Quotient and remainder of univariate polynomials, deg r < deg b."""
    if a.nvars != 1 or b.nvars != 1:
        raise DomainError("division is only defined for one variable")
    if not b:
        raise NotInvertible("division by the zero polynomial")
    field = a.field
    db = b.degree
    inv_lc = field.invert(b.leading_coefficient())
    rem = dict(a.coeffs.items())
    quo = {}
    bterms = [(e[0], c) for e, c in b.terms()]
    while rem:
        dr = max(e[0] for e in rem)
        if dr < db:
            break
        c = rem[(dr,)] * inv_lc
        shift = dr - db
        quo[(shift,)] = c
        for e, bc in bterms:
            k = (e + shift,)
            v = rem.get(k, field.zero) - c * bc
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return Polynomial(1, field, quo), Polynomial(1, field, rem)


def poly_gcd(a, b):
    """Monic gcd (zero if both inputs are zero)."""
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def poly_xgcd(a, b):
    """Return ``(g, s, t)`` with ``s*a + t*b == g`` and ``g`` monic."""
    field = a.field
    r0, r1 = a, b
    s0, s1 = Polynomial.one(1, field), Polynomial.zero(1, field)
    t0, t1 = Polynomial.zero(1, field), Polynomial.one(1, field)
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    inv = field.invert(r0.leading_coefficient())
    return r0 * inv, s0 * inv, t0 * inv


# text syntax

class PolynomialBuilder:
    """Expression-parser builder producing :class:`Polynomial` values."""

    def __init__(self, field, nvars):
        self.field = field
        self.nvars = nvars

    def const(self, c):
        return Polynomial.constant(self.nvars, self.field, c)

    def number(self, text):
        if self.field is CC:
            return self.const(float(text))
        if "." in text or "e" in text.lower():
            c = Fraction(text)
            if c.denominator != 1 and not self.field.exact:
                return self.const(float(c))
            return self.const(self.field(c))
        return self.const(int(text))

    def imag(self, text):
        if self.field is not CC:
            raise ParseError(f"imaginary literal in a polynomial over {self.field}")
        return self.const(complex(0.0, float(text) if text else 1.0))

    def variable(self, name):
        if name == "i":
            return self.imag("")
        return Polynomial.variable(variable_index(name, self.nvars), self.nvars, self.field)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if b.total_degree() not in (0,):
            raise ParseError("polynomials can only be divided by nonzero constants")
        return a * self.field.invert(b.constant_term())

    def power(self, a, n):
        if n < 0:
            raise ParseError("negative exponent in a polynomial")
        return a ** n


def parse_polynomial(text, field, nvars=None):
    """Parse ``c*t1^a1*t2^a2 + ...`` (``t`` alone when there is one variable)."""
    if nvars is None:
        nvars = infer_nvars(text)
    return parse_with(text, PolynomialBuilder(field, nvars))


def _format_scalar(field, c):
    """Coefficient text and whether it was negated into the sign."""
    if isinstance(c, Fraction):
        if c < 0:
            return field.format_coefficient(-c), True
        return field.format_coefficient(c), False
    if isinstance(c, FpElement):
        return field.format_coefficient(c), False
    return "(" + field.format(c) + ")", False


def format_polynomial(p):
    if not p:
        return "0"
    names = ["t"] if p.nvars == 1 else [f"t{i + 1}" for i in range(p.nvars)]
    parts = []
    for alpha, c in p.terms():
        text, negative = _format_scalar(p.field, c)
        mono = "*".join(
            names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(alpha) if k
        )
        if mono:
            body = mono if text == "1" else f"{text}*{mono}"
        else:
            body = text
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(parts)
