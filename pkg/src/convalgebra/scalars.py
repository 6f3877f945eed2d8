"""Scalar fields: exact rationals, prime fields F_p and double-precision complex.

Each field is a small descriptor object that knows how to build, parse,
print and invert its elements.  The elements themselves are ordinary
Python numbers wherever possible (:class:`fractions.Fraction`,
:class:`complex`); prime-field elements are :class:`FpElement`.  All of
them support ``+ - * /`` and ``bool()`` (false exactly for zero), which is
what the generic algebra code relies on.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Integral, Rational as _RationalABC

from .errors import DomainError, NotInvertible, ParseError

__all__ = [
    "QQ",
    "CC",
    "ComplexField",
    "Field",
    "FpElement",
    "PrimeField",
    "RationalField",
    "characteristic",
    "conjugate",
    "field_invert",
    "format_float",
    "is_prime",
    "modulus",
    "normalize_rational",
    "parse_field",
]


def normalize_rational(num, den):
    """Return ``num/den`` in lowest terms with a positive denominator."""
    if den == 0:
        raise DomainError("zero denominator", code="zero-denominator")
    return Fraction(int(num), int(den))


def is_prime(n):
    """Deterministic trial division; adequate for desk-scale moduli."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


def format_float(x):
    """Canonical float rendering: 9 significant digits, ``-0`` folded to ``0``."""
    s = f"{x:.9g}"
    if s in ("-0", "-0e+00"):
        return "0"
    return s


class Field:
    """Common interface of the scalar fields."""

    name = "?"
    exact = True

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, value):
        raise NotImplementedError

    def characteristic(self):
        raise NotImplementedError

    def invert(self, x):
        x = self(x)
        if not x:
            raise NotInvertible("not invertible: zero has no multiplicative inverse")
        return self.one / x

    def contains(self, x):
        raise NotImplementedError

    def parse(self, text):
        raise NotImplementedError

    def format(self, x):
        """Text encoding used by coefficient files."""
        raise NotImplementedError

    def format_coefficient(self, x):
        """Shorter rendering used inside polynomial expressions and tables."""
        return self.format(x)

    def __repr__(self):
        return self.name


class RationalField(Field):
    """The field Q, with :class:`fractions.Fraction` elements."""

    name = "Q"

    def __call__(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (Integral, _RationalABC)):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        raise DomainError(f"cannot interpret {value!r} as a rational number")

    def characteristic(self):
        return 0

    def contains(self, x):
        return isinstance(x, Fraction)

    def parse(self, text):
        s = text.strip()
        try:
            if "/" in s:
                a, b = s.split("/")
                return normalize_rational(int(a), int(b))
            # decimal strings are exact, e.g. "1.25" -> 5/4
            return Fraction(s)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"invalid rational {text!r}") from None

    def format(self, x):
        x = self(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class FpElement:
    """An element of the prime field F_p; ``value`` is kept reduced."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise DomainError(
                    f"cannot mix F_{self.p} and F_{other.p}", code="context-mismatch"
                )
            return other.value
        if isinstance(other, Integral):
            return int(other)
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise NotInvertible(f"denominator of {other} vanishes in F_{self.p}")
            return other.numerator * pow(other.denominator, -1, self.p)
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpElement(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpElement(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpElement(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpElement(self.value * v, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def __pos__(self):
        return self

    def inverse(self):
        if self.value == 0:
            raise NotInvertible(f"not invertible: 0 in F_{self.p}")
        return FpElement(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self * FpElement(v, self.p).inverse()

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpElement(v, self.p) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return FpElement(pow(self.value, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} mod {self.p}"


class PrimeField(Field):
    """The field of integers modulo a prime ``p``."""

    def __init__(self, p):
        p = int(p)
        if not is_prime(p):
            raise DomainError(f"modulus {p} is not prime", code="not-prime")
        self.p = p
        self.name = f"F{p}"

    def __call__(self, value):
        if isinstance(value, FpElement):
            if value.p != self.p:
                raise DomainError(
                    f"element of F_{value.p} used in F_{self.p}", code="context-mismatch"
                )
            return value
        if isinstance(value, Integral):
            return FpElement(int(value), self.p)
        if isinstance(value, Fraction):
            return FpElement(value.numerator, self.p) / value.denominator
        if isinstance(value, str):
            return self.parse(value)
        raise DomainError(f"cannot interpret {value!r} in F_{self.p}")

    def characteristic(self):
        return self.p

    def contains(self, x):
        return isinstance(x, FpElement) and x.p == self.p

    def elements(self):
        return [FpElement(v, self.p) for v in range(self.p)]

    def parse(self, text):
        s = text.strip()
        m = re.fullmatch(r"(-?\d+)(?:\s*/\s*(\d+))?(?:\s+mod\s+(\d+))?", s)
        if not m:
            raise ParseError(f"invalid F_{self.p} element {text!r}")
        if m.group(3) is not None and int(m.group(3)) != self.p:
            raise ParseError(f"element {text!r} does not belong to F_{self.p}")
        x = FpElement(int(m.group(1)), self.p)
        if m.group(2) is not None:
            x = x / int(m.group(2))
        return x

    def format(self, x):
        return f"{self(x).value} mod {self.p}"

    def format_coefficient(self, x):
        return str(self(x).value)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))


def _split_complex(s):
    """Split ``x+yi`` into its real and imaginary texts (``None`` if absent)."""
    if not s.endswith("i"):
        return s, None
    body = s[:-1]
    for k in range(len(body) - 1, 0, -1):
        if body[k] in "+-" and body[k - 1] not in "eE":
            return body[:k], body[k:]
    return None, body


def _imag_value(text):
    if text in ("", "+"):
        return 1.0
    if text == "-":
        return -1.0
    return float(text)


class ComplexField(Field):
    """Double-precision complex numbers; only finite values are admitted."""

    name = "C"
    exact = False

    def __call__(self, value):
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, FpElement):
            raise DomainError("cannot embed a prime-field element in C")
        try:
            z = complex(value)
        except TypeError:
            raise DomainError(f"cannot interpret {value!r} as a complex number") from None
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise DomainError(f"non-finite complex value {z!r}", code="non-finite")
        return z

    def characteristic(self):
        return 0

    def contains(self, x):
        return isinstance(x, complex)

    def parse(self, text):
        s = text.replace(" ", "")
        try:
            re_s, im_s = _split_complex(s)
            re_part = float(re_s) if re_s else 0.0
            im_part = _imag_value(im_s) if im_s is not None else 0.0
        except ValueError:
            raise ParseError(f"invalid complex number {text!r}") from None
        return self(complex(re_part, im_part))

    def format(self, x):
        z = self(x)
        re_s = format_float(z.real)
        im_s = format_float(z.imag)
        if im_s.startswith("-"):
            return f"{re_s}-{im_s[1:]}i"
        return f"{re_s}+{im_s}i"

    def __eq__(self, other):
        return isinstance(other, ComplexField)

    def __hash__(self):
        return hash("C")


QQ = RationalField()
CC = ComplexField()


def parse_field(text):
    """Parse a field name: ``Q``, ``C``, ``Fp:<p>`` or ``F<p>``."""
    s = text.strip()
    if s == "Q":
        return QQ
    if s == "C":
        return CC
    m = re.fullmatch(r"(?:Fp:|F_?|GF\()(\d+)\)?", s)
    if m:
        return PrimeField(int(m.group(1)))
    raise ParseError(f"unknown field {text!r} (expected Q, C or Fp:<p>)")


def field_of(x):
    """Best-effort field of a bare scalar."""
    if isinstance(x, FpElement):
        return PrimeField(x.p)
    if isinstance(x, complex):
        return CC
    if isinstance(x, (Fraction, Integral)):
        return QQ
    raise DomainError(f"{x!r} is not a scalar")


def field_invert(x):
    """Multiplicative inverse of a nonzero scalar in its own field."""
    return field_of(x).invert(x)


def characteristic(field):
    return field.characteristic()


def modulus(z):
    """|z| for a complex scalar."""
    z = CC(z)
    return math.hypot(z.real, z.imag)


def conjugate(z):
    return CC(z).conjugate()
