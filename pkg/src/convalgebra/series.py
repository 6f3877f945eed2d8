"""Formal power series, Laurent series and rational functions.

Power series in n variables are coefficient streams on W^n.  Laurent
series are a starting exponent plus a stream on W.  Rational functions are
normalized numerator/denominator pairs that embed into Laurent series.

Nothing here can decide whether a stream is zero; wherever a leading
coefficient has to be found, the caller supplies a probe depth.
"""

from __future__ import annotations

from dataclasses import dataclass

from .convolution import CoefStream, convolve_stream
from .errors import ContextMismatch, DomainError, NotInvertible
from .expr import parse_with
from .monoid import MultiIndex, Wholes
from .poly import (
    Polynomial,
    PolynomialBuilder,
    UnitalAlgebra,
    format_polynomial,
    poly_gcd,
    poly_divmod,
)

__all__ = [
    "AtLeast",
    "LaurentSeries",
    "PowerSeries",
    "PowerSeriesAlgebra",
    "RationalFunction",
    "invert_series",
    "laurent_add",
    "laurent_mul",
    "laurent_reciprocal",
    "parse_rational_function",
    "rat_equal",
    "rational_to_laurent",
    "vanishing_order",
]

W = Wholes()


def _invert_stream(s):
    """Multiplicative inverse of a stream on W or W^n with nonzero constant term.

    Writes s = c(1 - p) with p of positive order and builds u = sum p^l
    through the fixed-point form u = 1 + p*u: the coefficient of u at z
    needs p only at nonzero x <= z and u only strictly below z, so every
    coefficient is a finite computation.  Returns u / c.
    """
    E = s.monoid
    field = s.field
    e = E.identity
    c = s[e]
    if not c:
        raise NotInvertible("not invertible: constant term is 0")
    inv_c = field.invert(c)
    u = {}

    def fill(z):
        # all x <= z, lowest grade first, so each step only reads computed values
        box = sorted((x for x, _ in E.decompose(z)), key=E.sort_key)
        for g in box:
            if g in u:
                continue
            total = field.one if g == e else field.zero
            for x, y in E.decompose(g):
                if x != e:
                    sx = s[x]
                    if sx:
                        # p_x = -s_x / c
                        total = total - sx * inv_c * u[y]
            u[g] = total
        return u[z]

    return CoefStream(E, field, lambda z: fill(z) * inv_c)


@dataclass(frozen=True)
class AtLeast:
    """Result of a vanishing-order probe that found no nonzero coefficient."""

    bound: int

    def __str__(self):
        return f">= {self.bound}"


class PowerSeries:
    """A formal power series in ``nvars`` variables over ``field``."""

    def __init__(self, nvars, field, stream):
        monoid = MultiIndex(nvars)
        if callable(stream) and not isinstance(stream, CoefStream):
            stream = CoefStream(monoid, field, stream)
        if stream.monoid != monoid or stream.field != field:
            raise ContextMismatch("stream does not live on W^nvars over the field")
        self.nvars = nvars
        self.field = field
        self.stream = stream

    @classmethod
    def from_polynomial(cls, p):
        return cls(p.nvars, p.field, CoefStream.from_finsupp(p.coeffs))

    @classmethod
    def constant(cls, nvars, field, c):
        p = Polynomial.constant(nvars, field, c)
        return cls.from_polynomial(p)

    @classmethod
    def one(cls, nvars, field):
        return cls.constant(nvars, field, 1)

    @classmethod
    def geometric(cls, field):
        """1 + t + t^2 + ... = 1/(1 - t)."""
        return cls(1, field, lambda a: field.one)

    def __getitem__(self, alpha):
        if isinstance(alpha, int):
            alpha = (alpha,)
        return self.stream[alpha]

    coef = __getitem__

    def _coerce(self, other):
        if isinstance(other, PowerSeries):
            if other.nvars != self.nvars or other.field != self.field:
                raise ContextMismatch("power series rings differ")
            return other
        if isinstance(other, Polynomial):
            return PowerSeries.from_polynomial(other)
        try:
            return PowerSeries.constant(self.nvars, self.field, self.field(other))
        except DomainError:
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return PowerSeries(self.nvars, self.field, self.stream + other.stream)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(self.nvars, self.field, -self.stream)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return PowerSeries(self.nvars, self.field, self.stream - other.stream)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (PowerSeries, Polynomial)):
            other = self._coerce(other)
            return PowerSeries(self.nvars, self.field, convolve_stream(self.stream, other.stream))
        try:
            c = self.field(other)
        except DomainError:
            return NotImplemented
        return PowerSeries(self.nvars, self.field, self.stream.scale(c))

    __rmul__ = __mul__

    def inverse(self):
        return invert_series(self)

    def truncate(self, order):
        """The polynomial of all terms with total degree < ``order``."""
        return Polynomial(self.nvars, self.field, self.stream.truncate(order))

    def agrees_with(self, other, order):
        return self.stream.agrees_with(self._coerce(other).stream, order)

    def coefficients(self, order):
        """Univariate coefficient list c_0, ..., c_{order-1}."""
        if self.nvars != 1:
            raise DomainError("coefficient lists are for one variable; use truncate()")
        return [self.stream[(j,)] for j in range(order)]

    def __repr__(self):
        return f"PowerSeries({self.nvars}, {self.field}, {format_polynomial(self.truncate(6))} + ...)"


def vanishing_order(s, probe):
    """Least total degree below ``probe`` carrying a nonzero coefficient.

    Returns ``AtLeast(probe)`` if every scanned coefficient vanishes.
    """
    if probe < 0:
        raise DomainError("probe must be nonnegative")
    monoid = s.stream.monoid
    for d in range(probe):
        if any(s.stream[a] for a in monoid.elements_of_grade(d)):
            return d
    return AtLeast(probe)


def invert_series(s):
    """Inverse of a power series with nonzero constant term, computed lazily."""
    return PowerSeries(s.nvars, s.field, _invert_stream(s.stream))


class PowerSeriesAlgebra(UnitalAlgebra):
    def __init__(self, field, nvars):
        self.field = field
        self.nvars = nvars

    def zero(self):
        return PowerSeries.constant(self.nvars, self.field, 0)

    def one(self):
        return PowerSeries.one(self.nvars, self.field)

    def coerce(self, a):
        if isinstance(a, PowerSeries):
            return a
        if isinstance(a, Polynomial):
            return PowerSeries.from_polynomial(a)
        return PowerSeries.constant(self.nvars, self.field, a)


class LaurentSeries:
    """sum_{j >= start} c_j t^j, with ``stream[j] = c_{start + j}``.

    ``start`` is a lower bound for the support, not necessarily the index
    of the first nonzero coefficient; :meth:`normalized` advances it.
    """

    def __init__(self, field, start, stream):
        if callable(stream) and not isinstance(stream, CoefStream):
            stream = CoefStream(W, field, stream)
        if stream.monoid != W or stream.field != field:
            raise ContextMismatch("Laurent coefficients must be a stream on W over the field")
        self.field = field
        self.start = int(start)
        self.stream = stream

    @classmethod
    def zero(cls, field):
        return cls(field, 0, lambda j: field.zero)

    @classmethod
    def from_polynomial(cls, p, shift=0):
        """The Laurent series t^shift * p(t) for a univariate polynomial p."""
        if p.nvars != 1:
            raise DomainError("Laurent series are in one variable")
        if not p:
            return cls.zero(p.field)
        low = p.order()
        return cls(p.field, low + shift, lambda j: p[(low + j,)])

    @classmethod
    def monomial(cls, field, exponent, c=1):
        c = field(c)
        return cls(field, exponent, lambda j: c if j == 0 else field.zero)

    def coef(self, j):
        if j < self.start:
            return self.field.zero
        return self.stream[j - self.start]

    __getitem__ = coef

    def coefficients(self, lo, hi):
        return [self.coef(j) for j in range(lo, hi)]

    def leading_index(self, probe):
        """First index in [start, start + probe) with a nonzero coefficient."""
        for j in range(probe):
            if self.stream[j]:
                return self.start + j
        return None

    def normalized(self, probe):
        v = self.leading_index(probe)
        if v is None or v == self.start:
            return self
        shift = v - self.start
        return LaurentSeries(self.field, v, lambda j: self.stream[j + shift])

    def _check(self, other):
        if not isinstance(other, LaurentSeries) or other.field != self.field:
            raise ContextMismatch("Laurent series over different fields")

    def __add__(self, other):
        return laurent_add(self, other)

    def __neg__(self):
        return LaurentSeries(self.field, self.start, -self.stream)

    def __sub__(self, other):
        return laurent_add(self, -other)

    def __mul__(self, other):
        if isinstance(other, LaurentSeries):
            return laurent_mul(self, other)
        c = self.field(other)
        return LaurentSeries(self.field, self.start, self.stream.scale(c))

    __rmul__ = __mul__

    def reciprocal(self, probe):
        return laurent_reciprocal(self, probe)

    def agrees_with(self, other, upto):
        """Coefficientwise equality for every index <= ``upto``."""
        lo = min(self.start, other.start)
        return all(self.coef(j) == other.coef(j) for j in range(lo, upto + 1))

    def __repr__(self):
        head = ", ".join(
            f"{j}: {self.field.format_coefficient(c)}"
            for j, c in zip(range(self.start, self.start + 6), self.coefficients(self.start, self.start + 6))
        )
        return f"LaurentSeries({self.field}, {{{head}, ...}})"


def laurent_add(r, s):
    r._check(s)
    start = min(r.start, s.start)
    return LaurentSeries(r.field, start, lambda j: r.coef(start + j) + s.coef(start + j))


def laurent_mul(r, s):
    """Product; starts at r.start + s.start with convolved coefficient streams."""
    r._check(s)
    return LaurentSeries(r.field, r.start + s.start, convolve_stream(r.stream, s.stream))


def laurent_reciprocal(r, probe):
    """1/r, after certifying a nonzero coefficient within ``probe`` terms.

    With r = c_v t^v (1 + higher terms) the result is
    c_v^{-1} t^{-v} times the inverse power series of the unit part.
    """
    v = r.leading_index(probe)
    if v is None:
        raise DomainError(
            f"cannot certify nonzero: first {probe} coefficients vanish; increase probe",
            code="uncertified",
        )
    shift = v - r.start
    unit = CoefStream(W, r.field, lambda j: r.stream[j + shift])
    return LaurentSeries(r.field, -v, _invert_stream(unit))


class RationalFunction:
    """p(t)/q(t) over a field, q nonzero.

    By default the pair is reduced (gcd removed, q monic).  Passing
    ``normalize=False`` keeps the raw pair, which is what equality by
    cross-multiplication is about.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, normalize=True):
        if den is None:
            den = Polynomial.one(1, num.field)
        if num.nvars != 1 or den.nvars != 1:
            raise DomainError("rational functions are in one variable")
        if num.field != den.field:
            raise ContextMismatch("numerator and denominator over different fields")
        if not den:
            raise NotInvertible("denominator is the zero polynomial")
        if normalize:
            if not num:
                den = Polynomial.one(1, num.field)
            else:
                g = poly_gcd(num, den)
                num = poly_divmod(num, g)[0]
                den = poly_divmod(den, g)[0]
                lc = den.leading_coefficient()
                inv = num.field.invert(lc)
                num, den = num * inv, den * inv
        self.num = num
        self.den = den

    @property
    def field(self):
        return self.num.field

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.field != self.field:
                raise ContextMismatch("rational functions over different fields")
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        try:
            return RationalFunction(Polynomial.constant(1, self.field, self.field(other)))
        except DomainError:
            return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, normalize=False)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def reciprocal(self):
        if not self.num:
            raise NotInvertible("not invertible: the zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.reciprocal()

    def __pow__(self, n):
        if n < 0:
            return self.reciprocal() ** (-n)
        return RationalFunction(self.num ** n, self.den ** n)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return rat_equal(self, o)

    def __hash__(self):
        n = RationalFunction(self.num, self.den)
        return hash((n.num, n.den))

    def to_power_series(self):
        """Expansion at t = 0; needs a denominator with nonzero constant term."""
        return PowerSeries.from_polynomial(self.num) * invert_series(
            PowerSeries.from_polynomial(self.den)
        )

    def __str__(self):
        if self.den == 1:
            return format_polynomial(self.num)
        return f"({format_polynomial(self.num)}) / ({format_polynomial(self.den)})"

    __repr__ = __str__


def rat_equal(r1, r2):
    """p1/q1 == p2/q2 iff p1*q2 - p2*q1 is the zero polynomial."""
    if r1.field != r2.field:
        raise ContextMismatch("rational functions over different fields")
    return not (r1.num * r2.den - r2.num * r1.den)


def rational_to_laurent(r, probe=None):
    """Embed a rational function in the Laurent series field.

    The result starts at ord(p) - ord(q), the lowest exponents of
    numerator and denominator.
    """
    if not r.num:
        return LaurentSeries.zero(r.field)
    if probe is None:
        probe = r.den.degree + 1
    num = LaurentSeries.from_polynomial(r.num)
    den = LaurentSeries.from_polynomial(r.den)
    return laurent_mul(num, laurent_reciprocal(den, probe))


class RationalFunctionBuilder(PolynomialBuilder):
    def __init__(self, field):
        super().__init__(field, 1)

    def const(self, c):
        return RationalFunction(Polynomial.constant(1, self.field, c))

    def variable(self, name):
        if name == "i":
            return self.imag("")
        return RationalFunction(super().variable(name))

    def div(self, a, b):
        return a / b

    def power(self, a, n):
        return a ** n


def parse_rational_function(text, field):
    """Parse an expression in t with ``+ - * / ^`` into a rational function."""
    return parse_with(text, RationalFunctionBuilder(field))
