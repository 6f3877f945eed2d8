"""Function algebras on a monoid: pointwise structure and convolution.

:class:`FinSupp` is a finitely supported function E -> k.  With pointwise
product it is the ring of finitely supported functions; with convolution
(the ``*`` operator) it is the convolution algebra over E.

:class:`CoefStream` is a total function on a monoid with the
finite-decomposition property, computed lazily and memoized.  Convolution
of two streams is again a stream, which gives the full convolution algebra
(formal power series when E = W^n).
"""

from __future__ import annotations

import re
import threading

from .errors import ContextMismatch, InfiniteDecomposition, ParseError

__all__ = [
    "CoefStream",
    "FinSupp",
    "LazyFunction",
    "convolve_finite",
    "convolve_mixed",
    "convolve_stream",
    "delta",
    "format_coefficients",
    "pointwise_add",
    "pointwise_mul",
    "read_coefficients",
    "support",
]


class FinSupp:
    """A finitely supported function from a monoid into a scalar field.

    Entries are kept in canonical key order with zeros purged, so two
    equal functions compare, hash and print identically.
    """

    __slots__ = ("monoid", "field", "_entries")

    def __init__(self, monoid, field, entries=()):
        if hasattr(entries, "items"):
            entries = entries.items()
        acc = {}
        for key, value in entries:
            key = monoid.check(key)
            if key in acc:
                raise ValueError(f"duplicate key {key!r}")
            acc[key] = field(value)
        self.monoid = monoid
        self.field = field
        self._entries = _canonical(monoid, acc)

    @classmethod
    def _make(cls, monoid, field, acc):
        # acc: dict of already-canonical keys and field values, zeros allowed
        obj = object.__new__(cls)
        obj.monoid = monoid
        obj.field = field
        obj._entries = _canonical(monoid, acc)
        return obj

    def _like(self, acc):
        return type(self)._make(self.monoid, self.field, acc)

    @classmethod
    def zero(cls, monoid, field):
        return cls._make(monoid, field, {})

    # mapping-style access; missing keys are zero
    def __getitem__(self, x):
        return self._entries.get(x, self.field.zero)

    def __call__(self, x):
        return self[x]

    def items(self):
        return self._entries.items()

    def keys(self):
        return self._entries.keys()

    def __len__(self):
        return len(self._entries)

    def __bool__(self):
        return bool(self._entries)

    def support(self):
        return frozenset(self._entries)

    def _check_context(self, other):
        if not isinstance(other, FinSupp):
            raise ContextMismatch(f"expected a finitely supported function, got {other!r}")
        if self.monoid != other.monoid or self.field != other.field:
            raise ContextMismatch(
                f"context mismatch: ({self.monoid}, {self.field}) "
                f"vs ({other.monoid}, {other.field})"
            )

    def __add__(self, other):
        if not isinstance(other, FinSupp):
            return NotImplemented
        self._check_context(other)
        acc = dict(self._entries)
        for k, v in other.items():
            acc[k] = acc[k] + v if k in acc else v
        return self._like(acc)

    def __neg__(self):
        return self._like({k: -v for k, v in self.items()})

    def __sub__(self, other):
        if not isinstance(other, FinSupp):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        c = self.field(c)
        return self._like({k: c * v for k, v in self.items()})

    def __rmul__(self, c):
        if isinstance(c, FinSupp):
            return NotImplemented
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, FinSupp):
            return convolve_finite(self, other)
        if isinstance(other, LazyFunction):
            return convolve_mixed(self, other)
        return self.scale(other)

    def pointwise_mul(self, other):
        self._check_context(other)
        small, big = (self, other) if len(self) <= len(other) else (other, self)
        acc = {}
        for k, v in small.items():
            if k in big._entries:
                acc[k] = v * big._entries[k]
        return self._like(acc)

    def map_keys(self, fn, monoid):
        """Push the function forward along an injective key map into ``monoid``."""
        acc = {}
        for k, v in self.items():
            acc[monoid.check(fn(k))] = v
        return type(self)._make(monoid, self.field, acc)

    def __eq__(self, other):
        if not isinstance(other, FinSupp):
            return NotImplemented
        return (
            self.monoid == other.monoid
            and self.field == other.field
            and self._entries == other._entries
        )

    def __hash__(self):
        return hash((self.monoid, self.field, frozenset(self._entries.items())))

    def __repr__(self):
        body = ", ".join(
            f"{self.monoid.format(k)}: {self.field.format_coefficient(v)}"
            for k, v in self.items()
        )
        return f"FinSupp[{self.monoid}, {self.field}]({{{body}}})"


def _canonical(monoid, acc):
    return {k: acc[k] for k in sorted(acc, key=monoid.sort_key) if acc[k]}


def support(f):
    """The set of elements where ``f`` is nonzero."""
    return f.support()


def pointwise_add(f, g):
    return f + g


def pointwise_mul(f, g):
    return f.pointwise_mul(g)


def delta(E, x, field):
    """The indicator function of the single element ``x``."""
    return FinSupp._make(E, field, {E.check(x): field.one})


def convolve_finite(f, g):
    """(f*g)(z) = sum over x o y = z of f(x) g(y), for finite supports.

    Iterates over supp f x supp g and accumulates at x o y, in canonical
    key order so floating-point sums are reproducible.
    """
    f._check_context(g)
    E = f.monoid
    acc = {}
    for x, a in f.items():
        for y, b in g.items():
            z = E.op(x, y)
            if z in acc:
                acc[z] = acc[z] + a * b
            else:
                acc[z] = a * b
    return f._like(acc)


class LazyFunction:
    """A total function on a monoid, evaluated on demand and memoized.

    Queries are serialized by a re-entrant lock, so concurrent readers see
    one linearizable sequence of memo writes.
    """

    def __init__(self, monoid, field, rule):
        self.monoid = monoid
        self.field = field
        self._rule = rule
        self._memo = {}
        self._lock = threading.RLock()

    def __getitem__(self, x):
        try:
            return self._memo[x]
        except KeyError:
            pass
        self.monoid.check(x)
        with self._lock:
            if x not in self._memo:
                self._memo[x] = self.field(self._rule(x))
            return self._memo[x]

    def __call__(self, x):
        return self[x]

    def _check_context(self, other):
        if self.monoid != other.monoid or self.field != other.field:
            raise ContextMismatch(
                f"context mismatch: ({self.monoid}, {self.field}) "
                f"vs ({other.monoid}, {other.field})"
            )

    def _wrap(self, rule):
        return _lazy(self.monoid, self.field, rule)

    def __add__(self, other):
        if isinstance(other, FinSupp):
            other = CoefStream.from_finsupp(other) if other.monoid.finite_decomposition \
                else LazyFunction(other.monoid, other.field, other.__getitem__)
        if not isinstance(other, LazyFunction):
            return NotImplemented
        self._check_context(other)
        return self._wrap(lambda z: self[z] + other[z])

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(lambda z: -self[z])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.field(c)
        return self._wrap(lambda z: c * self[z])

    def __rmul__(self, c):
        if isinstance(c, (FinSupp, LazyFunction)):
            return NotImplemented
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, FinSupp):
            return convolve_mixed(other, self)
        if isinstance(other, LazyFunction):
            return convolve_stream(self, other)
        return self.scale(other)

    def values(self, elements):
        return [self[x] for x in elements]

    def __repr__(self):
        return f"{type(self).__name__}[{self.monoid}, {self.field}]"


class CoefStream(LazyFunction):
    """A lazily computed element of the full convolution algebra C(E, k).

    Only defined when every element of E has finitely many decompositions.
    Equality of streams is not decidable; compare with :meth:`agrees_with`
    up to an explicit bound.
    """

    def __init__(self, monoid, field, rule):
        if not monoid.finite_decomposition:
            raise InfiniteDecomposition(
                f"{monoid} lacks the finite-decomposition property; "
                f"full convolution is undefined"
            )
        super().__init__(monoid, field, rule)

    @classmethod
    def from_finsupp(cls, f):
        return cls(f.monoid, f.field, f.__getitem__)

    @classmethod
    def constant(cls, monoid, field, c):
        c = field(c)
        return cls(monoid, field, lambda z: c)

    def _graded_elements(self, bound):
        if hasattr(self.monoid, "elements"):
            return [x for x in self.monoid.elements() if x < bound]
        return self.monoid.elements_below(bound)

    def truncate(self, bound):
        """Finite-support part on elements of grade < ``bound``."""
        elems = self._graded_elements(bound)
        return FinSupp._make(self.monoid, self.field, {x: self[x] for x in elems})

    def agrees_with(self, other, bound):
        """Coefficientwise equality on all elements of grade < ``bound``."""
        other_get = other.__getitem__
        return all(self[x] == other_get(x) for x in self._graded_elements(bound))


def _lazy(monoid, field, rule):
    if monoid.finite_decomposition:
        return CoefStream(monoid, field, rule)
    return LazyFunction(monoid, field, rule)


def convolve_stream(f, g):
    """Convolution of two total functions via the finite decomposition of each z."""
    f._check_context(g)
    E = f.monoid
    if not E.finite_decomposition:
        raise InfiniteDecomposition(
            f"cannot convolve two arbitrary-support functions on {E}"
        )
    zero = f.field.zero

    def rule(z):
        total = zero
        for x, y in E.decompose(z):
            total = total + f[x] * g[y]
        return total

    return CoefStream(E, f.field, rule)


def convolve_mixed(f, g):
    """Convolution where at least one argument has finite support.

    The other argument may be a stream, a :class:`LazyFunction` or a plain
    callable on E.  On a group the partner index is ``z o x^{-1}``; on other
    monoids the decompositions of z are filtered to ``x in supp f``.
    """
    if isinstance(f, FinSupp) and isinstance(g, FinSupp):
        return convolve_finite(f, g)
    if not isinstance(f, FinSupp) and isinstance(g, FinSupp):
        f, g = g, f
    if not isinstance(f, FinSupp):
        if isinstance(f, LazyFunction) and isinstance(g, LazyFunction) \
                and f.monoid.finite_decomposition:
            return convolve_stream(f, g)
        raise InfiniteDecomposition(
            "neither argument has finite support and the monoid lacks "
            "the finite-decomposition property"
        )
    E = f.monoid
    if isinstance(g, LazyFunction):
        g._check_context(f)
        g_at = g.__getitem__
    else:
        g_at = g
    zero = f.field.zero
    field = f.field
    terms = list(f.items())

    if E.is_group:
        def rule(z):
            total = zero
            for x, a in terms:
                total = total + a * field(g_at(E.op(z, E.inverse(x))))
            return total
    else:
        def rule(z):
            total = zero
            for x, y in E.decompose(z):
                a = f[x]
                if a:
                    total = total + a * field(g_at(y))
            return total

    return _lazy(E, field, rule)


# coefficient files: one "<element> <scalar>" per line, '#' comments

def read_coefficients(source, monoid, field):
    """Parse coefficient-file text (a string or an iterable of lines)."""
    lines = source.splitlines() if isinstance(source, str) else source
    pattern = re.compile(r"\s*(" + monoid.element_pattern + r")\s+(\S.*?)\s*")
    acc = {}
    for lineno, line in enumerate(lines, start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        m = pattern.fullmatch(s)
        if not m:
            raise ParseError(f"line {lineno}: expected '<element> <scalar>', got {s!r}")
        try:
            key = monoid.parse(m.group(1))
            value = field.parse(m.group(2))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        if key in acc:
            raise ParseError(f"line {lineno}: duplicate element {m.group(1)}")
        acc[key] = value
    return FinSupp._make(monoid, field, acc)


def format_coefficients(f):
    """Inverse of :func:`read_coefficients` (exact for exact fields)."""
    return "".join(
        f"{f.monoid.format(k)} {f.field.format(v)}\n" for k, v in f.items()
    )
