"""Finitely supported elements of l^1(Z) and l^1(W) as a Banach algebra.

Elements are :class:`L1Seq` values: complex finitely supported sequences
with the l^1 norm.  Convolution is computed densely with numpy over the
index span of the two supports, which keeps the accumulation order fixed
for a given input.  Infinite elements only appear as Neumann partial sums
with a certified tail bound.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from .convolution import FinSupp
from .errors import BudgetError, ContextMismatch, DomainError, PreconditionError
from .expr import parse_with
from .monoid import Integers, Wholes, parse_monoid
from .scalars import CC

__all__ = [
    "Certificate",
    "L1Seq",
    "SpectralReport",
    "convolve_l1",
    "fourier_eval",
    "fourier_table",
    "l1_norm",
    "neumann_inverse",
    "parse_l1",
    "resolvent_certificate",
    "spectral_radius_estimate",
    "sup_norm_estimate",
]

Z = Integers()
W = Wholes()

DOMAIN_TOL = 1e-9
DEFAULT_SUPPORT_CAP = 1 << 22


def _as_monoid(monoid):
    if isinstance(monoid, str):
        monoid = parse_monoid(monoid)
    if monoid != Z and monoid != W:
        raise DomainError(f"l^1 sequences live on Z or W, not {monoid}")
    return monoid


class L1Seq(FinSupp):
    """A finitely supported complex sequence on Z or W."""

    __slots__ = ()

    def __init__(self, entries=(), monoid=Z):
        super().__init__(_as_monoid(monoid), CC, entries)

    @classmethod
    def delta(cls, j, monoid=Z):
        return cls({j: 1.0}, monoid)

    @classmethod
    def unit(cls, monoid=Z):
        return cls.delta(0, monoid)

    @classmethod
    def _from_dense(cls, monoid, lo, values):
        acc = {lo + i: complex(v) for i, v in enumerate(values) if v != 0}
        return cls._make(monoid, CC, acc)

    def dense(self):
        """``(lo, array)`` covering the index span of the support."""
        if not self:
            return 0, np.zeros(0, dtype=complex)
        keys = list(self.keys())
        lo, hi = keys[0], keys[-1]
        arr = np.zeros(hi - lo + 1, dtype=complex)
        for k, v in self.items():
            arr[k - lo] = v
        return lo, arr

    def norm(self):
        return l1_norm(self)

    def width(self):
        if not self:
            return 0
        keys = list(self.keys())
        return keys[-1] - keys[0] + 1

    def __mul__(self, other):
        if isinstance(other, L1Seq):
            return convolve_l1(self, other)
        return self.scale(other)

    def __pow__(self, n):
        if n < 0:
            raise DomainError("negative powers need an inverse; see neumann_inverse")
        result = L1Seq.unit(self.monoid)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def to_integers(self):
        """The same sequence regarded as an element of l^1(Z)."""
        return L1Seq._make(Z, CC, dict(self.items()))

    def __call__(self, z):
        return fourier_eval(self, z)

    def __repr__(self):
        body = ", ".join(f"{k}: {CC.format(v)}" for k, v in self.items())
        return f"L1Seq[{self.monoid}]({{{body}}})"


def l1_norm(f):
    """sum |f(j)|, summed in ascending index order."""
    return math.fsum(abs(v) for _, v in f.items())


def convolve_l1(f, g):
    if f.monoid != g.monoid:
        raise ContextMismatch(f"cannot convolve l^1({f.monoid}) with l^1({g.monoid})")
    if not f or not g:
        return L1Seq._make(f.monoid, CC, {})
    lo_f, a = f.dense()
    lo_g, b = g.dense()
    return L1Seq._from_dense(f.monoid, lo_f + lo_g, np.convolve(a, b))


def neumann_inverse(x, tol=1e-12, max_terms=100_000):
    """Partial sum S_n = sum_{j<=n} x^j approximating (e - x)^{-1}.

    Requires ||x|| < 1.  Stops at the first n whose tail bound
    ||x||^{n+1} / (1 - ||x||) is <= tol, then checks the residual
    ||(e - x) S_n - e|| = ||x^{n+1}|| against tol.
    """
    a = l1_norm(x)
    if a >= 1:
        raise PreconditionError(f"Neumann series needs ||x|| < 1, got {a:.9g}")
    e = L1Seq.unit(x.monoid)
    partial = e
    power = e
    n = 0
    while a > 0 and a ** (n + 1) / (1 - a) > tol:
        if n >= max_terms:
            residual = l1_norm((e - x) * partial - e)
            raise BudgetError(
                f"max_terms={max_terms} reached before the tail bound met tol={tol:g}; "
                f"achieved residual {residual:.9g}"
            )
        power = power * x
        partial = partial + power
        n += 1
    residual = l1_norm((e - x) * partial - e)
    if residual > tol:
        raise BudgetError(f"residual {residual:.9g} exceeds tol={tol:g} after {n} terms")
    return partial


class Certificate(enum.Enum):
    CERTIFIED_INVERTIBLE = "certified-invertible"
    UNKNOWN = "unknown"

    def __str__(self):
        return self.value


def resolvent_certificate(x, lam):
    """x - lam*e is invertible whenever |lam| > ||x||; otherwise no claim."""
    if abs(CC(lam)) > l1_norm(x):
        return Certificate.CERTIFIED_INVERTIBLE
    return Certificate.UNKNOWN


@dataclass
class SpectralReport:
    radius_estimates: list = dc_field(default_factory=list)
    circle_max: float = 0.0
    grid_size: int = 0

    def lower_bound_holds(self, slack=1e-9):
        return all(r >= self.circle_max - slack for _, r in self.radius_estimates)


def spectral_radius_estimate(x, n_max, grid=10_000, support_cap=DEFAULT_SUPPORT_CAP):
    """r_n = ||x^n||^{1/n} for n = 1, 2, 4, ... (and n_max), plus max |phi_x| on the circle.

    Powers are formed by repeated squaring of a norm-rescaled copy of x so
    that neither overflow nor underflow limits n; the scale is carried in
    log form.
    """
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    circle_max = sup_norm_estimate(x, grid)
    a = l1_norm(x)
    ns = []
    n = 1
    while n <= n_max:
        ns.append(n)
        n *= 2
    if ns[-1] != n_max:
        ns.append(n_max)
    if a == 0:
        return SpectralReport([(n, 0.0) for n in ns], circle_max, grid)

    def check(p):
        if p.width() > support_cap:
            raise BudgetError(f"support width {p.width()} exceeds cap {support_cap}")

    # squares[k] = (Q, logscale) with x^(2^k) = exp(logscale) * Q and ||Q|| = 1
    q = x.scale(1 / a)
    squares = [(q, math.log(a))]
    log_norms = {1: math.log(a)}
    k = 1
    while (1 << k) <= n_max:
        prev, ls = squares[-1]
        sq = prev * prev
        check(sq)
        s = l1_norm(sq)
        if s == 0:
            raise BudgetError("power vanished numerically")
        squares.append((sq.scale(1 / s), 2 * ls + math.log(s)))
        log_norms[1 << k] = squares[-1][1]
        k += 1
    if n_max not in log_norms:
        acc, acc_log = None, 0.0
        for bit, (sq, ls) in enumerate(squares):
            if n_max >> bit & 1:
                if acc is None:
                    acc, acc_log = sq, ls
                else:
                    prod = acc * sq
                    check(prod)
                    s = l1_norm(prod)
                    acc, acc_log = prod.scale(1 / s), acc_log + ls + math.log(s)
        log_norms[n_max] = acc_log
    estimates = [(n, math.exp(log_norms[n] / n)) for n in ns]
    return SpectralReport(estimates, circle_max, grid)


def fourier_eval(f, z):
    """phi_f(z) = sum_j f(j) z^j on the unit circle (Z) or closed unit disk (W)."""
    z = CC(z)
    r = abs(z)
    if f.monoid == Z:
        if abs(r - 1) > DOMAIN_TOL:
            raise DomainError(
                f"phi_f for l^1(Z) is defined on the unit circle |z| = 1; got |z| = {r:.9g}",
                code="outside-domain",
            )
    elif r > 1 + DOMAIN_TOL:
        raise DomainError(
            f"phi_f for l^1(W) is defined on the closed unit disk |z| <= 1; got |z| = {r:.9g}",
            code="outside-domain",
        )
    total = 0j
    for j, c in f.items():
        total += c * z ** j
    return total


def _circle_values(f, grid, chunk=2048):
    theta = 2 * np.pi * np.arange(grid) / grid
    if not f:
        return theta, np.zeros(grid, dtype=complex)
    idx = np.array(list(f.keys()), dtype=float)
    coef = np.array([v for _, v in f.items()], dtype=complex)
    out = np.empty(grid, dtype=complex)
    for start in range(0, grid, chunk):
        th = theta[start:start + chunk]
        out[start:start + chunk] = np.exp(1j * np.outer(th, idx)) @ coef
    return theta, out


def sup_norm_estimate(f, grid):
    """max |phi_f| over ``grid`` equally spaced points of the unit circle.

    A lower bound for the true supremum.
    """
    if grid < 1:
        raise DomainError("grid must be >= 1")
    _, values = _circle_values(f, grid)
    return float(np.max(np.abs(values))) if grid else 0.0


def fourier_table(f, grid):
    """``[(theta, phi_f(e^{i theta})), ...]`` for ``grid`` equally spaced angles."""
    if grid < 1:
        raise DomainError("grid must be >= 1")
    theta, values = _circle_values(f, grid)
    return [(float(t), complex(v)) for t, v in zip(theta, values)]


class L1Builder:
    """Expression builder: ``t`` is delta_1, ``t^-k`` is delta_{-k} on Z."""

    def __init__(self, monoid):
        self.monoid = monoid

    def _const(self, c):
        return L1Seq({0: c}, self.monoid) if c else L1Seq((), self.monoid)

    def number(self, text):
        return self._const(float(text))

    def imag(self, text):
        return self._const(complex(0.0, float(text) if text else 1.0))

    def variable(self, name):
        if name == "i":
            return self.imag("")
        if name != "t":
            raise DomainError(f"unknown symbol {name!r}; sequences use the single variable t")
        return L1Seq.delta(1, self.monoid)

    add = staticmethod(lambda a, b: a + b)
    sub = staticmethod(lambda a, b: a - b)
    neg = staticmethod(lambda a: -a)
    mul = staticmethod(lambda a, b: a * b)

    def div(self, a, b):
        if len(b) != 1:
            raise DomainError("can only divide by a single term c*t^k")
        (k, c), = b.items()
        if k and self.monoid == W:
            raise DomainError("division by t leaves l^1(W)")
        shifted = {j - k: v / c for j, v in a.items()}
        return L1Seq(shifted, self.monoid)

    def power(self, a, n):
        if n >= 0:
            return a ** n
        if len(a) != 1:
            raise DomainError("negative powers only of single terms c*t^k")
        (k, c), = a.items()
        return L1Seq({k * n: c ** n}, self.monoid)


def parse_l1(text, monoid=Z):
    """Parse a Laurent-polynomial expression such as ``1 + t - t^-1``."""
    return parse_with(text, L1Builder(_as_monoid(monoid)))
