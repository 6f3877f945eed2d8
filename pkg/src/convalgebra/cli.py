"""Command-line front end.

Every verb parses its inputs, calls one library function and prints the
result in a fixed text format.  Exit status is 0 on success, 1 on domain
errors (``error: <code>: <message>`` on stderr) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from .convolution import convolve_finite, format_coefficients, pointwise_mul, read_coefficients
from .errors import DomainError, ParseError
from .expr import infer_nvars
from .ideals import PrincipalIdeal, classify_ideal, parse_ring, project, quotient_invert
from .l1banach import fourier_table, parse_l1, spectral_radius_estimate, L1Seq
from .monoid import MultiIndex, Wholes, parse_monoid
from .poly import compose, evaluate, parse_polynomial
from .scalars import CC, format_float, parse_field
from .series import (
    PowerSeries,
    invert_series,
    laurent_reciprocal,
    parse_rational_function,
    rational_to_laurent,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _read_text(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc.strerror}", code="io") from None


def _load_finsupp(source, monoid, field):
    """A coefficient file path, or a polynomial expression on W / W^n."""
    if os.path.exists(source):
        try:
            return read_coefficients(_read_text(source), monoid, field)
        except ParseError as exc:
            raise ParseError(f"{source}: {exc}") from None
    if isinstance(monoid, MultiIndex):
        return parse_polynomial(source, field, monoid.n).coeffs
    if isinstance(monoid, Wholes):
        p = parse_polynomial(source, field, 1)
        return p.coeffs.map_keys(lambda a: a[0], monoid)
    raise ParseError(f"{source!r} is not a file; inline expressions need monoid W or W^n")


def _load_l1(source, monoid):
    if os.path.exists(source):
        try:
            f = read_coefficients(_read_text(source), monoid, CC)
        except ParseError as exc:
            raise ParseError(f"{source}: {exc}") from None
        return L1Seq(dict(f.items()), monoid)
    return parse_l1(source, monoid)


def _load_series(text, field, nvars):
    if text.strip() == "geom":
        return PowerSeries.geometric(field)
    try:
        return PowerSeries.from_polynomial(parse_polynomial(text, field, nvars))
    except ParseError:
        if nvars != 1:
            raise
    return parse_rational_function(text, field).to_power_series()


def _cmd_conv(args, out):
    monoid = parse_monoid(args.monoid)
    field = parse_field(args.field)
    f = _load_finsupp(args.a, monoid, field)
    g = _load_finsupp(args.b, monoid, field)
    h = pointwise_mul(f, g) if args.pointwise else convolve_finite(f, g)
    out.write(format_coefficients(h))


def _cmd_series_invert(args, out):
    field = parse_field(args.field)
    nvars = args.nvars or (1 if args.input.strip() == "geom" else infer_nvars(args.input))
    inv = invert_series(_load_series(args.input, field, nvars))
    if nvars == 1:
        out.write(" ".join(field.format_coefficient(c) for c in inv.coefficients(args.order)) + "\n")
    else:
        out.write(format_coefficients(inv.stream.truncate(args.order)))


def _cmd_laurent_recip(args, out):
    field = parse_field(args.field)
    r = rational_to_laurent(parse_rational_function(args.input, field), args.probe)
    inv = laurent_reciprocal(r, args.probe)
    for j in range(inv.start, inv.start + args.order):
        out.write(f"{j} {field.format_coefficient(inv.coef(j))}\n")


def _cmd_poly_eval(args, out):
    field = parse_field(args.field)
    values = [field.parse(v) for v in args.at.split(",")]
    p = parse_polynomial(args.input, field, args.nvars or max(len(values), infer_nvars(args.input)))
    out.write(field.format(evaluate(p, values)) + "\n")


def _cmd_poly_compose(args, out):
    field = parse_field(args.field)
    m = args.nvars_out or max(infer_nvars(q) for q in args.with_)
    qs = [parse_polynomial(q, field, m) for q in args.with_]
    p = parse_polynomial(args.input, field, args.nvars or len(qs))
    out.write(str(compose(p, qs)) + "\n")


def _cmd_quotient(args, out):
    ring = parse_ring(args.ring)
    ideal = PrincipalIdeal(ring, ring.parse(args.mod))
    x = project(ring.parse(args.eval), ideal)
    if args.invert:
        x = quotient_invert(x)
    out.write(str(x) + "\n")


def _cmd_classify(args, out):
    ring = parse_ring(args.ring)
    out.write(str(classify_ideal(PrincipalIdeal(ring, ring.parse(args.gen)))) + "\n")


def _cmd_specrad(args, out):
    f = _load_l1(args.input, parse_monoid(args.monoid))
    report = spectral_radius_estimate(f, args.nmax, args.grid)
    for n, r in report.radius_estimates:
        out.write(f"{n} {format_float(r)}\n")
    out.write(f"circle_max {format_float(report.circle_max)}\n")


def _cmd_fourier(args, out):
    f = _load_l1(args.input, parse_monoid(args.monoid))
    for theta, v in fourier_table(f, args.grid):
        out.write(f"{format_float(theta)} {format_float(v.real)} {format_float(v.imag)}\n")


def _cmd_characteristic(args, out):
    out.write(f"{parse_field(args.field).characteristic()}\n")


def build_parser():
    parser = _Parser(prog="convalgebra", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("conv", help="convolve two finitely supported functions")
    p.add_argument("--monoid", required=True)
    p.add_argument("--field", required=True)
    p.add_argument("--pointwise", action="store_true", help="pointwise product instead")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_conv)

    p = sub.add_parser("series-invert", help="invert a formal power series")
    p.add_argument("--field", required=True)
    p.add_argument("--input", required=True, help="polynomial, 'geom' or 'p / q'")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--nvars", type=int)
    p.set_defaults(func=_cmd_series_invert)

    p = sub.add_parser("laurent-recip", help="reciprocal of a Laurent series")
    p.add_argument("--field", required=True)
    p.add_argument("--input", required=True, help="rational expression in t")
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--probe", type=int, default=32)
    p.set_defaults(func=_cmd_laurent_recip)

    p = sub.add_parser("poly-eval", help="evaluate a polynomial at a point of k^n")
    p.add_argument("--field", required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--at", required=True, help="comma-separated scalars")
    p.add_argument("--nvars", type=int)
    p.set_defaults(func=_cmd_poly_eval)

    p = sub.add_parser("poly-compose", help="substitute polynomials into a polynomial")
    p.add_argument("--field", required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--with", dest="with_", action="append", required=True)
    p.add_argument("--nvars", type=int)
    p.add_argument("--nvars-out", type=int)
    p.set_defaults(func=_cmd_poly_compose)

    p = sub.add_parser("quotient", help="evaluate in Z/(m) or k[t]/(q)")
    p.add_argument("--ring", required=True)
    p.add_argument("--mod", required=True)
    p.add_argument("--eval", required=True)
    p.add_argument("--invert", action="store_true")
    p.set_defaults(func=_cmd_quotient)

    p = sub.add_parser("classify", help="classify a principal ideal")
    p.add_argument("--ring", required=True)
    p.add_argument("--gen", required=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("specrad", help="spectral radius estimates in l^1")
    p.add_argument("--input", required=True)
    p.add_argument("--monoid", default="Z")
    p.add_argument("--nmax", type=int, default=256)
    p.add_argument("--grid", type=int, default=10_000)
    p.set_defaults(func=_cmd_specrad)

    p = sub.add_parser("fourier", help="sample phi_f on the unit circle")
    p.add_argument("--input", required=True)
    p.add_argument("--monoid", default="Z")
    p.add_argument("--grid", type=int, default=64)
    p.set_defaults(func=_cmd_fourier)

    p = sub.add_parser("characteristic", help="characteristic of a field")
    p.add_argument("--field", required=True)
    p.set_defaults(func=_cmd_characteristic)
    return parser


def run(argv, out=None, err=None):
    """Execute one command; returns the exit status."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        err.write(parser.format_usage())
        err.write(f"{exc}\n")
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except DomainError as exc:
        message = " ".join(str(exc).split())
        err.write(f"error: {exc.code}: {message}\n")
        return 1
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
