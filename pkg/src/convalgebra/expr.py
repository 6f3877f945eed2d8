"""A small recursive-descent parser for ring expressions.

The grammar is the usual one::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := '-' factor | '+' factor | power
    power  := atom ('^' ['-'] INT)?
    atom   := NUMBER | IMAG | NAME | '(' expr ')'

The parser does not know which ring it is building; a *builder* object
supplies ``number``, ``imag``, ``variable``, ``add``, ``sub``, ``neg``,
``mul``, ``div`` and ``power``.  Polynomials, rational functions and
finitely supported sequences on Z all reuse it.
"""

from __future__ import annotations

import re

from .errors import ParseError

_TOKEN = re.compile(
    r"""\s*(?:
        (?P<imag>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?i(?![A-Za-z0-9_]))
      | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
      | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
      | (?P<op>\*\*|[-+*/^()])
    )""",
    re.VERBOSE,
)


def tokenize(text):
    text = text.replace("−", "-").replace("·", "*")
    pos = 0
    out = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r} at position {pos}")
        kind = m.lastgroup
        value = m.group(kind)
        if kind == "op" and value == "**":
            value = "^"
        out.append((kind, value))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text, builder):
        self.tokens = tokenize(text)
        self.pos = 0
        self.b = builder
        self.text = text

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, value):
        kind, v = self.take()
        if v != value:
            raise ParseError(f"expected {value!r} in {self.text!r}, got {v!r}")

    def parse(self):
        if not self.tokens:
            raise ParseError("empty expression")
        value = self.expr()
        if self.pos != len(self.tokens):
            raise ParseError(f"trailing input {self.peek()[1]!r} in {self.text!r}")
        return value

    def expr(self):
        kind, v = self.peek()
        if v in ("+", "-"):
            self.take()
            value = self.term()
            if v == "-":
                value = self.b.neg(value)
        else:
            value = self.term()
        while True:
            kind, v = self.peek()
            if v == "+":
                self.take()
                value = self.b.add(value, self.term())
            elif v == "-":
                self.take()
                value = self.b.sub(value, self.term())
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            kind, v = self.peek()
            if v == "*":
                self.take()
                value = self.b.mul(value, self.factor())
            elif v == "/":
                self.take()
                value = self.b.div(value, self.factor())
            else:
                return value

    def factor(self):
        kind, v = self.peek()
        if v == "-":
            self.take()
            return self.b.neg(self.factor())
        if v == "+":
            self.take()
            return self.factor()
        return self.power()

    def power(self):
        base = self.atom()
        kind, v = self.peek()
        if v == "^":
            self.take()
            sign = 1
            if self.peek()[1] == "-":
                self.take()
                sign = -1
            kind, v = self.take()
            if kind != "num" or not v.isdigit():
                raise ParseError(f"exponent must be an integer in {self.text!r}")
            return self.b.power(base, sign * int(v))
        return base

    def atom(self):
        kind, v = self.take()
        if kind == "num":
            return self.b.number(v)
        if kind == "imag":
            return self.b.imag(v[:-1])
        if kind == "name":
            return self.b.variable(v)
        if v == "(":
            value = self.expr()
            self.expect(")")
            return value
        raise ParseError(f"unexpected {v!r} in {self.text!r}")


def parse_with(text, builder):
    return _Parser(text, builder).parse()


def variable_index(name, nvars):
    """Map ``t`` / ``t<k>`` to a 0-based variable index."""
    if name == "t":
        if nvars != 1:
            raise ParseError("bare 't' is only allowed for one variable; use t1, t2, ...")
        return 0
    m = re.fullmatch(r"t(\d+)", name)
    if not m:
        raise ParseError(f"unknown symbol {name!r}")
    k = int(m.group(1))
    if not 1 <= k <= nvars:
        raise ParseError(f"variable {name} out of range for {nvars} variable(s)")
    return k - 1


def infer_nvars(text):
    """Number of variables mentioned in an expression (at least 1)."""
    n = 1
    for kind, v in tokenize(text):
        if kind == "name":
            m = re.fullmatch(r"t(\d+)", v)
            if m:
                n = max(n, int(m.group(1)))
    return n
