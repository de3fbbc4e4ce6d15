"""Text form of coefficients.

Grammar (whitespace insignificant)::

    top      := expr ( '/' '(' expr ')' )?
    expr     := term ( ('+' | '-') term )*
    term     := factor ( '*' factor )*
    factor   := rational | ident | ident '^' uint | '(' expr ')' | '-' factor
    rational := int ( '/' uint )?

Division appears only inside a rational literal or as the single top-level
``num/(den)`` form, which is exactly what :func:`print_scalar` produces.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import DivisionByZero, ExprSyntaxError, UnknownParameter
from .poly import Polynomial
from .ratfunc import Scalar

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S)")


def _tokenize(text):
    tokens = []
    for m in _TOKEN.finditer(text):
        start = m.start()
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("ident", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ExprSyntaxError(f"unexpected character {ch!r}", text, start)
            tokens.append((ch, ch, start))
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, params):
        self.text = text
        self.params = params
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self, offset=0):
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def take(self, kind):
        tok = self.peek()
        if tok[0] != kind:
            self.fail(f"expected {kind!r}")
        self.i += 1
        return tok

    def fail(self, message):
        kind, value, pos = self.peek()
        found = "end of input" if kind == "end" else repr(value)
        raise ExprSyntaxError(f"{message}, found {found}", self.text, pos)

    def top(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        num = self.expr()
        result = Scalar.coerce(num)
        if self.peek()[0] == "/":
            self.i += 1
            pos = self.peek()[2]
            self.take("(")
            den = self.expr()
            self.take(")")
            if den.is_zero():
                raise DivisionByZero(f"zero denominator at position {pos} in {self.text!r}")
            result = Scalar(num, den)
        if self.peek()[0] != "end":
            self.fail("unexpected trailing input")
        return result

    def expr(self):
        acc = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take(self.peek()[0])[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.factor()
        while self.peek()[0] == "*":
            self.i += 1
            acc = acc * self.factor()
        return acc

    def factor(self):
        kind, value, pos = self.peek()
        if kind == "-":
            self.i += 1
            return -self.factor()
        if kind == "(":
            self.i += 1
            inner = self.expr()
            self.take(")")
            return inner
        if kind == "int":
            self.i += 1
            if self.peek()[0] == "/" and self.peek(1)[0] == "int":
                self.i += 1
                den = self.take("int")
                if den[1] == 0:
                    raise DivisionByZero(f"zero denominator at position {den[2]} in {self.text!r}")
                return Polynomial.constant(Fraction(value, den[1]))
            return Polynomial.constant(value)
        if kind == "ident":
            if self.params is not None and value not in self.params:
                raise UnknownParameter(value, pos)
            self.i += 1
            if self.peek()[0] == "^":
                self.i += 1
                exp = self.take("int")[1]
                return Polynomial.variable(value, exp)
            return Polynomial.variable(value)
        self.fail("expected a number, parameter or '('")


def parse_scalar(text, params=None):
    """Parse a coefficient expression.

    ``params``, when given, is the collection of declared parameter names;
    any other identifier raises :class:`UnknownParameter`.
    """
    return _Parser(text, None if params is None else set(params)).top()


def _format_fraction(c):
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _format_monomial(m):
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)


def format_polynomial(p):
    if p.is_zero():
        return "0"
    pieces = []
    for m, c in p.sorted_terms():
        if not m:
            s = _format_fraction(c)
        elif c == 1:
            s = _format_monomial(m)
        elif c == -1:
            s = "-" + _format_monomial(m)
        else:
            s = f"{_format_fraction(c)}*{_format_monomial(m)}"
        if pieces and not s.startswith("-"):
            s = "+" + s
        pieces.append(s)
    return "".join(pieces)


def print_scalar(a):
    a = Scalar.coerce(a)
    num = format_polynomial(a.num)
    if a.den.is_one():
        return num
    if len(a.num.terms) > 1:
        num = f"({num})"
    return f"{num}/({format_polynomial(a.den)})"
