"""Rational functions in named parameters: the coefficient field."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from ..errors import DivisionByZero, PoleAtAssignment
from .poly import ONE, Polynomial, divexact, gcd


def _normalize(num, den):
    if den.is_zero():
        raise DivisionByZero("zero denominator")
    if num.is_zero():
        return ZERO_POLY, ONE
    if den.is_constant():
        return num.scale(1 / den.terms[()]), ONE
    if not num.is_constant():
        g = gcd(num, den)
        if not g.is_one():
            num = divexact(num, g)
            den = divexact(den, g)
            if den.is_constant():
                return num.scale(1 / den.terms[()]), ONE
    # den gets coprime integer coefficients and a positive leading coefficient
    f = den.rational_content()
    if den.leading_coefficient() < 0:
        f = -f
    return num.scale(1 / f), den.scale(1 / f)


ZERO_POLY = Polynomial.constant(0)


class Scalar:
    """Immutable element of Q(params) kept in canonical form.

    ``num/den`` are coprime, ``den`` has coprime integer coefficients and a
    positive leading coefficient, and zero is ``0/1``.  Equality is therefore
    structural.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        if not isinstance(num, Polynomial):
            num = Polynomial.constant(num)
        if not isinstance(den, Polynomial):
            den = Polynomial.constant(den)
        self.num, self.den = _normalize(num, den)
        self._hash = None

    @classmethod
    def _canonical(cls, num, den):
        s = object.__new__(cls)
        s.num = num
        s.den = den
        s._hash = None
        return s

    @classmethod
    def param(cls, name):
        return cls._canonical(Polynomial.variable(name), ONE)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return cls._canonical(Polynomial.constant(x), ONE)
        if isinstance(x, Polynomial):
            return cls._canonical(x, ONE)
        if isinstance(x, str):
            from .grammar import parse_scalar

            return parse_scalar(x)
        raise TypeError(f"cannot interpret {x!r} as a Scalar")

    # -- predicates -------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_constant(self):
        return self.den.is_one() and self.num.is_constant()

    def to_fraction(self):
        if not self.is_constant():
            raise ValueError(f"{self} depends on parameters")
        return self.num.constant_value()

    def params(self):
        return self.num.variables() | self.den.variables()

    # -- field operations ------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return Scalar._canonical(self.num + other.num, ONE)
        if self.den == other.den:
            return Scalar(self.num + other.num, self.den)
        return Scalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._canonical(-self.num, self.den)

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        if self.den.is_one() and other.den.is_one():
            if self.num.is_constant() or other.num.is_constant():
                return Scalar._canonical(self.num * other.num, ONE)
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        return Scalar(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            raise TypeError("integer exponents only")
        if k < 0:
            return self.inverse() ** (-k)
        return Scalar(self.num ** k, self.den ** k)

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"Scalar({str(self)!r})"

    def __str__(self):
        from .grammar import print_scalar

        return print_scalar(self)

    # -- substitution -----------------------------------------------------

    def subs(self, assignment):
        """Partial substitution; raises PoleAtAssignment if den vanishes."""
        assignment = {k: v for k, v in assignment.items() if k in self.params()}
        if not assignment:
            return self
        den = self.den.subs(assignment)
        if den.is_zero():
            raise PoleAtAssignment(str(self), assignment)
        return Scalar(self.num.subs(assignment), den)

    def eval(self, assignment):
        """Exact value at a full rational assignment of the parameters."""
        den = self.den.eval(assignment)
        if den == 0:
            raise PoleAtAssignment(str(self), dict(assignment))
        return self.num.eval(assignment) / den


ZERO = Scalar._canonical(ZERO_POLY, ONE)
ONE_S = Scalar._canonical(ONE, ONE)


def scalar_eval(a, assignment):
    return Scalar.coerce(a).eval(assignment)


def binomial(s, t):
    """C_s^t = s!/(t!(s-t)!), zero when t > s."""
    return Fraction(comb(s, t))
