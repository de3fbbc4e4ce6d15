"""Sparse multivariate polynomials over the rationals.

A monomial is a tuple of ``(name, exponent)`` pairs sorted by name, the
constant monomial being ``()``.  Terms are kept in a dict from monomial to a
nonzero :class:`fractions.Fraction`.

Monomials are ordered lexicographically with variables ranked alphabetically
(``alpha`` outranks ``beta``); the greatest monomial is the leading one and
terms are printed in descending order.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd as igcd, lcm as ilcm

from ..errors import DivisionByZero, MissingParameter

Monomial = tuple  # tuple[tuple[str, int], ...]

_name_key_cache: dict = {}


def _name_key(name):
    key = _name_key_cache.get(name)
    if key is None:
        # alphabetically earlier names must compare greater; the trailing 0
        # makes a proper prefix ("a" vs "ab") rank above its extensions
        key = tuple(-ord(ch) for ch in name) + (0,)
        _name_key_cache[name] = key
    return key


def monomial_key(mono):
    """Sort key realizing the lex order described in the module docstring."""
    return tuple((_name_key(v), e) for v, e in mono)


def mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    out = dict(a)
    for v, e in b:
        out[v] = out.get(v, 0) + e
    return tuple(sorted(out.items()))


def mono_div(a, b):
    """Return a / b, or None if b does not divide a."""
    if not b:
        return a
    da = dict(a)
    for v, e in b:
        have = da.get(v, 0)
        if have < e:
            return None
        if have == e:
            del da[v]
        else:
            da[v] = have - e
    return tuple(sorted(da.items()))


def _coerce(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial.constant(x)
    return NotImplemented


class Polynomial:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        # callers hand over ownership of ``terms``; zero coefficients are dropped
        if terms:
            self.terms = {m: c for m, c in terms.items() if c}
        else:
            self.terms = {}
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        p = object.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, value):
        value = Fraction(value)
        return cls._raw({(): value} if value else {})

    @classmethod
    def variable(cls, name, exponent=1):
        if exponent == 0:
            return cls.constant(1)
        return cls._raw({((name, exponent),): Fraction(1)})

    # -- predicates -------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        t = self.terms
        return not t or (len(t) == 1 and () in t)

    def is_one(self):
        t = self.terms
        return len(t) == 1 and t.get(()) == 1

    def constant_value(self):
        """Return the value of a constant polynomial as a Fraction."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get((), Fraction(0))

    def variables(self):
        out = set()
        for m in self.terms:
            out.update(v for v, _ in m)
        return out

    def degree(self, var):
        return max((e for m in self.terms for v, e in m if v == var), default=0)

    def total_degree(self):
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    # -- ordering ---------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: monomial_key(t[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=monomial_key)
        return m, self.terms[m]

    def leading_coefficient(self):
        return self.leading_term()[1]

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s += c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return Polynomial._raw({})
        if c == 1:
            return self
        return Polynomial._raw({m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return Polynomial._raw({})
        if other.is_constant():
            return self.scale(other.terms[()])
        if self.is_constant():
            return other.scale(self.terms[()])
        out = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = mono_mul(ma, mb)
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = Polynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        from .grammar import format_polynomial

        return format_polynomial(self)

    # -- evaluation -------------------------------------------------------

    def subs(self, assignment):
        """Substitute rationals for some of the variables."""
        out = Polynomial._raw({})
        for m, c in self.terms.items():
            coeff = c
            rest = []
            for v, e in m:
                if v in assignment:
                    coeff *= Fraction(assignment[v]) ** e
                else:
                    rest.append((v, e))
            if coeff:
                out = out + Polynomial._raw({tuple(rest): coeff})
        return out

    def eval(self, assignment):
        total = Fraction(0)
        for m, c in self.terms.items():
            term = c
            for v, e in m:
                try:
                    term *= Fraction(assignment[v]) ** e
                except KeyError:
                    raise MissingParameter(v) from None
            total += term
        return total

    # -- univariate views used by gcd ------------------------------------

    def coefficients_in(self, var):
        """Split as sum of coeff_k * var**k; returns {k: Polynomial}."""
        buckets = {}
        for m, c in self.terms.items():
            k = 0
            rest = []
            for v, e in m:
                if v == var:
                    k = e
                else:
                    rest.append((v, e))
            buckets.setdefault(k, {})[tuple(rest)] = c
        return {k: Polynomial._raw(t) for k, t in buckets.items()}

    def rational_content(self):
        """Positive rational c with self/c having coprime integer coefficients."""
        if not self.terms:
            return Fraction(0)
        coeffs = self.terms.values()
        den = reduce(ilcm, (c.denominator for c in coeffs), 1)
        num = reduce(igcd, (c.numerator for c in coeffs), 0)
        return Fraction(num, den)


ZERO = Polynomial.constant(0)
ONE = Polynomial.constant(1)


def divexact(a, b):
    """Quotient of a by b; raises ArithmeticError when b does not divide a."""
    if b.is_zero():
        raise DivisionByZero("polynomial division by zero")
    if b.is_constant():
        return a.scale(1 / b.terms[()])
    lm_b, lc_b = b.leading_term()
    rem = dict(a.terms)
    quot = {}
    while rem:
        m = max(rem, key=monomial_key)
        q = mono_div(m, lm_b)
        if q is None:
            raise ArithmeticError("inexact polynomial division")
        c = rem[m] / lc_b
        quot[q] = c
        for mb, cb in b.terms.items():
            mm = mono_mul(q, mb)
            s = rem.get(mm, 0) - c * cb
            if s:
                rem[mm] = s
            else:
                rem.pop(mm, None)
    return Polynomial._raw(quot)


def _monic(p):
    if p.is_zero():
        return p
    return p.scale(1 / p.leading_coefficient())


def _primitive(p):
    # rational content removal keeps pseudo-remainder coefficients small
    return p.scale(1 / p.rational_content())


def _content_in(p, var):
    g = ZERO
    for c in p.coefficients_in(var).values():
        g = gcd(g, c)
        if g.is_one():
            break
    return g


def _prem(a, b, var):
    """Pseudo-remainder of a by b viewed as univariate in var."""
    db = b.degree(var)
    cb = b.coefficients_in(var)
    lc = cb[db]
    r = a
    while not r.is_zero():
        dr = r.degree(var)
        if dr < db:
            break
        lr = r.coefficients_in(var)[dr]
        r = r * lc - b * (lr * Polynomial.variable(var, dr - db))
    return r


def gcd(a, b):
    """Monic greatest common divisor over Q (zero only if both are zero)."""
    if a.is_zero():
        return _monic(b)
    if b.is_zero():
        return _monic(a)
    if a.is_constant() or b.is_constant():
        return ONE
    shared = a.variables() | b.variables()
    var = min(shared, key=lambda v: (a.degree(v) == 0 or b.degree(v) == 0, v))
    if a.degree(var) == 0:
        return gcd(a, _content_in(b, var))
    if b.degree(var) == 0:
        return gcd(_content_in(a, var), b)
    ca = _content_in(a, var)
    cb = _content_in(b, var)
    pa = _primitive(divexact(a, ca))
    pb = _primitive(divexact(b, cb))
    if pa.degree(var) < pb.degree(var):
        pa, pb = pb, pa
    while not pb.is_zero():
        r = _prem(pa, pb, var)
        pa, pb = pb, (_primitive(divexact(r, _content_in(r, var))) if not r.is_zero() else r)
        if not pb.is_zero() and pb.degree(var) == 0:
            pa = ONE
            break
    g = divexact(pa, _content_in(pa, var)) if pa.degree(var) > 0 else ONE
    return _monic(gcd(ca, cb) * g)


def lcm(a, b):
    if a.is_zero() or b.is_zero():
        return ZERO
    return _monic(divexact(a * b, gcd(a, b)))
