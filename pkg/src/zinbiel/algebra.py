"""Structure-constant tables and the Zinbiel identity.

Basis indices are 1-based throughout the public API, matching the usual
``e_1, ..., e_n`` labelling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import kernels
from .errors import DimensionMismatch
from .scalar import ZERO, Scalar


class Vector:
    """Immutable coordinate vector over the scalar field."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(Scalar.coerce(c) for c in coords)

    @classmethod
    def _wrap(cls, coords):
        v = object.__new__(cls)
        v.coords = coords
        return v

    @classmethod
    def zero(cls, n):
        return cls._wrap((ZERO,) * n)

    @classmethod
    def basis(cls, n, i):
        """The basis vector e_i (1-based)."""
        if not 1 <= i <= n:
            raise DimensionMismatch(f"basis index {i} out of range 1..{n}")
        c = [ZERO] * n
        c[i - 1] = Scalar.coerce(1)
        return cls._wrap(tuple(c))

    @classmethod
    def from_sparse(cls, n, entries):
        c = [ZERO] * n
        for k, v in entries.items():
            c[k - 1] = Scalar.coerce(v)
        return cls._wrap(tuple(c))

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def support(self):
        """1-based indices of the nonzero coordinates."""
        return [i + 1 for i, c in enumerate(self.coords) if c]

    def sparse(self):
        return {i + 1: c for i, c in enumerate(self.coords) if c}

    def is_zero(self):
        return not any(self.coords)

    def _check(self, other):
        if len(other.coords) != len(self.coords):
            raise DimensionMismatch(f"vector lengths {len(self.coords)} and {len(other.coords)}")

    def __add__(self, other):
        self._check(other)
        return Vector._wrap(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return Vector._wrap(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Vector._wrap(tuple(-a for a in self.coords))

    def __mul__(self, s):
        s = Scalar.coerce(s)
        return Vector._wrap(tuple(a * s for a in self.coords))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def subs(self, assignment):
        return Vector._wrap(tuple(c.subs(assignment) for c in self.coords))

    def __repr__(self):
        return f"Vector({format_vector(self)})"


def format_vector(v, labels=None):
    parts = []
    for i, c in v.sparse().items():
        name = labels[i - 1] if labels else f"e{i}"
        s = str(c)
        if s == "1":
            term = name
        elif s == "-1":
            term = "-" + name
        elif len(c.num.terms) > 1 and c.den.is_one():
            term = f"({s})*{name}"
        else:
            term = f"{s}*{name}"
        if parts and not term.startswith("-"):
            term = "+" + term
        parts.append(term)
    return "".join(parts) or "0"


class AlgebraTable:
    """An n-dimensional algebra given by e_i o e_j = sum_k c[i][j][k] e_k.

    ``products`` maps ``(i, j)`` to ``{k: coefficient}``; absent entries are
    zero.  Coefficients may be anything :meth:`Scalar.coerce` accepts.  When
    ``params`` is omitted it is inferred from the coefficients.
    """

    __slots__ = ("n", "params", "labels", "_rows", "_int_cache")

    def __init__(self, n, products=None, params=None, labels=None):
        if n < 1:
            raise DimensionMismatch("dimension must be positive")
        rows = {}
        seen = set()
        for (i, j), terms in (products or {}).items():
            if not (1 <= i <= n and 1 <= j <= n):
                raise DimensionMismatch(f"product e{i}*e{j} outside dimension {n}")
            row = {}
            for k, c in terms.items():
                if not 1 <= k <= n:
                    raise DimensionMismatch(f"target e{k} outside dimension {n}")
                c = Scalar.coerce(c)
                if c:
                    row[k] = c
                    seen |= c.params()
            if row:
                rows[(i, j)] = row
        if params is None:
            params = sorted(seen)
        else:
            params = list(params)
            undeclared = seen - set(params)
            if undeclared:
                from .errors import UnknownParameter

                raise UnknownParameter(sorted(undeclared)[0])
        if labels is not None and len(labels) != n:
            raise DimensionMismatch("labels must have one entry per basis vector")
        self.n = n
        self.params = tuple(params)
        self.labels = tuple(labels) if labels is not None else None
        self._rows = rows
        self._int_cache = None

    # -- access ------------------------------------------------------------

    def product(self, i, j):
        """Sparse image of e_i o e_j as ``{k: Scalar}`` (do not mutate)."""
        return self._rows.get((i, j), {})

    def coeff(self, i, j, k):
        return self._rows.get((i, j), {}).get(k, ZERO)

    def products(self):
        """Nonzero products in (i, j) order."""
        return sorted(self._rows.items())

    def entries(self):
        for (i, j), row in self.products():
            for k in sorted(row):
                yield i, j, k, row[k]

    def is_constant(self):
        return all(c.is_constant() for row in self._rows.values() for c in row.values())

    def subs(self, assignment):
        """Instantiate some or all parameters."""
        remaining = [p for p in self.params if p not in assignment]
        prods = {ij: {k: c.subs(assignment) for k, c in row.items()} for ij, row in self._rows.items()}
        return AlgebraTable(self.n, prods, params=remaining, labels=self.labels)

    def relabel(self, labels):
        return AlgebraTable(self.n, self._rows, params=self.params, labels=labels)

    def __eq__(self, other):
        # tensor equality; labels and declared parameters do not participate
        if not isinstance(other, AlgebraTable):
            return NotImplemented
        return self.n == other.n and self._rows == other._rows

    def __hash__(self):
        return hash((self.n, frozenset((ij, frozenset(r.items())) for ij, r in self._rows.items())))

    def __repr__(self):
        return f"AlgebraTable(n={self.n}, products={len(self._rows)}, params={list(self.params)})"

    def describe(self):
        lines = []
        for (i, j), row in self.products():
            v = Vector.from_sparse(self.n, row)
            lines.append(f"e{i}*e{j} = {format_vector(v, self.labels)}")
        return "\n".join(lines)

    def integer_tensor(self):
        """Flat integer tensor proportional to c, or None if parametric."""
        if self._int_cache is None:
            if not self.is_constant():
                self._int_cache = False
            else:
                n = self.n
                vals = {(i, j, k): c.to_fraction() for (i, j), row in self._rows.items() for k, c in row.items()}
                d = lcm(*(v.denominator for v in vals.values())) if vals else 1
                flat = [0] * (n ** 3)
                for (i, j, k), v in vals.items():
                    flat[((i - 1) * n + (j - 1)) * n + (k - 1)] = int(v * d)
                self._int_cache = flat
        return self._int_cache or None


def abelian(n):
    return AlgebraTable(n, {})


def _check_dim(A, *vs):
    for v in vs:
        if len(v) != A.n:
            raise DimensionMismatch(f"vector of length {len(v)} in a {A.n}-dimensional algebra")


def multiply(A, u, v):
    """Bilinear product (u o v)_k = sum_ij u_i v_j c[i][j][k]."""
    _check_dim(A, u, v)
    out = [ZERO] * A.n
    vs = [(j + 1, b) for j, b in enumerate(v.coords) if b]
    for i, a in enumerate(u.coords):
        if not a:
            continue
        for j, b in vs:
            row = A.product(i + 1, j)
            if row:
                ab = a * b
                for k, c in row.items():
                    out[k - 1] = out[k - 1] + ab * c
    return Vector._wrap(tuple(out))


def zinbiel_defect(A, a, b, c):
    """Z(a, b, c) = (a o b) o c - a o (b o c) - a o (c o b)."""
    _check_dim(A, a, b, c)
    return (
        multiply(A, multiply(A, a, b), c)
        - multiply(A, a, multiply(A, b, c))
        - multiply(A, a, multiply(A, c, b))
    )


def _basis_defect(A, i, j, k):
    acc = {}

    def add(row, scale, left_index=None, right_index=None):
        for p, cp in row.items():
            prod = A.product(p, right_index) if left_index is None else A.product(left_index, p)
            for m, cm in prod.items():
                acc[m] = acc.get(m, ZERO) + scale * cp * cm

    add(A.product(i, j), 1, right_index=k)
    add(A.product(j, k), -1, left_index=i)
    add(A.product(k, j), -1, left_index=i)
    return {m: v for m, v in acc.items() if v}


@dataclass(frozen=True)
class ZinbielVerdict:
    holds: bool
    witness: tuple | None = None  # (i, j, k), 1-based
    defect: Vector | None = None

    def __bool__(self):
        return self.holds


def is_zinbiel(A):
    """Check Z(e_i, e_j, e_k) = 0 for every basis triple, symbolically.

    By trilinearity this is the identity for all vectors and all parameter
    values off the poles.  The first failing triple in lexicographic order is
    reported.
    """
    flat = A.integer_tensor()
    if flat is not None:
        hit = kernels.first_violation(A.n, flat)
        if hit is None:
            return ZinbielVerdict(True)
        i, j, k = (x + 1 for x in hit)
        return ZinbielVerdict(False, (i, j, k), Vector.from_sparse(A.n, _basis_defect(A, i, j, k)))
    n = A.n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                d = _basis_defect(A, i, j, k)
                if d:
                    return ZinbielVerdict(False, (i, j, k), Vector.from_sparse(n, d))
    return ZinbielVerdict(True)


def rational_vector(values):
    return Vector(Fraction(v) for v in values)
