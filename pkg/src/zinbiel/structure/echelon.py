"""Exact linear algebra over the parameter fraction field.

Forward elimination is fraction free (Bareiss): rows are first cleared of
denominators, then eliminated over the integers or over Q[params] with exact
division by the previous pivot.  Pivots are normalized only at the end, which
yields the canonical reduced row echelon basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm as ilcm

from .. import kernels
from ..algebra import Vector
from ..errors import DimensionMismatch, SingularMap
from ..scalar import ONE, ZERO, Polynomial, Scalar, divexact
from ..scalar.poly import lcm as plcm


def _common_length(vectors, ambient_dim):
    n = ambient_dim
    for v in vectors:
        if n is None:
            n = len(v)
        elif len(v) != n:
            raise DimensionMismatch(f"vectors of lengths {n} and {len(v)}")
    if n is None:
        raise DimensionMismatch("ambient dimension unknown for an empty family")
    return n


def _integer_rows(rows):
    out = []
    for r in rows:
        fr = [c.to_fraction() for c in r]
        d = ilcm(*(f.denominator for f in fr)) if fr else 1
        ir = [int(f * d) for f in fr]
        if any(ir):
            out.append(ir)
    return out


def _polynomial_rows(rows):
    out = []
    for r in rows:
        den = Polynomial.constant(1)
        for c in r:
            if not c.den.is_one():
                den = plcm(den, c.den)
        pr = [c.num * divexact(den, c.den) if c else c.num for c in r]
        if any(pr):
            out.append(pr)
    return out


def _poly_size(p):
    return (len(p.terms), p.total_degree())


def _bareiss_poly(m, ncols, want_rows=True):
    m = [list(r) for r in m]
    nrows = len(m)
    prev = Polynomial.constant(1)
    pivots = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        cands = [i for i in range(r, nrows) if m[i][col]]
        if not cands:
            continue
        sel = min(cands, key=lambda i: _poly_size(m[i][col]))
        m[r], m[sel] = m[sel], m[r]
        piv_row = m[r]
        p = piv_row[col]
        for i in range(r + 1, nrows):
            row = m[i]
            f = row[col]
            for j in range(col + 1, ncols):
                val = p * row[j]
                if f:
                    val = val - f * piv_row[j]
                row[j] = divexact(val, prev) if not prev.is_one() else val
            row[col] = Polynomial.constant(0)
        prev = p
        pivots.append(col)
        r += 1
    return m[:r], pivots


def _scalar_rows(rows):
    """Fraction-free echelon form of Scalar rows (constant fast path)."""
    if all(c.is_constant() for r in rows for c in r):
        ech, piv = kernels.bareiss_echelon(_integer_rows(rows), len(rows[0]) if rows else 0)
        return [[Fraction(x) for x in r] for r in ech], piv, True
    ncols = len(rows[0])
    ech, piv = _bareiss_poly(_polynomial_rows(rows), ncols)
    return [[Scalar(x) for x in r] for r in ech], piv, False


def _rref(ech, pivots):
    rows = [list(r) for r in ech]
    for idx in range(len(rows) - 1, -1, -1):
        row = rows[idx]
        p = pivots[idx]
        inv = 1 / row[p]
        row[:] = [x * inv if x else x for x in row]
        for up in range(idx):
            f = rows[up][p]
            if f:
                rows[up] = [a - f * b if b else a for a, b in zip(rows[up], row)]
    return rows


@dataclass(frozen=True)
class Subspace:
    """Span of ``rows``, which are in reduced row echelon form."""

    rows: tuple
    ambient_dim: int

    @property
    def dim(self):
        return len(self.rows)

    rank = dim

    @property
    def pivots(self):
        return tuple(next(i for i, c in enumerate(r.coords) if c) for r in self.rows)

    def is_zero(self):
        return not self.rows

    def basis(self):
        return list(self.rows)

    def reduce(self, v):
        """Remainder of v after eliminating this subspace's pivot columns."""
        coords = list(v.coords)
        for row, p in zip(self.rows, self.pivots):
            f = coords[p]
            if f:
                coords = [a - f * b if b else a for a, b in zip(coords, row.coords)]
        return Vector._wrap(tuple(coords))

    def contains(self, v):
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length differs from ambient dimension")
        return self.reduce(v).is_zero()

    __contains__ = contains

    def issubspace(self, other):
        return all(other.contains(r) for r in self.rows)

    def __le__(self, other):
        return self.issubspace(other)

    def join(self, other):
        return echelonize(list(self.rows) + list(other.rows), self.ambient_dim)

    def subs(self, assignment):
        return echelonize([r.subs(assignment) for r in self.rows], self.ambient_dim)

    def __repr__(self):
        from ..algebra import format_vector

        inner = ", ".join(format_vector(r) for r in self.rows)
        return f"Subspace(dim={self.dim}, <{inner}>)"


def zero_subspace(n):
    return Subspace((), n)


def full_space(n):
    return Subspace(tuple(Vector.basis(n, i) for i in range(1, n + 1)), n)


def echelonize(vectors, ambient_dim=None):
    """Canonical reduced echelon basis of the span of ``vectors``."""
    vectors = list(vectors)
    n = _common_length(vectors, ambient_dim)
    rows = [list(v.coords) for v in vectors if not v.is_zero()]
    if not rows:
        return Subspace((), n)
    ech, piv, constant = _scalar_rows(rows)
    red = _rref(ech, piv)
    if constant:
        out = tuple(Vector._wrap(tuple(Scalar.coerce(x) for x in r)) for r in red)
    else:
        out = tuple(Vector._wrap(tuple(r)) for r in red)
    return Subspace(out, n)


def generic_rank(vectors, ambient_dim=None):
    """Rank over the fraction field (generic parameter values)."""
    vectors = list(vectors)
    _common_length(vectors, ambient_dim)
    rows = [list(v.coords) for v in vectors if not v.is_zero()]
    if not rows:
        return 0
    return len(_scalar_rows(rows)[1])


def nullspace(rows, ncols):
    """Basis of {x : r . x = 0 for every row r} as a Subspace of dimension ncols."""
    rows = [r for r in rows if not r.is_zero()]
    if not rows:
        return full_space(ncols)
    for r in rows:
        if len(r) != ncols:
            raise DimensionMismatch("row length differs from column count")
    ech, piv, constant = _scalar_rows([list(r.coords) for r in rows])
    red = _rref(ech, piv)
    if constant:
        red = [[Scalar.coerce(x) for x in r] for r in red]
    free = [c for c in range(ncols) if c not in piv]
    kernel = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for r, p in zip(red, piv):
            if r[f]:
                x[p] = -r[f]
        kernel.append(Vector._wrap(tuple(x)))
    return echelonize(kernel, ncols)


def determinant(matrix):
    """Exact determinant of a square matrix of Scalars (list of rows)."""
    n = len(matrix)
    if any(len(r) != n for r in matrix):
        raise DimensionMismatch("determinant of a non-square matrix")
    if n == 0:
        return ONE
    scale = ONE
    prows = []
    for r in matrix:
        r = [Scalar.coerce(c) for c in r]
        den = Polynomial.constant(1)
        for c in r:
            if not c.den.is_one():
                den = plcm(den, c.den)
        scale = scale * Scalar(den)
        prows.append([c.num * divexact(den, c.den) if c else c.num for c in r])
    sign = 1
    prev = Polynomial.constant(1)
    m = prows
    for col in range(n):
        sel = next((i for i in range(col, n) if m[i][col]), None)
        if sel is None:
            return ZERO
        if sel != col:
            m[col], m[sel] = m[sel], m[col]
            sign = -sign
        p = m[col][col]
        for i in range(col + 1, n):
            f = m[i][col]
            for j in range(col + 1, n):
                val = p * m[i][j] - f * m[col][j]
                m[i][j] = divexact(val, prev) if not prev.is_one() else val
            m[i][col] = Polynomial.constant(0)
        prev = p
    return Scalar(m[n - 1][n - 1]) * sign / scale


def inverse(matrix):
    """Gauss-Jordan inverse over the fraction field; raises SingularMap."""
    n = len(matrix)
    aug = [[Scalar.coerce(c) for c in r] + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(matrix)]
    for col in range(n):
        cands = [i for i in range(col, n) if aug[i][col]]
        if not cands:
            raise SingularMap("matrix is singular over the parameter field")
        sel = min(cands, key=lambda i: (not aug[i][col].is_constant(), len(aug[i][col].num.terms)))
        aug[col], aug[sel] = aug[sel], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [x * inv if x else x for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b if b else a for a, b in zip(aug[i], aug[col])]
    return [r[n:] for r in aug]
