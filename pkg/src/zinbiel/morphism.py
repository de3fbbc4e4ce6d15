"""Basis changes, isomorphism verification and non-isomorphism certificates.

Orientation: a :class:`LinearMap` ``M`` has column j equal to ``M(e_j)``.
``transport(A, M)`` is the table B for which M is an isomorphism A -> B:

    x o_B y = M( M^{-1}x o_A M^{-1}y ).

Consequently ``transport(transport(A, M), N) == transport(A, N @ M)`` and
``is_isomorphism(A, transport(A, M), M)`` holds.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

from .algebra import AlgebraTable, Vector, multiply
from .errors import DimensionMismatch, SingularMap
from .scalar import ZERO, Scalar
from .structure import determinant, fingerprint, inverse


class LinearMap:
    __slots__ = ("matrix", "n", "_det")

    def __init__(self, matrix):
        rows = [tuple(Scalar.coerce(c) for c in r) for r in matrix]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DimensionMismatch("linear map matrix must be square")
        self.matrix = tuple(rows)
        self.n = n
        self._det = None

    @classmethod
    def from_columns(cls, columns):
        cols = [list(c) for c in columns]
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(len(cols))])

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries):
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def columns(self):
        return [tuple(self.matrix[i][j] for i in range(self.n)) for j in range(self.n)]

    @property
    def det(self):
        if self._det is None:
            self._det = determinant([list(r) for r in self.matrix])
        return self._det

    def is_invertible(self):
        """Generic invertibility: det is a nonzero rational function."""
        return not self.det.is_zero()

    def apply(self, v):
        if len(v) != self.n:
            raise DimensionMismatch("vector length differs from map dimension")
        out = []
        for row in self.matrix:
            acc = ZERO
            for a, b in zip(row, v.coords):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return Vector._wrap(tuple(out))

    __call__ = apply

    def __matmul__(self, other):
        n = self.n
        if other.n != n:
            raise DimensionMismatch("composing maps of different dimensions")
        prod = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = ZERO
                for k in range(n):
                    a, b = self.matrix[i][k], other.matrix[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            prod.append(row)
        return LinearMap(prod)

    def inverse(self):
        if not self.is_invertible():
            raise SingularMap("map is not invertible")
        return LinearMap(inverse([list(r) for r in self.matrix]))

    def params(self):
        return set().union(*(c.params() for r in self.matrix for c in r))

    def __eq__(self, other):
        return isinstance(other, LinearMap) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)


def transport(A, M):
    """The table of A pushed forward along M (see the module docstring)."""
    if M.n != A.n:
        raise DimensionMismatch(f"{M.n}x{M.n} map applied to a {A.n}-dimensional algebra")
    if not M.is_invertible():
        raise SingularMap("cannot transport along a singular map")
    n = A.n
    Minv = M.inverse()
    pre = Minv.columns()
    pre = [Vector._wrap(c) for c in pre]
    prods = {}
    for i in range(n):
        for j in range(n):
            v = M.apply(multiply(A, pre[i], pre[j]))
            row = {k + 1: c for k, c in enumerate(v.coords) if c}
            if row:
                prods[(i + 1, j + 1)] = row
    params = sorted(set(A.params) | M.params())
    return AlgebraTable(n, prods, params=params)


@dataclass(frozen=True)
class IsoVerdict:
    is_iso: bool
    witness: tuple | None = None  # (i, j) basis pair, or None when M is singular
    reason: str = ""

    def __bool__(self):
        return self.is_iso


def is_isomorphism(A, B, M):
    """Does M(e_i o_A e_j) = M(e_i) o_B M(e_j) hold for all basis pairs?"""
    if A.n != B.n or M.n != A.n:
        raise DimensionMismatch("algebras and map must share one dimension")
    if not M.is_invertible():
        return IsoVerdict(False, None, "map is singular")
    n = A.n
    images = [Vector._wrap(c) for c in M.columns()]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            lhs = M.apply(Vector.from_sparse(n, A.product(i, j)))
            rhs = multiply(B, images[i - 1], images[j - 1])
            if lhs != rhs:
                return IsoVerdict(False, (i, j), f"M(e{i}*e{j}) != M(e{i})*M(e{j})")
    return IsoVerdict(True)


@dataclass(frozen=True)
class Difference:
    field: str
    left: object
    right: object

    def __str__(self):
        return f"{self.field}: {self.left} vs {self.right}"


@dataclass(frozen=True)
class NonIsoCertificate:
    """Fingerprint components on which two algebras disagree, in field order."""

    differences: tuple

    @property
    def first(self):
        return self.differences[0]

    def get(self, name):
        return next((d for d in self.differences if d.field == name), None)

    def __str__(self):
        return "; ".join(str(d) for d in self.differences)


def compare_fingerprints(fa, fb):
    diffs = []
    for f in fields(fa):
        a, b = getattr(fa, f.name), getattr(fb, f.name)
        if a != b:
            diffs.append(Difference(f.name, a, b))
    return NonIsoCertificate(tuple(diffs)) if diffs else None


def noniso_certificate(A, B):
    """Invariant-based proof that A and B are not isomorphic, or None.

    None is inconclusive: equal fingerprints do not imply isomorphism.
    """
    return compare_fingerprints(fingerprint(A), fingerprint(B))
