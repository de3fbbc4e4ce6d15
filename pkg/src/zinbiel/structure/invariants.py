"""Lower central series, annihilators and the fingerprint built from them.

All ranks are generic ranks over the parameter fraction field; to study a
particular parameter value instantiate the table first (``A.subs``).
"""

from __future__ import annotations

import enum
from dataclasses import astuple, dataclass, fields

from ..algebra import Vector, multiply
from ..errors import DimensionMismatch, NotNilpotentWithinBound
from .echelon import echelonize, full_space, generic_rank, nullspace


def subspace_product(A, U, V):
    """span{u o v : u in basis(U), v in basis(V)}."""
    if U.ambient_dim != A.n or V.ambient_dim != A.n:
        raise DimensionMismatch("subspace ambient dimension differs from the algebra")
    prods = [multiply(A, u, v) for u in U.rows for v in V.rows]
    return echelonize(prods, A.n)


def lower_central_series(A):
    """[A^1, A^2, ..., A^s] with A^{k+1} = A o A^k and A^s = 0."""
    whole = full_space(A.n)
    series = [whole]
    for _ in range(A.n + 1):
        nxt = subspace_product(A, whole, series[-1])
        if nxt.is_zero():
            series.append(nxt)
            return series
        if nxt.dim == series[-1].dim:
            raise NotNilpotentWithinBound(
                f"lower central series stabilizes at dimension {nxt.dim}"
            )
        series.append(nxt)
    raise NotNilpotentWithinBound(f"series did not reach zero within {A.n + 2} steps")


def lcs_dims(A):
    return tuple(S.dim for S in lower_central_series(A))


def nilindex(A):
    """Minimal s with A^s = 0."""
    return len(lower_central_series(A))


class Filiformity(str, enum.Enum):
    ZERO_FILIFORM = "zero_filiform"
    FILIFORM = "filiform"
    QUASI_FILIFORM = "quasi_filiform"
    OTHER = "other"


def classify_dims(n, dims):
    def dim_at(i):
        if i <= 1:
            return n
        return dims[i - 1] if i - 1 < len(dims) else 0

    if all(dim_at(i) == n + 1 - i for i in range(1, n + 2)):
        return Filiformity.ZERO_FILIFORM
    if all(dim_at(i) == n - i for i in range(2, n + 1)):
        return Filiformity.FILIFORM
    if dim_at(n - 2) != 0 and dim_at(n - 1) == 0:
        return Filiformity.QUASI_FILIFORM
    return Filiformity.OTHER


def classify_filiformity(A):
    return classify_dims(A.n, lcs_dims(A))


def _annihilator(A, side):
    n = A.n
    rows = []
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            if side == "right":
                # a -> (e_i o a)_k
                coeffs = [A.coeff(i, j, k) for j in range(1, n + 1)]
            else:
                # a -> (a o e_i)_k
                coeffs = [A.coeff(j, i, k) for j in range(1, n + 1)]
            if any(coeffs):
                rows.append(Vector._wrap(tuple(coeffs)))
    return nullspace(rows, n)


def right_annihilator(A):
    """R(A) = {a : b o a = 0 for all b}."""
    return _annihilator(A, "right")


def left_annihilator(A):
    """L(A) = {a : a o b = 0 for all b}."""
    return _annihilator(A, "left")


def _basis_product(A, i, j):
    return Vector.from_sparse(A.n, A.product(i, j))


def sym_antisym_ranks(A):
    """Ranks of span{e_i e_j + e_j e_i} and span{e_i e_j - e_j e_i}."""
    n = A.n
    sym, anti = [], []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            a = _basis_product(A, i, j)
            b = _basis_product(A, j, i)
            sym.append(a + b)
            if i != j:
                anti.append(a - b)
    return generic_rank(sym, n), generic_rank(anti, n)


@dataclass(frozen=True)
class Fingerprint:
    dim: int
    lcs_dims: tuple
    nilindex: int
    left_ann_dim: int
    right_ann_dim: int
    sym_rank: int
    antisym_rank: int

    def as_dict(self):
        d = {f.name: getattr(self, f.name) for f in fields(self)}
        d["lcs_dims"] = list(self.lcs_dims)
        return d

    def astuple(self):
        return astuple(self)


def fingerprint(A):
    dims = tuple(lcs_dims(A))
    sym, anti = sym_antisym_ranks(A)
    return Fingerprint(
        dim=A.n,
        lcs_dims=dims,
        nilindex=len(dims),
        left_ann_dim=left_annihilator(A).dim,
        right_ann_dim=right_annihilator(A).dim,
        sym_rank=sym,
        antisym_rank=anti,
    )
