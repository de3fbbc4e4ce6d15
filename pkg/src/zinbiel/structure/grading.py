"""Natural gradings: adapted-basis witnesses, type detection and GrA."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..algebra import AlgebraTable, Vector, multiply
from ..errors import IncompleteWitness, InvalidWitness
from ..scalar import ZERO
from .echelon import echelonize, inverse
from .invariants import lower_central_series


@dataclass(frozen=True)
class GradingWitness:
    """Degree of each basis vector; ``degrees[i-1]`` belongs to e_i."""

    degrees: tuple

    def __post_init__(self):
        degs = tuple(int(d) for d in self.degrees)
        object.__setattr__(self, "degrees", degs)
        if not degs:
            raise IncompleteWitness("empty grading witness")
        if min(degs) < 1:
            raise InvalidWitness("degrees must be positive")
        if set(degs) != set(range(1, max(degs) + 1)):
            raise InvalidWitness(f"degrees {sorted(set(degs))} are not contiguous from 1")

    @classmethod
    def from_map(cls, mapping, n):
        missing = [i for i in range(1, n + 1) if i not in mapping]
        if missing:
            raise IncompleteWitness(f"no degree for basis indices {missing}")
        return cls(tuple(mapping[i] for i in range(1, n + 1)))

    def degree(self, i):
        return self.degrees[i - 1]

    @property
    def top(self):
        return max(self.degrees)


@dataclass(frozen=True)
class Violation:
    kind: str  # "product" or "filtration"
    detail: str
    product: tuple | None = None  # (i, j) for product violations
    target: int | None = None
    expected: int | None = None
    actual: int | None = None


@dataclass(frozen=True)
class GradingVerdict:
    valid: bool
    violations: tuple = field(default_factory=tuple)

    @property
    def violation(self):
        return self.violations[0] if self.violations else None

    def __bool__(self):
        return self.valid


def check_grading_witness(A, w):
    """Check that ``w`` exhibits A as naturally graded in its own basis.

    (a) e_i o e_j lies in the span of basis vectors of degree deg i + deg j;
    (b) span{e_i : deg i >= k} has the dimension of A^k for every k.
    """
    if len(w.degrees) != A.n:
        raise IncompleteWitness(f"witness covers {len(w.degrees)} of {A.n} basis vectors")
    bad = []
    for (i, j), row in A.products():
        want = w.degree(i) + w.degree(j)
        for k in sorted(row):
            if w.degree(k) != want:
                bad.append(
                    Violation(
                        "product",
                        f"e{i}*e{j} has a component along e{k} of degree {w.degree(k)}, "
                        f"expected degree {want}",
                        product=(i, j),
                        target=k,
                        expected=want,
                        actual=w.degree(k),
                    )
                )
    series = lower_central_series(A)
    for k in range(1, w.top + 2):
        have = sum(1 for d in w.degrees if d >= k)
        lcs = series[k - 1].dim if k - 1 < len(series) else 0
        if have != lcs:
            bad.append(
                Violation(
                    "filtration",
                    f"degrees >= {k} span {have} dimensions but dim A^{k} = {lcs}",
                    expected=lcs,
                    actual=have,
                )
            )
    return GradingVerdict(not bad, tuple(bad))


def detect_type_r(A, w, extra_index):
    """Degree r of the designated extra basis vector (type A_(r))."""
    verdict = check_grading_witness(A, w)
    if not verdict.valid:
        raise InvalidWitness(verdict.violation.detail)
    if not 1 <= extra_index <= A.n:
        raise InvalidWitness(f"extra index {extra_index} out of range")
    return w.degree(extra_index)


def _complement(big, small, n):
    """Representatives of big/small, preferring standard basis vectors."""
    chosen = []
    current = small
    need = big.dim - small.dim
    candidates = [Vector.basis(n, i) for i in range(1, n + 1)] + list(big.rows)
    for v in candidates:
        if len(chosen) == need:
            break
        if big.contains(v) and not current.contains(v):
            chosen.append(v)
            current = current.join(echelonize([v], n))
    return chosen


def graded_algebra(A):
    """Associated graded algebra of the lower central series filtration.

    Returns ``(GrA, witness)``.  The new basis is a union of complements of
    A^{k+1} in A^k; products are truncated to their degree i+j component.
    When A already has an adapted basis the complements are exactly those
    basis vectors and GrA reproduces A's table.
    """
    n = A.n
    series = lower_central_series(A)
    reps = []
    for k in range(len(series) - 1):
        for v in _complement(series[k], series[k + 1], n):
            reps.append((v, k + 1))

    def lead(item):
        v, deg = item
        return (next(i for i, c in enumerate(v.coords) if c), deg)

    reps.sort(key=lead)
    basis = [v for v, _ in reps]
    degrees = [d for _, d in reps]
    # columns of P are the new basis vectors; coordinates come from P^{-1}
    P = [[basis[c][r] for c in range(n)] for r in range(n)]
    Pinv = inverse(P)
    prods = {}
    for a in range(n):
        for b in range(n):
            v = multiply(A, basis[a], basis[b])
            if v.is_zero():
                continue
            want = degrees[a] + degrees[b]
            row = {}
            for k in range(n):
                if degrees[k] != want:
                    continue
                c = ZERO
                for r, x in enumerate(v.coords):
                    if x and Pinv[k][r]:
                        c = c + Pinv[k][r] * x
                if c:
                    row[k + 1] = c
            if row:
                prods[(a + 1, b + 1)] = row
    return AlgebraTable(n, prods, params=A.params), GradingWitness(tuple(degrees))
