import random
from fractions import Fraction

import pytest

from conftest import entry_of, table_of
from oracles import lcs_dims_oracle
from zinbiel.algebra import AlgebraTable, Vector, abelian
from zinbiel.catalog import FAMILIES, CatalogKey, make
from zinbiel.catalog import tables as T
from zinbiel.errors import DimensionMismatch, IncompleteWitness, InvalidWitness, NotNilpotentWithinBound
from zinbiel.scalar import Scalar
from zinbiel.structure import (
    Filiformity,
    GradingWitness,
    check_grading_witness,
    classify_filiformity,
    detect_type_r,
    echelonize,
    fingerprint,
    full_space,
    generic_rank,
    graded_algebra,
    lcs_dims,
    left_annihilator,
    lower_central_series,
    nilindex,
    right_annihilator,
    subspace_product,
    sym_antisym_ranks,
    zero_subspace,
)

alpha = Scalar.param("alpha")


def e(n, i):
    return Vector.basis(n, i)


# echelonize -----------------------------------------------------------------

def test_echelonize_examples():
    S = echelonize([e(3, 1), e(3, 1)])
    assert S.dim == 1 and S.rows == [e(3, 1)] or tuple(S.rows) == (e(3, 1),)
    T2 = echelonize([Vector([1, alpha]), Vector([0, 1])])
    assert T2.dim == 2
    assert list(T2.rows) == [e(2, 1), e(2, 2)]
    assert generic_rank([Vector([1, alpha]), Vector([alpha, alpha * alpha])]) == 1


def test_echelon_form_is_reduced():
    rng = random.Random(5)
    for _ in range(30):
        rows = [Vector([alpha * rng.randint(-2, 2) + rng.randint(-2, 2) for _ in range(5)]) for _ in range(4)]
        S = echelonize(rows)
        piv = S.pivots
        assert list(piv) == sorted(set(piv))
        for r, p in zip(S.rows, piv):
            assert r[p] == 1
            for other, q in zip(S.rows, piv):
                if other is not r:
                    assert other[p].is_zero()


def test_echelonize_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        echelonize([e(3, 1), e(2, 1)])


# products and series ----------------------------------------------------------

def test_subspace_product_examples():
    ab = abelian(4)
    assert subspace_product(ab, full_space(4), full_space(4)).is_zero()
    nf4 = table_of("nulfiliform", "NF", 4)
    sq = subspace_product(nf4, full_space(4), full_space(4))
    assert sq.dim == 3 and sq == echelonize([e(4, 2), e(4, 3), e(4, 4)])
    kf57 = table_of("r2_dim5", "KF_5^7")
    sq = subspace_product(kf57, full_space(5), full_space(5))
    assert sq == echelonize([e(5, 2), e(5, 3), e(5, 5)])


def test_series_examples():
    assert lcs_dims(table_of("nulfiliform", "NF", 6)) == (6, 5, 4, 3, 2, 1, 0)
    assert lcs_dims(abelian(4)) == (4, 0)
    # as printed the KF_6^5 table reaches dim 4 in A^2
    kf65 = entry_of("r2_dim6", "KF_6^5")
    assert lcs_dims(kf65.table) == (6, 4, 2, 1, 0)


def test_nilindex_examples():
    assert nilindex(table_of("nulfiliform", "NF", 7)) == 8
    assert nilindex(abelian(3)) == 2
    assert nilindex(table_of("filiform", "F_n^2", 6)) == 6


def test_not_nilpotent_is_reported():
    idem = AlgebraTable(1, {(1, 1): {1: 1}})
    with pytest.raises(NotNilpotentWithinBound):
        lower_central_series(idem)


def test_classify_examples():
    assert classify_filiformity(table_of("nulfiliform", "NF", 5)) == Filiformity.ZERO_FILIFORM
    assert classify_filiformity(table_of("filiform", "F_n^3", 7)) == Filiformity.FILIFORM
    assert classify_filiformity(table_of("r2_dim7", "KF_7^4")) == Filiformity.QUASI_FILIFORM
    assert classify_filiformity(abelian(4)) == Filiformity.OTHER


def _all_keys(max_n=8):
    for fam in FAMILIES:
        if fam.general:
            for n in range(fam.n_min, max_n + 1):
                yield CatalogKey(fam.section, fam.name, n)
        else:
            yield CatalogKey(fam.section, fam.name, fam.n_fixed)


@pytest.mark.parametrize("key", list(_all_keys()), ids=str)
def test_series_is_monotone_and_bounded(key):
    A = make(key, quarantine=True).table
    series = lower_central_series(A)
    for big, small in zip(series, series[1:]):
        assert small <= big
    assert len(series) <= A.n + 1


@pytest.mark.parametrize("name", ["Z_4^6", "KF_5^9", "KF_6^4", "KF_6^5", "KF_7^2", "A3_6"])
def test_series_dims_match_sympy_oracle(name):
    section = {"Z": "dim_leq_4", "KF_5": "r2_dim5", "KF_6": "r2_dim6", "KF_7": "r2_dim7", "A3": "r3_dim6"}
    sec = next(v for k, v in section.items() if name.startswith(k))
    if name in T.DIM_LEQ_4 or name in T.R3:
        n, lines = {**T.DIM_LEQ_4, **T.R3}[name]
    else:
        n = int(name[3])
        lines = {**T.R2_DIM5, **T.R2_DIM6, **T.R2_DIM7}[name]
    assert list(lcs_dims(table_of(sec, name))) == lcs_dims_oracle(n, lines)


# annihilators and ranks --------------------------------------------------------

def test_annihilator_examples():
    assert left_annihilator(table_of("r1_dim5", "KF_5^2")).dim == 3
    assert left_annihilator(table_of("r1_dim5", "KF_5^3", quarantine=True)).dim == 2
    assert right_annihilator(table_of("r2_dim6", "KF_6^7")).dim == 2
    assert right_annihilator(table_of("r2_dim6", "KF_6^5")).dim == 1
    for n in range(2, 9):
        R = right_annihilator(table_of("nulfiliform", "NF", n))
        assert R == echelonize([e(n, n)])


def test_sym_antisym_examples():
    assert sym_antisym_ranks(abelian(4)) == (0, 0)
    # e1e1 = e2 and e1e2 + e2e1 = 2e3 span two directions
    assert sym_antisym_ranks(table_of("nulfiliform", "NF", 3)) == (2, 1)


def test_generic_square_vanishes_on_degree_one_of_r3_dim5():
    from zinbiel.catalog import generic_square

    entry = entry_of("r3_dim5", "A3_5")
    deg1 = [i for i in range(1, 6) if entry.witness.degree(i) == 1]
    assert generic_square(entry.table, deg1).is_zero()


# grading ----------------------------------------------------------------------

def _r2_witness(n):
    return GradingWitness(tuple(list(range(1, n - 1)) + [1, 2]))


def test_grading_examples():
    for n in range(2, 9):
        assert check_grading_witness(table_of("nulfiliform", "NF", n), GradingWitness(tuple(range(1, n + 1))))
    for n in (8, 9, 10):
        assert check_grading_witness(table_of("r2_general", "KF_n^2", n), _r2_witness(n))
    bad = check_grading_witness(table_of("r2_dim7", "KF_7^1"), _r2_witness(7))
    assert not bad
    assert bad.violation.product == (6, 1)


def test_incomplete_witness():
    with pytest.raises(IncompleteWitness):
        check_grading_witness(table_of("nulfiliform", "NF", 4), GradingWitness((1, 2, 3)))


def test_type_r_examples():
    e5 = entry_of("r1_dim5", "KF_5^1")
    assert detect_type_r(e5.table, e5.witness, 5) == 1
    for v in range(1, 5):
        ent = entry_of("r2_general", f"KF_n^{v}", 9)
        assert detect_type_r(ent.table, ent.witness, 9) == 2
    a37 = entry_of("r3_dim7", "A3_7")
    assert detect_type_r(a37.table, a37.witness, a37.extra_index) == 3


def test_type_r_rejects_invalid_witness():
    with pytest.raises(InvalidWitness):
        detect_type_r(table_of("r2_dim7", "KF_7^1"), _r2_witness(7), 7)


def test_graded_algebra_examples():
    nf5 = table_of("nulfiliform", "NF", 5)
    G, w = graded_algebra(nf5)
    assert G == nf5 and w.degrees == (1, 2, 3, 4, 5)
    G, w = graded_algebra(abelian(3))
    assert G == abelian(3) and w.degrees == (1, 1, 1)
    # e6 o e6 = e5 has degree 1+1 but lands in degree 5, so GrA drops it: NF_5 plus a null vector
    G, w = graded_algebra(table_of("filiform", "F_n^3", 6))
    expected = AlgebraTable(6, {(i, j): row for i, j, row in T.nf_lines(5)})
    assert G == expected
    assert w.degrees == (1, 2, 3, 4, 5, 1)
    assert check_grading_witness(G, w)


@pytest.mark.parametrize("name", ["KF_6^1", "KF_6^3", "KF_6^4"])
def test_graded_algebra_of_graded_entry_keeps_fingerprint(name):
    A = table_of("r2_dim6", name)
    G, w = graded_algebra(A)
    assert check_grading_witness(G, w)
    assert fingerprint(G) == fingerprint(A)


# fingerprint ------------------------------------------------------------------

def test_fingerprint_examples():
    fp = fingerprint(table_of("nulfiliform", "NF", 4))
    assert (fp.dim, fp.lcs_dims, fp.nilindex, fp.left_ann_dim, fp.right_ann_dim) == (4, (4, 3, 2, 1, 0), 5, 1, 1)
    assert fingerprint(abelian(3)).astuple() == (3, (3, 0), 2, 3, 3, 0, 0)
    a = fingerprint(table_of("r1_dim5", "KF_5^2"))
    b = fingerprint(table_of("r1_dim5", "KF_5^3", quarantine=True))
    assert (a.left_ann_dim, b.left_ann_dim) == (3, 2)


# rank specialization -------------------------------------------------------------

def test_generic_rank_specializes():
    rng = random.Random(11)
    beta = Scalar.param("beta")
    for _ in range(15):
        rows = [
            Vector([alpha * rng.randint(-1, 1) + beta * rng.randint(-1, 1) + rng.randint(-1, 1) for _ in range(4)])
            for _ in range(4)
        ]
        g = generic_rank(rows)
        for _ in range(3):
            sigma = {"alpha": Fraction(rng.randint(-1000, 1000), rng.randint(1, 97)),
                     "beta": Fraction(rng.randint(-1000, 1000), rng.randint(1, 97))}
            assert generic_rank([r.subs(sigma) for r in rows]) == g


def test_zero_subspace():
    assert zero_subspace(3).dim == 0 and zero_subspace(3) <= full_space(3)
