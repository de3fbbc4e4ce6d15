import pytest

from conftest import GOLDEN_ANOMALIES, entry_of, table_of
from oracles import first_defect
from zinbiel.algebra import is_zinbiel
from zinbiel.catalog import FAMILIES, CatalogKey, Section, list_keys, make, verify_catalog
from zinbiel.catalog import tables as T
from zinbiel.errors import (
    DimensionOutOfRange,
    IllFormedEntry,
    PoleAtAssignment,
    UnknownKey,
    UnknownParameter,
)
from zinbiel.scalar import Scalar
from zinbiel.structure import Filiformity, classify_filiformity



def test_list_counts():
    assert [k.name for k in list_keys("r2_dim6")] == [f"KF_6^{i}" for i in range(1, 8)]
    assert len(list_keys("r2_dim5")) == 17
    dims = [make(k).table.n for k in list_keys("dim_leq_4")]
    assert [dims.count(d) for d in (1, 2, 3, 4)] == [1, 1, 4, 16]


def test_list_order_is_deterministic():
    assert list_keys() == list_keys()
    assert list_keys()[0].name == "Z_1^1"


def test_colliding_names_are_distinct_entries():
    a = entry_of("r1_dim5", "KF_5^1")
    b = entry_of("r2_dim5", "KF_5^1")
    assert a.key != b.key and a.table != b.table


def test_errors():
    with pytest.raises(UnknownKey):
        make(CatalogKey("r2_dim6", "KF_6^9"))
    with pytest.raises(DimensionOutOfRange):
        make(CatalogKey("r2_general", "KF_n^2", 7))
    with pytest.raises(DimensionOutOfRange):
        make(CatalogKey("filiform", "F_n^1", 4))
    with pytest.raises(UnknownParameter):
        make(CatalogKey("dim_leq_4", "Z_4^8"), {"gamma": 1})
    with pytest.raises(PoleAtAssignment):
        make(CatalogKey("dim_leq_4", "Z_4^15"), {"alpha": 1})
    with pytest.raises(IllFormedEntry):
        make(CatalogKey("r1_dim5", "KF_5^3"))


def test_omitted_or_empty_params_stay_symbolic():
    assert make(CatalogKey("dim_leq_4", "Z_4^8")).table.params == ("alpha",)
    assert make(CatalogKey("dim_leq_4", "Z_4^8"), {}).table.params == ("alpha",)


def test_nf4_equals_z41():
    assert table_of("nulfiliform", "NF", 4) == table_of("dim_leq_4", "Z_4^1")


def test_kf_n1_r2_at_n9():
    A = table_of("r2_general", "KF_n^1", 9)
    assert A.product(1, 8) == {9: Scalar(1)}
    assert A.product(8, 1) == {9: Scalar.param("alpha")}


def test_instantiation_substitutes():
    A = table_of("dim_leq_4", "Z_4^15", params={"alpha": "1/3"})
    assert A.is_constant()
    assert A.product(2, 1)[4] == Scalar.coerce(2)  # (1+1/3)/(1-1/3)


def test_exclusions_are_metadata():
    assert entry_of("r2_dim5", "KF_5^15").excluded
    # the excluded value builds: exclusion is recorded, not enforced
    assert make(CatalogKey("r2_dim5", "KF_5^15"), {"alpha": "-1/2"}).table.is_constant()


GENERAL = [f for f in FAMILIES if f.general]


@pytest.mark.parametrize("fam", GENERAL, ids=lambda f: f"{f.section.value}/{f.name}")
def test_general_families_up_to_12(fam):
    for n in range(fam.n_min, 13):
        entry = make(CatalogKey(fam.section, fam.name, n))
        assert entry.table.n == n
        assert bool(is_zinbiel(entry.table)) == entry.profile.zinbiel_holds
        if fam.section in (Section.R1_GENERAL, Section.R2_GENERAL):
            assert classify_filiformity(entry.table) == Filiformity.QUASI_FILIFORM


def _literal_lines(key):
    if key.section == Section.DIM_LEQ_4:
        return T.DIM_LEQ_4[key.name]
    fixed = {
        Section.R1_DIM5: (5, T.R1_DIM5),
        Section.R2_DIM5: (5, T.R2_DIM5),
        Section.R2_DIM6: (6, T.R2_DIM6),
        Section.R2_DIM7: (7, T.R2_DIM7),
    }
    if key.section in fixed:
        n, d = fixed[key.section]
        return n, d[key.name]
    if key.section in (Section.R3_DIM5, Section.R3_DIM6, Section.R3_DIM7):
        return T.R3[key.name]
    n = key.n
    if key.section == Section.NULFILIFORM:
        return n, T.nf(n)
    v = int(key.name[-1])
    if key.section == Section.FILIFORM:
        return n, T.filiform(v, n)
    if key.section == Section.R1_GENERAL:
        return n, T.r1_general(n)
    return n, T.r2_general(v, n)


def _keys(max_n):
    for fam in FAMILIES:
        if fam.general:
            for n in range(fam.n_min, max_n + 1):
                yield CatalogKey(fam.section, fam.name, n)
        else:
            yield CatalogKey(fam.section, fam.name, fam.n_fixed)


@pytest.mark.parametrize("key", list(_keys(8)), ids=str)
def test_identity_against_sympy_oracle(key):
    """The sympy expansion of the literal lines gives the same witness and defect."""
    n, lines = _literal_lines(key)
    entry = make(key, quarantine=True)
    if entry.quarantined:
        from zinbiel.catalog import family

        lines = family(key.section, key.name).quarantine_lines(n)
    ours = is_zinbiel(entry.table)
    theirs = first_defect(n, lines)
    assert (theirs is None) == bool(ours)
    if theirs is not None:
        import sympy

        from oracles import scalar_to_sympy

        assert ours.witness == theirs[0]
        for a, b in zip(ours.defect, theirs[1]):
            assert sympy.simplify(scalar_to_sympy(a) - b) == 0


def test_verify_catalog_flags_exactly_the_golden_list():
    report = verify_catalog()
    assert report.ok
    assert set(report.flagged()) == GOLDEN_ANOMALIES
    assert len(report.flagged()) == len(GOLDEN_ANOMALIES)


def test_verify_catalog_sections():
    rep = verify_catalog("nulfiliform", 12)
    assert len(rep.entries) == 11
    for rec in rep.entries:
        verdicts = {c.name: c.verdict for c in rec.checks}
        assert verdicts["filiform_class"] == "PASS" and verdicts["nilindex"] == "PASS"
    rep6 = verify_catalog("r2_dim6")
    assert len(rep6.entries) == 7
    seps = {c.name: c for r in rep6.lists for c in r.checks}
    assert seps["separates KF_6^7 / KF_6^5"].verdict == "PASS"
    assert "right_ann_dim" in seps["separates KF_6^7 / KF_6^5"].detail


def test_report_is_deterministic():
    assert verify_catalog().as_dict() == verify_catalog().as_dict()
