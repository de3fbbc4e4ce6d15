"""Registry of catalog families, expected profiles and anomaly annotations."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from ..algebra import AlgebraTable
from ..errors import (
    DimensionOutOfRange,
    IllFormedEntry,
    MissingParameter,
    UnknownKey,
    UnknownParameter,
)
from ..scalar import Scalar, parse_scalar
from ..structure import Filiformity, GradingWitness
from . import tables as T


class Section(str, enum.Enum):
    DIM_LEQ_4 = "dim_leq_4"
    NULFILIFORM = "nulfiliform"
    FILIFORM = "filiform"
    R1_GENERAL = "r1_general"
    R1_DIM5 = "r1_dim5"
    R2_GENERAL = "r2_general"
    R2_DIM5 = "r2_dim5"
    R2_DIM6 = "r2_dim6"
    R2_DIM7 = "r2_dim7"
    R3_DIM5 = "r3_dim5"
    R3_DIM6 = "r3_dim6"
    R3_DIM7 = "r3_dim7"


@dataclass(frozen=True, order=True)
class CatalogKey:
    section: Section
    name: str
    n: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "section", Section(self.section))

    def __str__(self):
        suffix = f"[n={self.n}]" if self.n is not None else ""
        return f"{self.section.value}/{self.name}{suffix}"


@dataclass(frozen=True)
class Anomaly:
    """A printed table entry that is inconsistent, and the checks it trips."""

    location: str
    description: str
    checks: tuple = ()


@dataclass(frozen=True)
class ExpectedProfile:
    zinbiel_holds: bool
    filiform_class: Optional[Filiformity]
    nilindex: Optional[int]
    lcs_dims: Optional[tuple]
    type_r: Optional[int]
    known_invariants: dict = field(default_factory=dict)
    anomalies: tuple = ()

    def anomalous_checks(self):
        return {c for a in self.anomalies for c in a.checks}


@dataclass(frozen=True)
class CatalogEntry:
    key: CatalogKey
    table: AlgebraTable
    profile: ExpectedProfile
    witness: Optional[GradingWitness]
    extra_index: Optional[int] = None
    excluded: dict = field(default_factory=dict)  # parameter -> values the family statement excludes
    quarantined: bool = False

    def __iter__(self):
        return iter((self.table, self.profile, self.witness))


@dataclass(frozen=True)
class Family:
    section: Section
    name: str
    lines: Callable  # n -> printed product lines
    n_min: int
    n_fixed: Optional[int] = None
    params: tuple = ()
    degrees: Optional[Callable] = None  # n -> degree tuple, when naturally graded
    extra_index: Optional[Callable] = None  # n -> index of the designated extra vector
    filiform_class: Optional[Filiformity] = None
    nilindex: Optional[Callable] = None
    lcs_dims: Optional[Callable] = None
    known_invariants: dict = field(default_factory=dict)
    anomalies: tuple = ()
    excluded: dict = field(default_factory=dict)
    quarantine_lines: Optional[Callable] = None

    @property
    def general(self):
        return self.n_fixed is None


# expected shapes -----------------------------------------------------------

def _lcs_from_degrees(degs):
    top = max(degs)
    return tuple(sum(1 for d in degs if d >= k) for k in range(1, top + 2))


def _nf_lcs(n):
    return tuple(range(n, -1, -1))


def _filiform_lcs(n):
    return (n,) + tuple(range(n - 2, -1, -1))


def _deg_nf(n):
    return tuple(range(1, n + 1))


def _deg_f1(n):
    return tuple(range(1, n)) + (1,)


def _deg_r1(n):
    return tuple(range(1, n - 1)) + (1, 1)


def _deg_r2(n):
    return tuple(range(1, n - 1)) + (1, 2)


_R3_DEGREES = {5: (1, 1, 2, 3, 3), 6: (1, 1, 2, 3, 3, 4), 7: (1, 1, 2, 3, 3, 4, 5)}


def _const(x):
    return lambda n: x


def _graded(section, name, lines, n_min, degrees, extra, n_fixed=None, **kw):
    return Family(
        section,
        name,
        lines,
        n_min,
        n_fixed=n_fixed,
        degrees=degrees,
        extra_index=extra,
        filiform_class=Filiformity.QUASI_FILIFORM,
        nilindex=lambda n: len(_lcs_from_degrees(degrees(n))),
        lcs_dims=lambda n: _lcs_from_degrees(degrees(n)),
        **kw,
    )


# anomaly annotations, fixed by auditing every flagged check against the text

_A_R1_KF51 = (
    Anomaly(
        "e2*e1",
        "printed e2*e1 = e3; the identity at (e1,e1,e1) requires e2*e1 = 2*e3 given e1*e2 = e3",
        ("zinbiel",),
    ),
)
_A_R1_KF52 = (
    Anomaly(
        "e4*e1",
        "printed e4*e1 = -e3 lands in degree 3 although e4 and e1 have degree 1; "
        "the derivation in the text has e4*e1 = -e2",
        ("zinbiel", "grading", "type_r"),
    ),
)
_A_R1_KF53 = (
    Anomaly(
        "e4*e1",
        "the table assigns e4*e1 twice (-e3 and e3); quarantine reads the second "
        "assignment as e5*e2 = e3, the value its derivation produces",
        ("well_formed",),
    ),
    Anomaly(
        "e4*e1",
        "with the duplicate resolved, e4*e1 = -e3 is still degree-inconsistent as in KF_5^2",
        ("zinbiel", "grading", "type_r"),
    ),
)
_A_KF65 = (
    Anomaly(
        "e5*e5",
        "with e1*e2 = 0 and e1*e6 = e3 the identity at (e1,e5,e5) leaves -e3",
        ("zinbiel",),
    ),
)
_A_KF67 = (
    Anomaly(
        "e1*e6",
        "e2*e6 = 0 but e1*(e1*e6) = e4, so the identity at (e1,e1,e6) leaves -e4",
        ("zinbiel",),
    ),
)
_A_KF71 = (
    Anomaly(
        "e6*e1",
        "printed e6*e1 = alpha*e6 lands in degree 1 instead of 2; it also enlarges A^2 and "
        "breaks the identity at (e1,e1,e6)",
        ("zinbiel", "lcs_dims", "grading", "type_r"),
    ),
)
_A_KF75 = (
    Anomaly(
        "e3*e1",
        "e3*e1 = -e4 and e7*e1 = -e3 leave -e4 in the identity at (e1,e7,e1)",
        ("zinbiel",),
    ),
)


def _r1_kf53_quarantine(n):
    lines = list(T.R1_DIM5["KF_5^3"])
    lines[3] = (5, 2, {3: 1})
    return lines


def _fixed(table, name):
    return lambda n: table[name]


def _build_families():
    fams = []
    S = Section
    for name, (dim, _) in T.DIM_LEQ_4.items():
        kw = {}
        if name.endswith("^1"):
            # Z_k^1 is the k-dimensional null-filiform algebra
            kw = dict(
                filiform_class=Filiformity.ZERO_FILIFORM,
                nilindex=lambda n: n + 1,
                lcs_dims=_nf_lcs,
            )
        params = ("alpha",) if name in ("Z_3^3", "Z_4^8", "Z_4^9", "Z_4^15") else ()
        excluded = {"alpha": (Fraction(1),)} if name == "Z_4^15" else {}
        fams.append(
            Family(S.DIM_LEQ_4, name, (lambda t: lambda n: t)(T.DIM_LEQ_4[name][1]), dim,
                   n_fixed=dim, params=params, excluded=excluded, **kw)
        )
    fams.append(
        Family(S.NULFILIFORM, "NF", T.nf, 2, degrees=_deg_nf,
               filiform_class=Filiformity.ZERO_FILIFORM, nilindex=lambda n: n + 1, lcs_dims=_nf_lcs)
    )
    for v in (1, 2, 3):
        fams.append(
            Family(S.FILIFORM, f"F_n^{v}", (lambda v: lambda n: T.filiform(v, n))(v), 5,
                   degrees=_deg_f1 if v == 1 else None, filiform_class=Filiformity.FILIFORM,
                   nilindex=lambda n: n, lcs_dims=_filiform_lcs)
        )
    fams.append(_graded(S.R1_GENERAL, "KF_n^1", T.r1_general, 6, _deg_r1, lambda n: n))
    known_r1 = {"KF_5^2": {"left_ann_dim": 3}, "KF_5^3": {"left_ann_dim": 2}}
    anomalies_r1 = {"KF_5^1": _A_R1_KF51, "KF_5^2": _A_R1_KF52, "KF_5^3": _A_R1_KF53}
    for name in T.R1_DIM5:
        fams.append(
            _graded(S.R1_DIM5, name, _fixed(T.R1_DIM5, name), 5, _const((1, 2, 3, 1, 1)), _const(5),
                    n_fixed=5, known_invariants=known_r1.get(name, {}), anomalies=anomalies_r1[name],
                    quarantine_lines=_r1_kf53_quarantine if name == "KF_5^3" else None)
        )
    for v in (1, 2, 3, 4):
        fams.append(
            _graded(S.R2_GENERAL, f"KF_n^{v}", (lambda v: lambda n: T.r2_general(v, n))(v), 8,
                    _deg_r2, lambda n: n, params=("alpha",) if v == 1 else ())
        )
    for name in T.R2_DIM5:
        params = ("beta",) if name == "KF_5^3" else ("alpha",) if name in ("KF_5^14", "KF_5^15") else ()
        excluded = {}
        if name == "KF_5^14":
            excluded = {"alpha": (Fraction(-1),)}
        elif name == "KF_5^15":
            excluded = {"alpha": (Fraction(-1), Fraction(-1, 2))}
        fams.append(
            _graded(S.R2_DIM5, name, _fixed(T.R2_DIM5, name), 5, _const((1, 2, 3, 1, 2)), _const(5),
                    n_fixed=5, params=params, excluded=excluded)
        )
    known_6 = {"KF_6^5": {"right_ann_dim": 1}, "KF_6^6": {"right_ann_dim": 1}, "KF_6^7": {"right_ann_dim": 2}}
    anomalies_6 = {"KF_6^5": _A_KF65, "KF_6^7": _A_KF67}
    for name in T.R2_DIM6:
        fams.append(
            _graded(S.R2_DIM6, name, _fixed(T.R2_DIM6, name), 6, _const((1, 2, 3, 4, 1, 2)), _const(6),
                    n_fixed=6, known_invariants=known_6.get(name, {}), anomalies=anomalies_6.get(name, ()))
        )
    anomalies_7 = {"KF_7^1": _A_KF71, "KF_7^5": _A_KF75, "KF_7^6": _A_KF75}
    for name in T.R2_DIM7:
        fams.append(
            _graded(S.R2_DIM7, name, _fixed(T.R2_DIM7, name), 7, _const((1, 2, 3, 4, 5, 1, 2)), _const(7),
                    n_fixed=7, params=("alpha",) if name == "KF_7^1" else (),
                    anomalies=anomalies_7.get(name, ()))
        )
    for dim, section in ((5, S.R3_DIM5), (6, S.R3_DIM6), (7, S.R3_DIM7)):
        name = f"A3_{dim}"
        fams.append(
            _graded(section, name, (lambda t: lambda n: t)(T.R3[name][1]), dim,
                    _const(_R3_DEGREES[dim]), _const(5), n_fixed=dim)
        )
    return fams


FAMILIES = tuple(_build_families())
_INDEX = {(f.section, f.name): f for f in FAMILIES}

# pairs the text itself separates by a named invariant; None = any component
EXPECTED_SEPARATIONS = {
    Section.R1_DIM5: (
        ("KF_5^2", "KF_5^3", "left_ann_dim"),
        ("KF_5^1", "KF_5^2", None),
        ("KF_5^1", "KF_5^3", None),
    ),
    Section.R2_DIM6: (
        ("KF_6^7", "KF_6^5", "right_ann_dim"),
        ("KF_6^7", "KF_6^6", "right_ann_dim"),
    ),
}


def family(section, name):
    try:
        return _INDEX[(Section(section), name)]
    except (KeyError, ValueError):
        raise UnknownKey(f"no catalog entry {name!r} in section {section!r}") from None


def sections_for(name):
    """Sections containing an entry called ``name`` (names repeat across sections)."""
    return [f.section for f in FAMILIES if f.name == name]


def list_keys(section=None):
    """Catalog keys in order of appearance; general-n families carry n=None."""
    if section is not None:
        section = Section(section)
    return [
        CatalogKey(f.section, f.name, f.n_fixed)
        for f in FAMILIES
        if section is None or f.section == section
    ]


def _coerce_value(name, value):
    if isinstance(value, str):
        value = parse_scalar(value)
    s = Scalar.coerce(value)
    if not s.is_constant():
        raise ValueError(f"parameter {name} must be assigned a rational value")
    return s.to_fraction()


def _collect(lines):
    products = {}
    for i, j, row in lines:
        if (i, j) in products and products[(i, j)] != row:
            raise IllFormedEntry(f"product e{i}*e{j} is assigned two different values")
        products[(i, j)] = row
    return products


def make(key, params=None, quarantine=False):
    """Build a catalog entry as printed.

    ``params`` maps parameter names to rationals; omitted or empty leaves the
    family symbolic.  A table with a doubly assigned product raises
    IllFormedEntry unless ``quarantine`` is set, in which case the documented
    resolution is used and the entry is marked quarantined.
    """
    fam = family(key.section, key.name)
    n = key.n
    if fam.general:
        if n is None:
            raise DimensionOutOfRange(f"{fam.name} needs a dimension n >= {fam.n_min}")
        if n < fam.n_min:
            raise DimensionOutOfRange(f"{fam.name} is defined for n >= {fam.n_min}, got {n}")
    elif n is not None and n != fam.n_fixed:
        raise DimensionOutOfRange(f"{fam.name} has dimension {fam.n_fixed}, got {n}")
    n = fam.n_fixed if n is None else n

    use_quarantine = quarantine and fam.quarantine_lines is not None
    lines = fam.quarantine_lines(n) if use_quarantine else fam.lines(n)
    table = AlgebraTable(n, _collect(lines), params=fam.params)

    if params:
        for p in params:
            if p not in fam.params:
                raise UnknownParameter(p)
        for p in fam.params:
            if p not in params:
                raise MissingParameter(p)
        table = table.subs({p: _coerce_value(p, v) for p, v in params.items()})

    profile = ExpectedProfile(
        zinbiel_holds=True,
        filiform_class=fam.filiform_class,
        nilindex=fam.nilindex(n) if fam.nilindex else None,
        lcs_dims=fam.lcs_dims(n) if fam.lcs_dims else None,
        type_r=(fam.degrees(n)[fam.extra_index(n) - 1] if fam.extra_index else None),
        known_invariants=dict(fam.known_invariants),
        anomalies=fam.anomalies,
    )
    witness = GradingWitness(fam.degrees(n)) if fam.degrees else None
    return CatalogEntry(
        key=CatalogKey(fam.section, fam.name, n if fam.general else fam.n_fixed),
        table=table,
        profile=profile,
        witness=witness,
        extra_index=fam.extra_index(n) if fam.extra_index else None,
        excluded=dict(fam.excluded),
        quarantined=use_quarantine,
    )
