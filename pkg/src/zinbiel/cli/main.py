"""``zinbiel`` command-line interface.

Exit codes: 0 all checks pass, 1 a mathematical violation was found,
2 input or usage error.
"""

from __future__ import annotations

import argparse
import sys

from ..algebra import format_vector, is_zinbiel
from ..catalog import CatalogKey, Section, family, list_keys, make, sections_for, verify_catalog
from ..catalog.verify import DEFAULT_MAX_N
from ..errors import InvalidWitness, NotNilpotentWithinBound, ZinbielError
from ..morphism import noniso_certificate, transport
from ..scalar import print_scalar
from ..structure import (
    check_grading_witness,
    classify_filiformity,
    detect_type_r,
    fingerprint,
    left_annihilator,
    lower_central_series,
    right_annihilator,
)
from .fileformat import AlgebraFile, dump_algebra, dumps, load_algebra, load_matrix

OK, VIOLATION, INPUT_ERROR = 0, 1, 2


class UsageError(ZinbielError):
    pass


def _emit(args, payload, text):
    if getattr(args, "json", False):
        sys.stdout.write(dumps(payload))
    else:
        print(text)


def _vec(v):
    return [print_scalar(c) for c in v.coords]


def _subspace(S):
    return [_vec(r) for r in S.rows]


def cmd_check(args):
    A = load_algebra(args.file).table
    v = is_zinbiel(A)
    if v:
        _emit(args, {"holds": True}, "identity holds on all basis triples")
        return OK
    i, j, k = v.witness
    payload = {"holds": False, "witness": [i, j, k], "defect": _vec(v.defect)}
    _emit(args, payload, f"identity fails: Z(e{i},e{j},e{k}) = {format_vector(v.defect)}")
    return VIOLATION


def cmd_series(args):
    A = load_algebra(args.file).table
    series = lower_central_series(A)
    dims = [S.dim for S in series]
    cls = classify_filiformity(A).value
    payload = {"lcs_dims": dims, "nilindex": len(dims), "class": cls, "bases": [_subspace(S) for S in series]}
    lines = [f"dims: {' '.join(map(str, dims))}", f"nilindex: {len(dims)}", f"class: {cls}"]
    _emit(args, payload, "\n".join(lines))
    return OK


def cmd_annihilators(args):
    A = load_algebra(args.file).table
    L, R = left_annihilator(A), right_annihilator(A)
    payload = {"left": {"dim": L.dim, "basis": _subspace(L)}, "right": {"dim": R.dim, "basis": _subspace(R)}}
    text = "\n".join(
        f"{name}: dim {S.dim}  <{', '.join(format_vector(r) for r in S.rows)}>"
        for name, S in (("L", L), ("R", R))
    )
    _emit(args, payload, text)
    return OK


def _fp_text(fp):
    return "\n".join(f"{k}: {v}" for k, v in fp.as_dict().items())


def cmd_fingerprint(args):
    fp = fingerprint(load_algebra(args.file).table)
    _emit(args, fp.as_dict(), _fp_text(fp))
    return OK


def cmd_grade(args):
    af = load_algebra(args.file)
    if af.grading is None:
        raise UsageError(f"{args.file} has no 'grading' field")
    verdict = check_grading_witness(af.table, af.grading)
    payload = {
        "valid": verdict.valid,
        "violations": [
            {"kind": v.kind, "detail": v.detail, "product": list(v.product) if v.product else None}
            for v in verdict.violations
        ],
    }
    lines = ["grading witness valid" if verdict.valid else "grading witness invalid"]
    lines += [f"  {v.kind}: {v.detail}" for v in verdict.violations]
    if verdict.valid and args.extra is not None:
        try:
            r = detect_type_r(af.table, af.grading, args.extra)
        except InvalidWitness as exc:
            raise UsageError(str(exc))
        payload["type_r"] = r
        lines.append(f"type r = {r}")
    _emit(args, payload, "\n".join(lines))
    return OK if verdict.valid else VIOLATION


def _parse_params(items):
    params = {}
    for item in items or []:
        name, sep, value = item.partition("=")
        if not sep or not name:
            raise UsageError(f"--param expects NAME=RATIONAL, got {item!r}")
        params[name.strip()] = value.strip()
    return params


def _resolve(name, section):
    if section is not None:
        return family(section, name)
    found = sections_for(name)
    if not found:
        raise UsageError(f"unknown catalog entry {name!r}")
    if len(found) > 1:
        opts = ", ".join(s.value for s in found)
        raise UsageError(f"{name!r} appears in several sections ({opts}); pass --section")
    return family(found[0], name)


def cmd_catalog_list(args):
    keys = list_keys(args.section)
    payload = [{"section": k.section.value, "name": k.name, "n": k.n} for k in keys]
    text = "\n".join(
        f"{k.section.value:<12} {k.name}" + ("" if k.n is not None else f"  (n >= {family(k.section, k.name).n_min})")
        for k in keys
    )
    _emit(args, payload, text)
    return OK


def cmd_catalog_emit(args):
    fam = _resolve(args.name, args.section)
    key = CatalogKey(fam.section, fam.name, args.n)
    entry = make(key, _parse_params(args.param), quarantine=args.quarantine)
    anomalies = [
        {"location": a.location, "description": a.description, "checks": list(a.checks)}
        for a in entry.profile.anomalies
    ]
    text = dump_algebra(AlgebraFile(entry.table, entry.witness, anomalies))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return OK


def cmd_verify_catalog(args):
    report = verify_catalog(args.section, args.max_n)
    if args.json:
        sys.stdout.write(dumps(report.as_dict()))
    else:
        print(report.render())
    return OK if report.ok else VIOLATION


def cmd_transport(args):
    af = load_algebra(args.file)
    M = load_matrix(args.matrix)
    B = transport(af.table, M)
    text = dump_algebra(AlgebraFile(B))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return OK


def cmd_compare(args):
    A = load_algebra(args.file_a).table
    B = load_algebra(args.file_b).table
    fa, fb = fingerprint(A), fingerprint(B)
    cert = noniso_certificate(A, B)
    payload = {
        "equal_tensors": A == B,
        "fingerprints": [fa.as_dict(), fb.as_dict()],
        "certificate": [{"field": d.field, "left": d.left, "right": d.right} for d in cert.differences]
        if cert
        else None,
        "verdict": "NOT_ISOMORPHIC" if cert else "UNRESOLVED",
    }
    lines = [f"tensors equal: {'yes' if A == B else 'no'}"]
    lines += [f"A {k}: {v}" for k, v in fa.as_dict().items()]
    lines += [f"B {k}: {v}" for k, v in fb.as_dict().items()]
    if cert:
        lines.append(f"not isomorphic: {cert}")
    else:
        lines.append("UNRESOLVED: fingerprints agree")
    _emit(args, payload, "\n".join(lines))
    return OK


def build_parser():
    p = argparse.ArgumentParser(prog="zinbiel", description="Exact checks on Zinbiel algebra tables.")
    sub = p.add_subparsers(dest="command", required=True)
    sections = [s.value for s in Section]

    def file_cmd(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=fn)
        return sp

    file_cmd("check", cmd_check, "verify the Zinbiel identity")
    file_cmd("series", cmd_series, "lower central series and filiform class")
    file_cmd("annihilators", cmd_annihilators, "left and right annihilators")
    file_cmd("fingerprint", cmd_fingerprint, "isomorphism invariants")
    g = file_cmd("grade", cmd_grade, "check the file's grading witness")
    g.add_argument("--extra", type=int, help="basis index of the extra vector; reports its degree r")

    cat = sub.add_parser("catalog", help="list or emit catalog entries")
    csub = cat.add_subparsers(dest="catalog_command", required=True)
    cl = csub.add_parser("list")
    cl.add_argument("--section", choices=sections)
    cl.add_argument("--json", action="store_true")
    cl.set_defaults(func=cmd_catalog_list)
    ce = csub.add_parser("emit")
    ce.add_argument("name")
    ce.add_argument("--section", choices=sections)
    ce.add_argument("--n", type=int)
    ce.add_argument("--param", action="append", metavar="NAME=RATIONAL")
    ce.add_argument("--quarantine", action="store_true", help="use the documented reading of an ill-formed table")
    ce.add_argument("--out", metavar="PATH")
    ce.set_defaults(func=cmd_catalog_emit)

    vc = sub.add_parser("verify-catalog", help="check every catalog entry against its profile")
    vc.add_argument("--section", choices=sections)
    vc.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    vc.add_argument("--json", action="store_true")
    vc.set_defaults(func=cmd_verify_catalog)

    tr = sub.add_parser("transport", help="rewrite a table in the basis given by a matrix file")
    tr.add_argument("file")
    tr.add_argument("--matrix", required=True)
    tr.add_argument("--out", metavar="PATH")
    tr.set_defaults(func=cmd_transport)

    cp = sub.add_parser("compare", help="fingerprints and a non-isomorphism certificate")
    cp.add_argument("file_a")
    cp.add_argument("file_b")
    cp.add_argument("--json", action="store_true")
    cp.set_defaults(func=cmd_compare)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    try:
        return args.func(args)
    except NotNilpotentWithinBound as exc:
        print(f"error: {exc}", file=sys.stderr)
        return VIOLATION
    except (ZinbielError, OSError, ValueError, KeyError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return INPUT_ERROR


def run():
    sys.exit(main())
