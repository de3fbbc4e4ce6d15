"""JSON algebra and matrix files.

Algebra file::

    {"schema_version": "1", "dim": 3, "parameters": ["alpha"], "labels": null,
     "products": [{"i": 1, "j": 1, "terms": [{"k": 2, "coeff": "1"}]}],
     "grading": [1, 2, 3], "anomalies": []}

Matrix file: ``{"dim": n, "parameters": [...], "columns": [[...], ...]}``
where ``columns[j-1]`` lists the coordinates of the image of e_j.
Coefficients are strings in the scalar grammar.  Output is canonical:
sorted products and keys, two-space indent, trailing newline.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from ..algebra import AlgebraTable
from ..errors import FileFormatError, IllFormedEntry
from ..morphism import LinearMap
from ..scalar import parse_scalar, print_scalar
from ..structure import GradingWitness

SCHEMA_VERSION = "1"
ALGEBRA_FIELDS = ("schema_version", "dim", "parameters", "labels", "products", "grading", "anomalies")


@dataclass
class AlgebraFile:
    table: AlgebraTable
    grading: Optional[GradingWitness] = None
    anomalies: list = field(default_factory=list)


def _int_field(obj, name, where, lo=1, hi=None):
    v = obj.get(name)
    if not isinstance(v, int) or isinstance(v, bool):
        raise FileFormatError(f"{where}: '{name}' must be an integer")
    if v < lo or (hi is not None and v > hi):
        raise FileFormatError(f"{where}: '{name}' = {v} outside 1..{hi}")
    return v


def _names(obj, key):
    names = obj.get(key, [])
    if names is None:
        names = []
    if not isinstance(names, list) or not all(isinstance(p, str) for p in names):
        raise FileFormatError(f"'{key}' must be a list of names")
    if len(set(names)) != len(names):
        raise FileFormatError(f"'{key}' lists a name twice")
    return names


def _coeff(text, params, where):
    if not isinstance(text, str):
        raise FileFormatError(f"{where}: coefficients must be strings")
    return parse_scalar(text, params=params)


def algebra_from_dict(data):
    if not isinstance(data, dict):
        raise FileFormatError("algebra file must be a JSON object")
    unknown = sorted(set(data) - set(ALGEBRA_FIELDS))
    if unknown:
        raise FileFormatError(f"unknown field(s): {', '.join(unknown)}")
    if data.get("schema_version") != SCHEMA_VERSION:
        raise FileFormatError(f"unsupported schema_version {data.get('schema_version')!r}")
    n = _int_field(data, "dim", "file")
    params = _names(data, "parameters")
    labels = data.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != n):
        raise FileFormatError("'labels' must be null or a list with one name per basis vector")

    blocks = data.get("products", [])
    if not isinstance(blocks, list):
        raise FileFormatError("'products' must be a list")
    products = {}
    for idx, block in enumerate(blocks):
        where = f"products[{idx}]"
        if not isinstance(block, dict):
            raise FileFormatError(f"{where} must be an object")
        i = _int_field(block, "i", where, hi=n)
        j = _int_field(block, "j", where, hi=n)
        if (i, j) in products:
            raise IllFormedEntry(f"{where}: duplicate product block e{i}*e{j}")
        terms = block.get("terms", [])
        if not isinstance(terms, list):
            raise FileFormatError(f"{where}: 'terms' must be a list")
        row = {}
        for t_idx, term in enumerate(terms):
            twhere = f"{where}.terms[{t_idx}]"
            if not isinstance(term, dict):
                raise FileFormatError(f"{twhere} must be an object")
            k = _int_field(term, "k", twhere, hi=n)
            if k in row:
                raise IllFormedEntry(f"{twhere}: e{k} appears twice in e{i}*e{j}")
            row[k] = _coeff(term.get("coeff"), params, twhere)
        products[(i, j)] = row
    table = AlgebraTable(n, products, params=params, labels=labels)

    grading = data.get("grading")
    if grading is not None:
        if not isinstance(grading, list) or not all(isinstance(d, int) for d in grading):
            raise FileFormatError("'grading' must be null or a list of integers")
        if len(grading) != n:
            raise FileFormatError(f"'grading' has {len(grading)} degrees for dimension {n}")
        grading = GradingWitness(tuple(grading))
    anomalies = data.get("anomalies") or []
    if not isinstance(anomalies, list):
        raise FileFormatError("'anomalies' must be a list")
    return AlgebraFile(table, grading, anomalies)


def algebra_to_dict(af):
    A = af.table
    products = []
    for (i, j), row in A.products():
        terms = [{"k": k, "coeff": print_scalar(row[k])} for k in sorted(row)]
        products.append({"i": i, "j": j, "terms": terms})
    return {
        "schema_version": SCHEMA_VERSION,
        "dim": A.n,
        "parameters": list(A.params),
        "labels": list(A.labels) if A.labels is not None else None,
        "products": products,
        "grading": list(af.grading.degrees) if af.grading is not None else None,
        "anomalies": list(af.anomalies),
    }


def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _read_json(path):
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise FileFormatError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}")


def load_algebra(path):
    return algebra_from_dict(_read_json(path))


def dump_algebra(af):
    return dumps(algebra_to_dict(af))


def matrix_from_dict(data):
    if not isinstance(data, dict):
        raise FileFormatError("matrix file must be a JSON object")
    n = _int_field(data, "dim", "matrix")
    params = _names(data, "parameters")
    cols = data.get("columns")
    if not isinstance(cols, list) or len(cols) != n or any(not isinstance(c, list) or len(c) != n for c in cols):
        raise FileFormatError(f"'columns' must be {n} lists of {n} coefficients")
    columns = [[_coeff(x, params, f"columns[{j}][{i}]") for i, x in enumerate(c)] for j, c in enumerate(cols)]
    return LinearMap.from_columns(columns)


def matrix_to_dict(M):
    return {
        "dim": M.n,
        "parameters": sorted(M.params()),
        "columns": [[print_scalar(x) for x in col] for col in M.columns()],
    }


def load_matrix(path):
    return matrix_from_dict(_read_json(path))
