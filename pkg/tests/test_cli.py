import json

import pytest

from zinbiel.catalog import FAMILIES, CatalogKey
from zinbiel.cli.main import main


@pytest.fixture
def emit(tmp_path):
    def _emit(name, *extra):
        out = tmp_path / f"{name.replace('^', '_')}_{len(list(tmp_path.iterdir()))}.json"
        assert main(["catalog", "emit", name, *extra, "--out", str(out)]) == 0
        return out

    return _emit


def _write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj), encoding="utf-8")
    return p


def test_check_exit_codes(emit, tmp_path, capsys):
    assert main(["check", str(emit("NF", "--n", "5"))]) == 0
    bad = {
        "schema_version": "1", "dim": 3, "parameters": [], "labels": None,
        "products": [{"i": 1, "j": 1, "terms": [{"k": 2, "coeff": "1"}]},
                     {"i": 1, "j": 2, "terms": [{"k": 3, "coeff": "1"}]}],
        "grading": None, "anomalies": [],
    }
    capsys.readouterr()
    assert main(["check", str(_write(tmp_path, "bad.json", bad)), "--json"]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["witness"] == [1, 1, 1] and out["defect"] == ["0", "0", "-2"]
    dup = dict(bad, products=bad["products"] + [{"i": 1, "j": 1, "terms": []}])
    assert main(["check", str(_write(tmp_path, "dup.json", dup))]) == 2
    assert "IllFormedEntry" in capsys.readouterr().err


def test_input_errors(tmp_path, capsys):
    assert main(["check", str(tmp_path / "missing.json")]) == 2
    (tmp_path / "junk.json").write_text("{not json", encoding="utf-8")
    assert main(["check", str(tmp_path / "junk.json")]) == 2
    bad_coeff = {"schema_version": "1", "dim": 2, "parameters": [], "labels": None,
                 "products": [{"i": 1, "j": 1, "terms": [{"k": 2, "coeff": "1 + * 2"}]}],
                 "grading": None, "anomalies": []}
    assert main(["check", str(_write(tmp_path, "c.json", bad_coeff))]) == 2
    assert "position 4" in capsys.readouterr().err
    assert main(["frobnicate"]) == 2
    assert main(["catalog", "emit", "KF_5^1"]) == 2  # ambiguous across sections
    assert main(["catalog", "emit", "Z_4^15", "--param", "alpha=1"]) == 2
    assert main(["catalog", "emit", "KF_5^3", "--section", "r1_dim5"]) == 2
    assert main(["catalog", "emit", "KF_n^2", "--section", "r2_general", "--n", "6"]) == 2


def test_series_annihilators_grade(emit, capsys):
    nf6 = emit("NF", "--n", "6")
    capsys.readouterr()
    assert main(["series", str(nf6), "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["lcs_dims"] == [6, 5, 4, 3, 2, 1, 0]
    kf67 = emit("KF_6^7")
    capsys.readouterr()
    assert main(["annihilators", str(kf67), "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["right"]["dim"] == 2
    kf71 = emit("KF_7^1")
    capsys.readouterr()
    assert main(["grade", str(kf71), "--json"]) == 1
    viol = json.loads(capsys.readouterr().out)["violations"][0]
    assert viol["product"] == [6, 1]
    assert main(["grade", str(emit("KF_7^2")), "--extra", "7", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["type_r"] == 2


def test_emit_kf_n2(emit):
    data = json.loads(emit("KF_n^2", "--section", "r2_general", "--n", "9").read_text())
    assert data["dim"] == 9
    assert {"i": 8, "j": 8, "terms": [{"k": 9, "coeff": "1"}]} in data["products"]


def test_transport_and_compare(emit, tmp_path, capsys):
    nf3 = emit("NF", "--n", "3")
    m = _write(tmp_path, "m.json", {"dim": 3, "parameters": [], "columns": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1/2"]]})
    out = tmp_path / "t.json"
    assert main(["transport", str(nf3), "--matrix", str(m), "--out", str(out)]) == 0
    z31 = emit("Z_3^1")
    capsys.readouterr()
    assert main(["compare", str(out), str(z31), "--json"]) == 0
    res = json.loads(capsys.readouterr().out)
    assert res["equal_tensors"] and res["verdict"] == "UNRESOLVED"
    sing = _write(tmp_path, "s.json", {"dim": 3, "parameters": [], "columns": [["1", "0", "0"], ["1", "0", "0"], ["0", "0", "1"]]})
    assert main(["transport", str(nf3), "--matrix", str(sing)]) == 2


def test_compare_certificate(emit, capsys):
    a = emit("KF_5^2", "--section", "r1_dim5")
    b = emit("KF_5^3", "--section", "r1_dim5", "--quarantine")
    capsys.readouterr()
    assert main(["compare", str(a), str(b), "--json"]) == 0
    res = json.loads(capsys.readouterr().out)
    assert res["verdict"] == "NOT_ISOMORPHIC"
    assert {"field": "left_ann_dim", "left": 3, "right": 2} in res["certificate"]
    assert main(["compare", str(a), str(a)]) == 0
    assert "UNRESOLVED" in capsys.readouterr().out


def test_verify_catalog_exit_and_determinism(capsys):
    assert main(["verify-catalog", "--json"]) == 0
    first = capsys.readouterr().out
    assert main(["verify-catalog", "--json"]) == 0
    assert capsys.readouterr().out == first
    data = json.loads(first)
    assert data["summary"]["FAIL"] == 0 and data["summary"]["ANOMALY"] == 16
    assert main(["verify-catalog"]) == 0
    text = capsys.readouterr().out
    # both renderings carry the same verdict counts
    for verdict in ("PASS", "ANOMALY", "UNRESOLVED"):
        assert sum(line.startswith(verdict) for line in text.splitlines()) == data["summary"][verdict]


def test_catalog_list(capsys):
    assert main(["catalog", "list", "--section", "r2_dim6", "--json"]) == 0
    names = [k["name"] for k in json.loads(capsys.readouterr().out)]
    assert names == [f"KF_6^{i}" for i in range(1, 8)]
