import json
import os

import pytest

from qdouble.cli import main
from qdouble.rmatrix import sl2_rmatrix

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def run(tmp_path, *argv, fmt="json"):
    out = tmp_path / "report"
    code = main(list(argv) + ["--format", fmt, "--output", str(out)])
    return code, out


def load(path):
    with open(path) as fh:
        return json.load(fh)


def test_cartan_check(tmp_path):
    code, out = run(tmp_path, "cartan-check", "--datum", "A2")
    assert code == 0
    assert load(out)["data"]["cartan_matrix"] == [["2", "-1"], ["-1", "2"]]


def test_cartan_check_bad_datum(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"dot": [[3]]}')
    code, out = run(tmp_path, "cartan-check", "--datum", str(p))
    assert code == 1
    assert load(out)["checks"][0]["status"] == "fail"


def test_serre(tmp_path):
    code, out = run(tmp_path, "serre", "--datum", "A2", "--degree", "2,1")
    assert code == 0
    rep = load(out)
    assert rep["data"]["dimension"] == 1
    assert rep["relations"][0]["lhs"] == "e1e1e2 + (-q - q^{-1})*e1e2e1 + e2e1e1"


def test_build_golden(tmp_path):
    code, out = run(tmp_path, "build", "--datum", "A1", "--verify", "3")
    assert code == 0
    with open(os.path.join(GOLDEN, "build-A1-3.json")) as fh:
        assert out.read_text() == fh.read()


def test_induct_sl3_golden(tmp_path):
    code, out = run(tmp_path, "induct-sl3")
    # one displayed relation does not hold as printed
    assert code == 1
    with open(os.path.join(GOLDEN, "induct-sl3.json")) as fh:
        assert out.read_text() == fh.read()
    rep = load(out)
    assert [c["name"] for c in rep["checks"] if c["status"] == "fail"] == ["q e e^2 - e^2 e = q^{-1/2} e^1"]
    assert any("Delta f_1" in n for n in rep["notes"])


def test_root_of_unity(tmp_path):
    code, out = run(tmp_path, "root-of-unity", "--r", "3", "--verify-qt")
    assert code == 0
    assert "qua axioms: pass (3/3)" in load(out)["notes"]


def test_root_of_unity_bad_r(tmp_path, capsys):
    code, _ = run(tmp_path, "root-of-unity", "--r", "4")
    assert code == 2
    assert "odd" in capsys.readouterr().err


def test_fundamental(tmp_path):
    code, out = run(tmp_path, "fundamental", "--datum", "A1", "--max-degree", "5", "--verify")
    assert code == 0
    rels = {r["lhs"]: r["rhs"] for r in load(out)["relations"]}
    assert rels["x1 < e1"] == "-q*x1x1"
    assert rels["x1 < K1"] == "q^{2}*x1"


def test_rmatrix_relations_from_file(tmp_path):
    p = tmp_path / "r.json"
    p.write_text(json.dumps(sl2_rmatrix().to_json()))
    code, out = run(tmp_path, "rmatrix-relations", "--file", str(p), "--dilaton", "--lambda", "q^{-3/2}")
    assert code == 0
    rep = load(out)
    assert rep["data"]["lambda"] == "q^{-3/2}"
    assert "c^{-1}" in rep["data"]["generators"]


def test_rmatrix_relations_errors(tmp_path):
    assert run(tmp_path, "rmatrix-relations", "--file", str(tmp_path / "missing.json"))[0] == 2
    p = tmp_path / "r.json"
    p.write_text('{"n": 2, "entries": [[1, 1, 1, 1, "q +* 1"]]}')
    assert run(tmp_path, "rmatrix-relations", "--file", str(p))[0] == 2
    assert run(tmp_path, "rmatrix-relations", "--file", "sl2-rmatrix", "--lambda", "((")[0] == 2


def test_format_both(tmp_path):
    code, out = run(tmp_path, "serre", "--datum", "A2", "--degree", "1,2", fmt="both")
    assert code == 0
    assert (tmp_path / "report.json").exists()
    tex = (tmp_path / "report.tex").read_text()
    assert r"\begin{align*}" in tex


def test_stdout(capsys):
    assert main(["cartan-check", "--datum", "A1"]) == 0
    assert json.loads(capsys.readouterr().out)["summary"]["ok"]


def test_deterministic(tmp_path):
    a = run(tmp_path, "serre", "--datum", "A2", "--degree", "2,1")[1].read_text()
    b = run(tmp_path, "serre", "--datum", "A2", "--degree", "2,1")[1].read_text()
    assert a == b


def test_bad_config(tmp_path):
    assert run(tmp_path, "build", "--datum", "A1", "--verify", "0")[0] == 2
    assert run(tmp_path, "serre", "--datum", "nowhere", "--degree", "1")[0] == 2
    assert run(tmp_path, "serre", "--datum", "A2", "--degree", "1")[0] == 2
    assert run(tmp_path, "serre", "--datum", "A2", "--degree", "a,b")[0] == 2
    with pytest.raises(SystemExit):
        main(["nonsense"])
