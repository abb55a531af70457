import json
import re

import pytest

from exceptional import __version__
from exceptional.cli import main, operator_from_spec
from exceptional.exactla import Mat


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def strip_millis(doc):
    for c in doc["checks"]:
        c.pop("millis", None)
    return doc


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "rootdata", "--seed", "7", "--samples", "5", "--format", "json")
    rep = json.loads(out)
    assert code == 0
    assert rep["suite"] == "rootdata" and rep["seed"] == 7 and rep["samples"] == 5
    assert rep["toolkit_version"] == __version__
    assert rep["failed"] == 0 and rep["passed"] == len(rep["checks"]) > 0
    for c in rep["checks"]:
        assert set(c) >= {"suite", "name", "status", "expected", "actual", "millis"}


def test_verify_deterministic(capsys):
    args = ("verify", "--suite", "octonion", "--seed", "123", "--samples", "8", "--format", "json")
    a = strip_millis(json.loads(run(capsys, *args)[1]))
    b = strip_millis(json.loads(run(capsys, *args)[1]))
    assert a == b


def test_verify_text_and_out(capsys, tmp_path):
    f = tmp_path / "r.txt"
    code, out, _ = run(capsys, "verify", "--suite", "rootdata", "--samples", "2", "--out", str(f))
    assert code == 0 and out == ""
    text = f.read_text()
    assert re.search(r"passed \d+\s+failed 0", text)


def test_verify_with_prime(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "rootdata", "--samples", "2", "--prime", "1000003", "--format", "json")
    assert code == 0 and json.loads(out)["prime"] == 1000003


@pytest.mark.parametrize("p", ["4", "2", "1000001"])
def test_verify_invalid_prime(capsys, p):
    code, _, err = run(capsys, "verify", "--suite", "rootdata", "--prime", p)
    assert code == 2 and "prime" in err


def test_bad_seed():
    with pytest.raises(SystemExit) as e:
        main(["verify", "--seed", "-1"])
    assert e.value.code == 2


def test_dump_catalog(capsys):
    code, out, _ = run(capsys, "dump-catalog")
    doc = json.loads(out)
    assert code == 0 and len(doc["orbits"]) == 17
    assert [o["trivially_acting_dim"] for o in doc["orbits"]][:5] == [6] * 5


def test_dump_operator(capsys):
    code, out, _ = run(capsys, "dump-operator", "identity")
    doc = json.loads(out)
    assert code == 0 and doc["rows"] == 27 and doc["cols"] == 27
    assert len(doc["columns"]) == 27
    for spec in ["heis:" + ",".join(["0"] * 24), "sl3:1,0,0,0,1,0,0,0,1", "gl2:1,0,0,1", "g2root:0:0"]:
        assert operator_from_spec(spec) == Mat.identity(27)
    assert operator_from_spec("g2root:3") != Mat.identity(27)


@pytest.mark.parametrize("spec", ["heis:1,2", "g2root:99", "bogus", "sl3:a,b"])
def test_dump_operator_errors(capsys, spec):
    assert run(capsys, "dump-operator", spec)[0] == 2


def test_dump_algebra(capsys):
    code, out, _ = run(capsys, "dump-algebra", "g2_derivations")
    doc = json.loads(out)
    assert code == 0 and doc["dim"] == 14 and len(doc["basis"]) == 14


def test_rho(capsys, tmp_path):
    from exceptional.rootdata import CARTAN_TABLE
    f = tmp_path / "e6.json"
    f.write_text(json.dumps({"cartan": CARTAN_TABLE["E6"], "labels": [f"a{i}" for i in range(1, 7)], "selected": "a6"}))
    code, out, _ = run(capsys, "rho", str(f))
    doc = json.loads(out)
    assert code == 0 and doc["c"] == "11/2" and doc["two_c"] == "11" and doc["type"] == "E6"
    code, out, _ = run(capsys, "rho", str(f), "--format", "text")
    assert code == 0 and "c = 11/2" in out
    assert run(capsys, "rho", str(tmp_path / "missing.json"))[0] == 2
    f.write_text(json.dumps({"cartan": [[2, 1], [1, 2]], "selected": 0}))
    assert run(capsys, "rho", str(f))[0] == 2
