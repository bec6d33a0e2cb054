import json
import subprocess
import sys

import jsonschema
import pytest

from holokit.cli import main
from holokit.serialize import dumps, linrep_from_dict, linrep_to_dict, load_schema, read_linrep


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def report(out):
    d = json.loads(out)
    jsonschema.validate(d, load_schema("report"))
    return d


def test_construct(tmp_path, capsys):
    f = tmp_path / "a.json"
    code, _ = run(capsys, "construct", "--entry", "I-B:2a", "--param", "p=3", "--param", "q=0", "--out", str(f))
    assert code == 0
    d = json.loads(f.read_text())
    jsonschema.validate(d, load_schema("algebra"))
    h = read_linrep(f)
    assert (h.n, h.dim) == (3, 4)
    code, out = run(capsys, "construct", "--entry", "V-B:1b")
    assert code == 0 and json.loads(out)["space_dim"] == 7


def test_construct_errors(capsys):
    code, out = run(capsys, "construct", "--entry", "I-A:7")
    assert code == 2 and report(out)["error"]["kind"] == "MetadataOnly"
    code, out = run(capsys, "construct", "--entry", "I-A:3", "--param", "p=2", "--param", "q=2")
    assert code == 2 and report(out)["error"]["kind"] == "ConditionViolated"


@pytest.mark.parametrize("entry, params", [("III-C:2b", ["m=2", "theta=3/5,4/5"]), ("III-A:2", ["m=2", "lam=1i"]),
                                           ("V-B:1b", [])])
def test_round_trip_is_byte_identical(tmp_path, capsys, entry, params):
    f = tmp_path / "x.json"
    argv = ["construct", "--entry", entry, "--out", str(f)]
    for p in params:
        argv += ["--param", p]
    assert main(argv) == 0
    text = f.read_text()
    assert dumps(linrep_to_dict(linrep_from_dict(json.loads(text)))) == text


def write(tmp_path, h, name):
    from holokit.serialize import write_linrep
    p = tmp_path / name
    write_linrep(h, p)
    return str(p)


def test_check_examples(tmp_path, capsys):
    from holokit.exactmat import Matrix
    from holokit.liecore import LinRep
    U = Matrix.unit
    so3 = write(tmp_path, LinRep(3, [U(3, 0, 1) - U(3, 1, 0), U(3, 0, 2) - U(3, 2, 0), U(3, 1, 2) - U(3, 2, 1)]), "so3.json")
    code, out = run(capsys, "check", "--in", so3, "--checks", "prolongation")
    assert code == 0 and report(out)["result"]["checks"]["prolongation"]["dim_h1"] == 0
    gl1 = write(tmp_path, LinRep(1, [Matrix.identity(1)]), "gl1.json")
    code, out = run(capsys, "check", "--in", gl1, "--checks", "berger")
    assert report(out)["result"]["checks"]["berger"]["first_criterion"] is False
    nil = write(tmp_path, LinRep(2, [U(2, 0, 1)]), "nil.json")
    code, out = run(capsys, "check", "--in", nil, "--checks", "summands")
    assert code == 0 and report(out)["result"]["checks"]["summands"]["status"] == "NotTotallyReducible"


def test_check_all_and_flags(tmp_path, capsys):
    f = tmp_path / "a.json"
    main(["construct", "--entry", "I-B:2a", "--param", "p=2", "--param", "q=1", "--out", str(f)])
    capsys.readouterr()
    code, out = run(capsys, "check", "--in", str(f), "--emit-bases", "--approx")
    d = report(out)
    assert code == 0 and d["approx"]["non_authoritative"] is True
    assert set(d["result"]["checks"]) == {"closure", "center", "commutant", "class", "summands", "prolongation",
                                          "propertyC", "berger", "complexify"}
    assert d["result"]["checks"]["propertyC"]["property_C"] is True
    assert "basis" in d["result"]["checks"]["prolongation"]


def test_parse_failure(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"space_dim": 2, "generators": [[["1/0", "0"], ["0", "0"]]]}')
    assert run(capsys, "check", "--in", str(bad))[0] == 3
    bad.write_text("{")
    assert run(capsys, "classify", "--in", str(bad))[0] == 3


def test_type2_flags(capsys):
    code, out = run(capsys, "type2", "--real-factors", "GL1R,GL1R", "--mu", "1,-1")
    r = report(out)["result"]
    assert code == 0 and r["summands"] == 2 and r["indecomposable"]
    code, out = run(capsys, "type2", "--complex-factors", "I-A:1:m=1,I-A:1:m=1", "--lambda", "1,0")
    assert code == 2 and report(out)["error"]["kind"] == "P1Violated"
    code, out = run(capsys, "type2", "--real-factors", "GL1R,GL1R", "--mu", "1,0")
    assert code == 2 and report(out)["error"]["kind"] == "P2Violated"


def test_classify_command(tmp_path, capsys):
    f = tmp_path / "g2.json"
    main(["construct", "--entry", "V-B:1b", "--out", str(f)])
    capsys.readouterr()
    code, out = run(capsys, "classify", "--in", str(f), "--seed", "3")
    d = report(out)
    assert code == 0 and d["seed"] == 3 and d["result"]["factors"][0]["label"] == "V-B:1b"


def test_verify_tables_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify-tables", "--max-dim", "4", "--seed", "7", "--report", str(a)]) == 0
    assert main(["verify-tables", "--max-dim", "4", "--seed", "7", "--report", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    report(a.read_text())


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "holokit.cli", "construct", "--entry", "I-A:7"],
                       capture_output=True, text=True)
    assert r.returncode == 2 and "MetadataOnly" in r.stdout
