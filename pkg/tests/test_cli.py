import io
import json
import subprocess
import sys

import pytest

from chromsink.cli import run
from chromsink.symfunc import SymFunc


@pytest.fixture
def p575_file(tmp_path):
    path = tmp_path / "p575.json"
    path.write_text(json.dumps({
        "vertices": [{"id": "v1", "weight": 5}, {"id": "v2", "weight": 7}, {"id": "v3", "weight": 5}],
        "edges": [["v1", "v2"], ["v2", "v3"]],
    }))
    return str(path)


@pytest.fixture
def counterexample_file(tmp_path):
    path = tmp_path / "g131.json"
    path.write_text(json.dumps({
        "vertices": [{"id": "v1", "weight": 1}, {"id": "v2", "weight": 3}, {"id": "v3", "weight": 1}],
        "edges": [["v1", "v2"]],
    }))
    return str(path)


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_compute_e_json(p575_file):
    code, out, _ = invoke("compute", "--graph", p575_file, "--basis", "e", "--json")
    assert code == 0
    f = SymFunc.from_json(json.loads(out))
    expected = {"6,4,3,1,1,1,1": 20, "6,5,2,1,1,1,1": 20, "7,3,3,1,1,1,1": 70,
                "7,4,2,1,1,1,1": 140, "8,3,2,1,1,1,1": -210, "9,2,2,1,1,1,1": -105}
    for lam, c in expected.items():
        assert f[tuple(int(x) for x in lam.split(","))] == c
    terms = json.loads(out)["terms"]
    assert {t["partition"]: t["coeff"] for t in terms}["8,3,2,1,1,1,1"] == "-210"


def test_compute_p_and_m(p575_file):
    code, out, _ = invoke("compute", "--graph", p575_file, "--basis", "p", "--json")
    assert code == 0
    assert {t["partition"]: t["coeff"] for t in json.loads(out)["terms"]} == {"17": "1", "12,5": "-2", "7,5,5": "1"}
    code, out, _ = invoke("compute", "--graph", p575_file, "--basis", "m")
    assert code == 0 and "m[" in out


def test_sigma(p575_file):
    code, out, _ = invoke("sigma", "--graph", p575_file, "--mu", "7", "--j", "3")
    assert code == 0
    assert out.splitlines() == ["-65", "s-allowable: true"]
    code, out, _ = invoke("sigma", "--graph", p575_file, "--mu", "6", "--j", "3")
    assert code == 0 and "s-allowable: false" in out
    code, out, _ = invoke("sigma", "--graph", p575_file, "--mu", "10,5", "--j", "2", "--json")
    doc = json.loads(out)
    assert code == 0 and "maximal" in doc and doc["mu"] == "10,5"
    code, _, err = invoke("sigma", "--graph", p575_file, "--mu", "7", "--j", "0")
    assert code == 2 and "--j" in err


def test_verify_worked_example(p575_file):
    code, out, _ = invoke("verify", "conjecture", "--graph", p575_file, "--mu", "7", "--j", "3")
    assert code == 0
    assert "lhs=-65 rhs=-65" in out
    code, out, _ = invoke("verify", "conjecture", "--graph", p575_file, "--mu", "7", "--j", "3", "--json")
    doc = json.loads(out.splitlines()[0])
    assert doc["status"] == "pass" and doc["lhs"] == doc["rhs"] == "-65"


def test_verify_sweep_and_statements(p575_file):
    code, out, _ = invoke("verify", "main", "--graph", p575_file)
    assert code == 0 and out.rstrip().splitlines()[-1].startswith("pass ")
    code, out, _ = invoke("verify", "one-level", "--graph", p575_file, "--j", "4")
    assert code == 0 and "[pass]" in out
    code, _, err = invoke("verify", "conjecture", "--graph", p575_file, "--mu", "7")
    assert code == 2


def test_verify_failure_exit_code(counterexample_file):
    code, out, _ = invoke("verify", "conjecture", "--graph", counterexample_file, "--mu", "3", "--j", "1")
    assert code == 1
    assert "[fail]" in out and "orientation" in out
    code, out, _ = invoke("verify", "conjecture", "--graph", counterexample_file, "--json")
    assert code == 1
    assert any(json.loads(line)["status"] == "fail" for line in out.splitlines())


def test_orientations(p575_file):
    code, out, _ = invoke("orientations", "--graph", p575_file, "--json")
    doc = json.loads(out)
    assert code == 0 and doc["count"] == 4 and doc["sink_counts"] == {"1": 3, "2": 1}
    code, out, _ = invoke("orientations", "--graph", p575_file)
    assert out.startswith("4 acyclic orientations")


def test_necklace():
    code, out, _ = invoke("necklace", "--a", "5", "--mu", "3", "--j", "2")
    assert code == 0 and out == "5\n"
    code, out, _ = invoke("necklace", "--a", "5", "--mu", "3", "--j", "2", "--enumerate", "--json")
    assert json.loads(out)["subsets"][0] == [1, 2, 4]


def test_clawfree(p575_file, tmp_path):
    code, out, _ = invoke("clawfree", "--graph", p575_file)
    assert code == 0 and "claw-free: true" in out and "6, 8, 9" in out
    claw = tmp_path / "claw.json"
    claw.write_text(json.dumps({"vertices": [{"id": x, "weight": 1} for x in "cabd"],
                                "edges": [["c", "a"], ["c", "b"], ["c", "d"]]}))
    code, out, _ = invoke("clawfree", "--graph", str(claw), "--json")
    assert code == 0 and json.loads(out) == {"claw_free": False, "unweighted": True, "not_s_allowable": [2]}


def test_fuzz_is_byte_identical():
    a = invoke("fuzz", "conjecture", "--seed", "7", "--trials", "15", "--json")
    b = invoke("fuzz", "conjecture", "--seed", "7", "--trials", "15", "--json")
    assert a == b
    assert all(json.loads(line)["millis"] is None for line in a[1].splitlines())
    code, out, _ = invoke("fuzz", "main", "--seed", "1", "--trials", "10", "--edge-prob", "2/3")
    assert code == 0 and "fail 0" in out


@pytest.mark.parametrize("argv", [
    ["fuzz", "main", "--edge-prob", "3/2"],
    ["fuzz", "main", "--edge-prob", "half"],
    ["necklace", "--a", "0", "--mu", "1", "--j", "1"],
    ["sigma", "--graph", "x.json", "--mu", "7,a", "--j", "1"],
    ["verify", "lemma", "--graph", "x.json"],
    ["compute", "--graph", "x.json", "--unknown"],
    [],
])
def test_usage_errors(argv):
    code, _, err = invoke(*argv)
    assert code == 2 and err.startswith("error:")


def test_graph_errors_name_the_field(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"vertices": [{"id": "a", "weight": 1}], "edges": [["a", "q"]]}))
    code, _, err = invoke("compute", "--graph", str(bad))
    assert code == 2 and "edges[0]" in err
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    code, _, err = invoke("compute", "--graph", str(broken))
    assert code == 2 and "not valid JSON" in err
    code, _, err = invoke("compute", "--graph", str(tmp_path / "missing.json"))
    assert code == 2 and "cannot read" in err


def test_module_entry_point(p575_file):
    proc = subprocess.run([sys.executable, "-m", "chromsink", "sigma", "--graph", p575_file,
                           "--mu", "7", "--j", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.splitlines()[0] == "-65"
