import csv
import io
import json
import subprocess
import sys

import pytest

from satake_plethysm.cli import run
from satake_plethysm.plethysm import multiplicity_vector


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_count_and_multiplicity_examples():
    assert call("count", "--j", "5", "--k", "4", "--n", "0") == (0, "1\n", "")
    assert call("count", "--j", "4", "--k", "3", "--n", "6")[1] == "5\n"
    assert call("count", "--j", "2", "--k", "3", "--n", "-1")[1] == "0\n"
    assert call("multiplicity", "--j", "4", "--k", "3", "--n", "6", "--method", "closed") == (0, "1\n", "")


def test_gauss():
    assert json.loads(call("gauss", "--j", "2", "--k", "2")[1]) == [1, 1, 2, 1, 1]
    assert json.loads(call("gauss", "--j", "2", "--k", "2", "--signed")[1]) == [1, 0, 1, -1, 0, -1]


@pytest.mark.parametrize("k,methods", [
    (3, ["generic", "closed", "residue", "oracle"]),
    (4, ["generic", "closed", "recursive", "oracle"]),
])
def test_methods_agree(k, methods):
    for j in range(9):
        for n in range(j + 1):
            values = {call("multiplicity", "--j", str(j), "--k", str(k), "--n", str(n), "--method", m)[1]
                      for m in methods}
            assert len(values) == 1, (j, n)


def test_method_unsupported():
    code, out, err = call("multiplicity", "--j", "4", "--k", "3", "--n", "2", "--method", "recursive")
    assert code == 1 and out == ""
    rec = json.loads(err)
    assert rec["schema"] == "v1" and rec["error"] == "method unsupported"


def test_domain_error_is_structured():
    code, _, err = call("multiplicity", "--j", "4", "--k", "3", "--n", "99")
    assert code == 1
    assert json.loads(err)["error"]


@pytest.mark.parametrize("argv", [
    ["count", "--j", "x", "--k", "1", "--n", "1"],
    ["count", "--j", "-1", "--k", "1", "--n", "1"],
    ["table", "--k", "5", "--max-j", "3"],
    ["trace-check", "--sym", "3", "--alpha", "1 /2", "--beta", "1", "--max-j", "2"],
    ["trace-check", "--sym", "3", "--alpha", "1/0", "--beta", "1", "--max-j", "2"],
    ["trace-check", "--sym", "3", "--alpha", "0", "--beta", "1", "--max-j", "2"],
    ["nonsense"],
    [],
])
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert "usage" in err


def test_caps():
    code, _, err = call("verify", "--suite", "thm1", "--max-ell", "1001")
    assert code == 1 and json.loads(err)["error"] == "cap exceeded"
    code, _, err = call("verify", "--suite", "thm3", "--max-j", "201")
    assert code == 1 and json.loads(err)["error"] == "cap exceeded"


def test_verify_thm1():
    code, out, _ = call("verify", "--suite", "thm1", "--max-ell", "200")
    rec = json.loads(out)
    assert code == 0
    assert rec["schema"] == "v1" and rec["suite"] == "thm1"
    assert rec["cases"] == 400 and rec["failures"] == [] and rec["passed"] is True


@pytest.mark.parametrize("suite", ["thm2", "lem1", "lem2", "thm3", "cor3", "thm4", "cor4", "hecke", "basicfn", "bijection"])
def test_verify_suites_pass(suite):
    code, out, _ = call("verify", "--suite", suite, "--max-ell", "20", "--max-j", "8")
    rec = json.loads(out)
    assert code == 0, rec["failures"][:3]
    assert rec["cases"] > 0


def test_verify_all_small():
    code, out, _ = call("verify", "--suite", "all", "--max-ell", "10", "--max-j", "6")
    assert code == 0 and json.loads(out)["passed"]


def test_table_json_and_csv(tmp_path):
    code, out, _ = call("table", "--k", "3", "--max-j", "5", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["k"] == 3 and rec["maxJ"] == 5
    assert rec["rows"][4] == {"j": 4, "N": list(multiplicity_vector(4, 3).values)}
    path = tmp_path / "t.csv"
    assert call("table", "--k", "4", "--max-j", "3", "--format", "csv", "--out", str(path)) == (0, "", "")
    rows = list(csv.reader(path.open()))
    assert rows[0] == ["j", "n", "N"]
    assert len(rows) - 1 == sum(len(multiplicity_vector(j, 4)) for j in range(4))


def test_basic_fn_outputs():
    code, out, _ = call("basic-fn", "--sym", "3", "--max-j", "2", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["schema"] == "v1" and rec["convention"] == "degree-consistent"
    assert len(rec["terms"]) == 3
    code, out, _ = call("basic-fn", "--sym", "3", "--max-j", "1", "--format", "text")
    assert out.splitlines() == ["j=0: 1_0*1_{0,0}", "j=1: q^{-3/2}·1_3*1_{0,0}"]
    code, out, _ = call("basic-fn", "--sym", "4", "--max-j", "2", "--basis", "cartan", "--format", "json")
    assert all(t["basis"] == "cartan" for t in json.loads(out)["terms"])
    code, out, _ = call("basic-fn", "--sym", "3", "--max-j", "2", "--convention", "printed", "--format", "json")
    assert json.loads(out)["convention"] == "as-printed"


def test_trace_check():
    code, out, _ = call("trace-check", "--sym", "3", "--alpha", "2", "--beta", "3", "--max-j", "3")
    rec = json.loads(out)
    assert code == 0 and rec["verdict"] == "pass"
    assert rec["rows"][1] == {"j": 1, "trace": "65", "euler": "65", "match": True}
    code, out, _ = call("trace-check", "--sym", "4", "--alpha", "-1/2", "--beta", "+5/3", "--max-j", "6")
    assert code == 0 and json.loads(out)["alpha"] == "-1/2"


def test_deterministic_output():
    argv = ["table", "--k", "4", "--max-j", "12", "--format", "json"]
    assert call(*argv)[1] == call(*argv)[1]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "satake_plethysm", "count", "--j", "3", "--k", "3", "--n", "3"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "3\n"
