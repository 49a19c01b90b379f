import csv
import importlib
import io
import json
import subprocess
import sys

import pytest

from planeposets.algebra import product_q
from planeposets.cli import main, run
from planeposets.combo import PosetCombo
from planeposets.poset import parse_poset

# the package re-exports the function ``verify``, which shadows the submodule attribute
verify_mod = importlib.import_module("planeposets.verify")


def test_product_example():
    status, out = run(["product", "p:1", "p:12"])
    assert status == 0
    assert out.strip() == ("(q1^2 + q1*q2 + q2^2) p:123 + (q2*q3 + q2*q4) p:132 + (q1*q3 + q1*q4) p:213"
                           " + (q4^2) p:231 + (q3^2) p:312")


def test_gram_second_degree_one():
    status, out = run(["gram", "--pairing", "second", "--degree", "1", "--format", "json"])
    assert status == 0
    assert json.loads(out)["entries"] == [["1"]]


def test_enum_count():
    assert run(["enum", "3", "--count"]) == (0, "6\n")
    assert run(["--format", "json", "enum", "3", "--count"]) == (0, '{"count": "6"}\n')


def test_json_product_round_trips():
    status, out = run(["--format", "json", "product", "p:21", "p:1"])
    assert status == 0
    assert PosetCombo.from_json(out) == product_q(parse_poset("p:21"), parse_poset("p:1"))


def test_csv_coproduct():
    status, out = run(["coproduct", "p:21", "--format", "csv"])
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["factor1", "factor2", "coeff"]
    assert ["1", "1", "q3 + q4"] in rows


def test_pair_and_theta():
    assert run(["pair", "p:12", "p:12"]) == (0, "2*q1*q2\n")
    assert run(["pair", "--which", "second", "p:21", "p:21"]) == (0, "q1 + q4\n")
    assert run(["theta", "p:21"]) == (0, "(1) s:12 + (1) s:21\n")


def test_gram_specialized():
    status, out = run(["gram", "--degree", "2", "--set", "q2=0", "--format", "csv"])
    assert status == 0
    assert out.splitlines() == [",12,21", "12,0,q1", "21,q1,q3 + q4"]


def test_verify_pass_and_formats():
    status, out = run(["verify", "--suite", "poset", "--max-degree", "3"])
    assert status == 0
    assert out.splitlines()[-1].startswith("10 passed, 0 failed")
    status, out = run(["verify", "pairing", "--max-degree", "3", "--format", "json"])
    assert status == 0
    names = {c["name"]: c["status"] for c in json.loads(out)["checks"]}
    assert names["first_determinant_q2_zero"] == "pass"
    status, out = run(["verify", "fqsym", "--max-degree", "2", "--format", "csv"])
    assert status == 0 and out.startswith("check,status,cases,inputs,lhs,rhs")


def test_verify_failure_exit_code(monkeypatch):
    def broken(t, d):
        t.same("inputs", 1, 2)

    monkeypatch.setitem(verify_mod._REGISTRY, "poset.broken", verify_mod._Check("poset", "broken", broken, False, ""))
    status, out = run(["verify", "poset", "--max-degree", "1"])
    assert status == 1
    assert "FAIL     poset.broken" in out
    assert "lhs: 1" in out and "rhs: 2" in out


@pytest.mark.parametrize("argv", [
    [],
    ["enum"],
    ["enum", "-1"],
    ["product", "p:1"],
    ["product", "p:x", "p:1"],
    ["pair", "p:1", "p:12"],
    ["gram", "--degree", "2", "--set", "q9=1"],
    ["gram", "--degree", "2", "--set", "q1=abc"],
    ["gram", "--degree", "9"],
    ["verify"],
    ["verify", "nonsense"],
    ["verify", "poset", "--suite", "algebra"],
    ["--format", "xml", "enum", "1"],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == 2
    assert "error" in capsys.readouterr().err


def test_output_is_deterministic():
    argv = ["verify", "all", "--max-degree", "3"]
    assert run(argv) == run(argv)
    assert run(["coproduct", "p:2413"]) == run(["coproduct", "p:2413"])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "planeposets", "enum", "2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "p:12\np:21\n"
