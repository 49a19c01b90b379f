import json

import pytest

from planeposets.verify import (
    SUITES, CheckResult, Tally, VerifyReport, _REGISTRY, check_names, run_check, verify,
)


@pytest.fixture(scope="module")
def report4():
    return verify("all", 4)


def test_every_check_is_registered_in_a_suite():
    names = check_names()
    assert names == sorted(names)
    assert {n.split(".")[0] for n in names} == set(SUITES)
    assert len(names) == len(_REGISTRY)


def test_all_checks_hold_at_degree_four(report4):
    failing = [c for c in report4.checks if c.status == "fail"]
    assert not failing, [c.to_json_obj() for c in failing]
    assert report4.passed


def test_known_discrepancies_are_refuted(report4):
    known = {k for k, c in _REGISTRY.items() if c.known_false}
    assert known
    by_key = {f"{c.suite}.{c.name}": c for c in report4.checks}
    for key in known:
        c = by_key[key]
        assert c.status == "refuted", key
        assert c.counterexample and set(c.counterexample) == {"inputs", "lhs", "rhs"}
        assert c.notes


def test_corrected_companions_pass(report4):
    by_name = {c.name: c.status for c in report4.checks}
    for name in ("isometry_x_beta_y_q1_eq_q2", "isometry_alpha_x_gamma_y_q1_eq_q2",
                 "isometry_beta_x_gamma_y_q1_eq_q2_plain", "upsilon_r_isometry_rescaled",
                 "primitive_products", "theta_classical_second"):
        assert by_name[name] == "pass", name


def test_json_schema(report4):
    obj = json.loads(report4.to_json())
    assert set(obj) == {"suite", "max_degree", "passed", "totals", "elapsed", "checks"}
    assert obj["totals"]["checks"] == len(obj["checks"])
    assert obj["totals"]["pass"] + obj["totals"]["fail"] + obj["totals"]["refuted"] == len(obj["checks"])
    for c in obj["checks"]:
        assert {"name", "suite", "status", "cases", "elapsed"} <= set(c)
        assert c["status"] in ("pass", "fail", "refuted")


def test_text_report_without_timings_is_stable(report4):
    again = verify("poset", 3).to_text(timings=False)
    assert again == verify("poset", 3).to_text(timings=False)
    assert report4.to_text(timings=False).splitlines()[-1].startswith(f"{report4.totals()['pass']} passed")


def test_degree_zero_is_vacuous():
    r = verify("algebra", 0)
    assert r.passed
    assert r.totals()["fail"] == 0


def test_unknown_suite():
    with pytest.raises(ValueError):
        verify("nonsense")
    with pytest.raises(ValueError):
        verify("poset", -1)


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("PHL_MAX_DEGREE", "2")
    assert verify("poset", 4).max_degree == 2


def test_run_check_by_short_name():
    r = run_check("associativity", 3)
    assert r.suite == "algebra" and r.status == "pass" and r.cases > 0
    with pytest.raises(KeyError):
        run_check("no_such_check", 3)


def test_determinant_check_is_included():
    r = run_check("pairing.first_determinant_q2_zero", 3)
    assert r.status == "pass" and r.cases == 2


def test_tally_records_first_mismatch():
    t = Tally()
    t.same("a", 1, 1)
    with pytest.raises(Exception):
        t.same("b", 1, 2)
    assert t.cases == 2
    assert t.counterexample == {"inputs": "b", "lhs": 1, "rhs": 2}


def test_failing_report_does_not_pass():
    bad = CheckResult("x", "poset", "fail", 1, 0.0, {"inputs": 0, "lhs": 1, "rhs": 2})
    ok = CheckResult("y", "poset", "refuted", 1, 0.0, {"inputs": 0, "lhs": 1, "rhs": 2})
    assert not VerifyReport("poset", 1, [bad, ok]).passed
    assert VerifyReport("poset", 1, [ok]).passed
