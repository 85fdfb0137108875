import json

import pytest

from dtj import verify
from dtj.verify import CheckResult, Grid, VerifySuiteReport


def test_grid_parse():
    assert Grid.parse("2, 3,4") == Grid(2, 3, 4)
    assert str(Grid(1, 1, 3)) == "1,1,3"
    for bad in ["1,2", "a,b,c", "1,0,3", "-1,1,1"]:
        with pytest.raises(ValueError):
            Grid.parse(bad)


def test_grid_env(monkeypatch):
    monkeypatch.setenv(verify.GRID_ENV, "1,1,2")
    assert verify.resolve_grid("kz", None) == Grid(1, 1, 2)
    assert verify.resolve_grid("kz", "2,2,2") == Grid(2, 2, 2)
    monkeypatch.delenv(verify.GRID_ENV)
    assert verify.resolve_grid("kz", None) == verify.DEFAULT_GRIDS["kz"]


def test_report_status_and_serialization():
    report = VerifySuiteReport("x", {"x": "1,1,1"}, [
        CheckResult("a", {"n": 1}, True, 1.0),
        CheckResult("b", {"n": 2}, False, 2.0, "boom"),
    ])
    assert report.status == "fail" and len(report.failures()) == 1
    obj = json.loads(report.dumps(timing=False))
    assert obj["failed"] == 1 and "elapsed_ms" not in obj["checks"][0]
    assert obj["checks"][1]["error"] == "boom"
    report.results.pop()
    assert report.passed


def test_crashing_check_is_a_failure():
    result = verify._run(verify.Check("crash", {}, lambda: 1 // 0))
    assert not result.passed and "ZeroDivisionError" in result.error


def test_unknown_suite():
    with pytest.raises(ValueError):
        verify.collect("everything")


@pytest.mark.parametrize("suite", verify.SUITES)
def test_each_suite_passes_small(suite):
    report = verify.run_suite(suite, "1,2,3")
    assert report.passed, [r.to_json() for r in report.failures()]


def test_lemmas_default_grid():
    assert verify.run_suite("lemmas").passed


def test_printed_closed_form_fails_the_random_comparison():
    assert not verify.a_closed_form_holds(1, 50, closed=verify.takata.takata_a_closed_m2)
    assert verify.a_closed_form_holds(2, 50)
