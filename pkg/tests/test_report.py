import json

import numpy as np
import pytest

from hodgelocus.report import Report, jsonable, strip_timings


def make_report():
    r = Report("dims", "prime:2147483647", 0, "0.1.0")
    r.add_input("ideal", "x0\n")
    r.check("zeta", True, value=np.int64(3))
    r.check("alpha", False, codims=(1, 2))
    return r


def test_checks_sorted_and_status():
    r = make_report()
    data = json.loads(r.to_json())
    assert [c["name"] for c in data["checks"]] == ["alpha", "zeta"]
    assert data["status"] == "fail" and not r.passed
    assert data["checks"][1]["values"] == {"value": 3}


def test_duplicate_check_rejected():
    r = make_report()
    with pytest.raises(ValueError):
        r.check("zeta", True)


def test_timings_are_the_only_difference():
    a, b = make_report(), make_report()
    with a.timed("total"):
        pass
    assert a.to_json() != b.to_json()
    assert strip_timings(a.to_json()) == strip_timings(b.to_json())
    assert "timings" not in a.to_dict(timings=False)


def test_error_status():
    r = make_report()
    r.error = {"type": "UsageError", "message": "bad"}
    assert r.status == "error"


def test_jsonable():
    assert jsonable({1: (np.int64(2), None)}) == {"1": [2, None]}
