import math

import pytest

from ifdist import verify


def test_check_pass_rules():
    assert verify.Check("a", "", 1.0, 1.0 + 1e-12, 1e-10).passed
    assert not verify.Check("a", "", 1.0, 1.1, 1e-10).passed
    assert verify.Check("a", "", 100.0, 100.5, 1e-2, relative=True).passed
    assert not verify.Check("a", "", 100.0, 102.0, 1e-2, relative=True).passed
    assert verify.Check("a", "", math.inf, math.inf, 0.0).passed
    assert not verify.Check("a", "", 1.0, math.nan, 1.0).passed
    assert not verify.Check("a", "", 1.0, math.inf, 1.0).passed


def test_record_schema():
    rec = verify.Check("x.y", "desc", 1.0, 2.0, 0.5, relative=True).record()
    assert set(rec) == {"id", "description", "expected", "actual", "tolerance", "pass"}
    assert rec["tolerance"] == {"value": 0.5, "kind": "relative"}
    assert rec["pass"] is False


def test_report_summary():
    checks = [verify.Check("a", "", 1.0, 1.0, 0.0), verify.Check("b", "", 1.0, 3.0, 1.0)]
    report = verify.VerificationReport(checks)
    assert report.summary == {"total": 2, "passed": 1, "failed": 1}
    assert not report.ok
    assert report.to_dict()["summary"] == report.summary


def test_unknown_suite():
    with pytest.raises(ValueError):
        verify.run("nosuch")


@pytest.mark.parametrize("suite", ["specfun", "moments", "registry"])
def test_fast_suites_pass_and_sorted(suite):
    report = verify.run(suite)
    assert report.ok, [c.id for c in report.checks if not c.passed]
    ids = [c.id for c in report.checks]
    assert ids == sorted(ids)
    assert len(set(ids)) == len(ids)
    assert all(i.startswith(suite + ".") for i in ids)


def test_moments_suite_size():
    ids = [c.id for c in verify.run("moments").checks]
    assert sum(i.startswith("moments.oracle.") for i in ids) >= 40
    assert sum(i.startswith("moments.existence.") for i in ids) == 12
