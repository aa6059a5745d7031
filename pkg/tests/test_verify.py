import json

import pytest

from paramcodes import verify as vf


@pytest.mark.parametrize("suite", sorted(vf.SUITES))
def test_suite_passes(suite):
    reports = vf.run_suite(suite)
    assert reports
    assert [r.id for r in reports if r.status != vf.PASS] == []
    assert vf.exit_code(reports, strict=True) == 0


def test_zero_budget_skips_everything():
    reports = vf.run_suite("all", budget=0)
    assert {r.status for r in reports} == {vf.SKIPPED}
    assert vf.exit_code(reports) == 0 and vf.exit_code(reports, strict=True) == 1


def test_report_round_trip():
    reports = vf.run_suite("prop-complete")
    doc = json.loads(vf.to_json(reports, "prop-complete", vf.DEFAULT_BUDGET, 0))
    again = [vf.VerificationReport.from_dict(d) for d in doc["reports"]]
    assert [r.to_dict()["comparisons"] for r in again] == [r.to_dict()["comparisons"] for r in reports]
    assert all(same for _, same in vf.replay(doc))


def test_failure_is_reported():
    def body(ctx):
        ctx.compare("x", 1, "formula", 2, "brute")
    r = vf.Scenario("bad", "x", "cycle:4", "3", 1, body).run()
    assert r.status == vf.FAIL and vf.exit_code([r]) == 1
    ungated = vf.Scenario("bad", "x", "cycle:4", "3", 1, body, gated=False).run()
    assert vf.exit_code([ungated]) == 0


def test_unknown_suite():
    with pytest.raises(ValueError):
        vf.scenarios("nope")
