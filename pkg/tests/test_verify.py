import json

import pytest

from matx import verify
from matx.errors import UnknownClaim


def test_claim_ids_frozen():
    assert verify.claim_ids() == [
        "CAT", "COR.i4c", "L21.sep", "L22.stage1", "L22.stage2", "L22.stage3", "OX", "SST.EQ",
        "T1A", "T1B", "T2A", "T2B", "T3", "T4", "TH11.d2"]


def test_unknown_claim():
    with pytest.raises(UnknownClaim):
        verify.verify_claim("nope")


def test_status_precedence():
    chk = verify._Check()
    chk.discrepancy("printed value differs")
    assert chk.result("X", "ref").status == "discrepancy"
    chk.require(False, "broken")
    r = chk.result("X", "ref")
    assert r.status == "fail"
    assert r.detail.splitlines()[0].startswith("FAIL broken")


def test_report_format():
    report = verify.run_all(ids=["T1B", "T1A"])
    assert [c.id for c in report.claims] == ["T1A", "T1B"]
    text = report.to_json()
    assert text.endswith("}\n")
    data = json.loads(text)
    assert set(data["claims"][0]) == {"id", "status", "detail", "paperRef"}
    assert data["summary"] == {"pass": 2, "fail": 0, "discrepancy": 0}


def test_alias_runs_target():
    r = verify.verify_claim("L22.M12.splitter")
    assert r.status == "pass" and "M12" in r.detail


def test_t4_reports_exactly_two_duplicates():
    r = verify.verify_claim("T4")
    flagged = [l for l in r.detail.splitlines() if l.startswith("DISCREPANCY")]
    assert r.status == "discrepancy"
    assert len(flagged) == 2
    assert "[100111]" in flagged[0] and "[101000]" in flagged[1]
