from collections import Counter

import pytest

from modulik3.report import CheckItem, VerificationReport, item
from modulik3.verify import NUMERIC_GROUPS, group_ids, run


def test_full_run_has_no_mismatch(full_report):
    s = full_report.summary
    assert s["mismatch"] == 0
    assert s["match"] >= 140


def test_report_sorted(full_report):
    keys = [(i.check_id, i.location) for i in full_report.items]
    assert keys == sorted(keys)


def test_json_roundtrip(full_report):
    assert VerificationReport.from_json(full_report.to_json()) == full_report


@pytest.mark.parametrize("gid", ["S2Q_S_S_-2", "mukai", "divisors", "LR_products"])
def test_group_is_submultiset(full_report, gid):
    sub = Counter(run([gid]).items)
    full = Counter(full_report.items)
    assert all(full[k] >= v for k, v in sub.items())


def test_group_ids_cover_numeric_groups():
    assert set(NUMERIC_GROUPS) <= set(group_ids())


def test_parallel_run_same_as_serial():
    ids = ["mukai", "pencils", "S2Q_S_S_-2"]
    assert run(ids, workers=3) == run(ids)


def test_item_status():
    assert item("a", "b", 1, 1).status == "match"
    assert item("a", "b", 1, 2).status == "mismatch"
    assert item("a", "b", 1, 2, flagged=True).status == "flagged"
    with pytest.raises(ValueError):
        CheckItem("a", "b", "1", "1", "bogus")
