from __future__ import annotations

from fractions import Fraction

import pytest

from mpoly import identities
from mpoly.identities import REGISTRY, Identity, VerifyConfig, identity_ids, run_identity, run_many

SMALL = VerifyConfig(n_max=4, m_max=2, k_max=3)

NAMED = [
    "Q1", "Re1", "Re2", "AN1", "AN2", "Gq1", "TGQ1", "TGQ11", "Alg1", "GGF", "ws", "zR1", "zR2",
    "For5", "For6", "For7", "For13", "For14", "thm14",
    "thm200:For9", "thm200:For10", "thm200:For11", "thm200:For12",
    "DGF-C1", "DGF-C2", "DGF-B",
]


def test_named_ids_are_registered():
    assert set(NAMED) <= set(identity_ids())


@pytest.mark.parametrize("name", identity_ids())
def test_identity_passes_at_small_ranges(name):
    report = run_identity(name, SMALL)
    assert report.passed, report.failures[:3]
    assert report.checked > 0


def test_report_shape():
    d = run_identity("AN1", SMALL).as_dict()
    assert d["identity"] == "AN1" and d["passed"] and d["failures"] == []
    assert d["ranges"]["orders"] == [1, 2, 3]  # positive-only identity
    assert d["pass_count"] == d["checked"]
    assert len(d["sample"]) == 5


def test_failures_are_recorded(monkeypatch):
    def broken(cfg, report):
        report.compare({"n": 0}, Fraction(1), Fraction(2))

    monkeypatch.setitem(REGISTRY, "broken", Identity("broken", "", broken))
    report = run_identity("broken", SMALL)
    assert not report.passed
    assert report.failures == [{"n": 0, "lhs": "1", "rhs": "2"}]
    assert report.summary().startswith("FAIL broken")


def test_unknown_identity():
    with pytest.raises(KeyError):
        run_identity("nope")


def test_run_many_keeps_order():
    names = ["F4", "F3", "Whitney"]
    serial = run_many(names, SMALL)
    pooled = run_many(names, SMALL, jobs=2)
    assert [r.identity for r in serial] == names
    assert [r.as_dict() for r in pooled] == [r.as_dict() for r in serial]


def test_pole_cells_are_skipped_not_failed():
    cfg = VerifyConfig(n_max=5, m_max=1, orders=(1,), sample=((-3, "1", ("1",)),))
    report = identities.run_identity("Q1", cfg)
    assert report.passed and report.skipped > 0
