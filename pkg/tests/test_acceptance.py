"""Acceptance suite: one test per criterion, exact comparisons only.

Each test records a PASS/FAIL line; the lines are printed in the pytest
terminal summary (and directly when this file is run as a script).
"""

from __future__ import annotations

import csv
import io
import time
from contextlib import redirect_stdout
from fractions import Fraction

import pytest

from mpoly.cli import main
from mpoly.exactnum import classic, make_params, rational
from mpoly.identities import VerifyConfig, run_many
from mpoly.polybernoulli import mpb_explicit
from mpoly.polycauchy import FIRST, SECOND, m_cauchy, mpc_number_explicit, pc_integral_oracle
from mpoly.polyfamilies import bernoulli_inverse_closed, cauchy_inverse_closed, mpb_poly_weighted_inverse_check, mpc_poly_inverse_check
from mpoly.stirling import weighted_S, weighted_T

F = Fraction
RESULTS: dict[int, str] = {}

GOLDEN = [
    ["1", "1", "1", "1"],
    ["1/2", "2/3", "3/4", "4/5"],
    ["-1/6", "-1/6", "-3/20", "-2/15"],
    ["1/4", "7/30", "1/5", "6/35"],
    ["-19/30", "-17/30", "-33/70", "-83/210"],
]


@pytest.fixture
def record(request):
    """Yield a callable that stores the criterion's verdict line."""
    box = {}

    def put(number: int, title: str, detail: str):
        box["line"] = (number, title, detail)

    yield put
    number, title, detail = box["line"]
    failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
    RESULTS[number] = f"{'FAIL' if failed else 'PASS'} criterion {number:>2}: {title} ({detail})"


def _cli(*argv) -> tuple[int, str]:
    buf = io.StringIO()
    with redirect_stdout(buf):
        status = main(list(argv))
    return status, buf.getvalue()


def _reports_ok(reports):
    bad = [r for r in reports if not r.passed]
    assert not bad, [(r.identity, r.failures[:2]) for r in bad]
    return sum(r.checked for r in reports), sum(r.skipped for r in reports)


def test_01_golden_matrix(record):
    t0 = time.perf_counter()
    status, out = _cli("table", "--family", "cauchy1", "--k", "1", "--a", "1", "--q", "1", "--l", "1",
                       "--n-max", "4", "--m-max", "3", "--format", "csv")
    elapsed = time.perf_counter() - t0
    record(1, "golden C_{n,m} matrix, n<=4, m<=3", f"16 entries, {elapsed:.3f}s")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert status == 0 and len(rows) == 20
    for r in rows:
        assert r["value"] == GOLDEN[int(r["n"])][int(r["m"])]
    assert elapsed < 1.0


def test_02_closed_forms(record):
    record(2, "C_{1,m} and C_{2,m} closed forms", "0 <= m <= 20")
    for m in range(21):
        assert m_cauchy(1, m) == F(1 + m, 2 + m)
        assert m_cauchy(2, m) == -F(1 + m, (2 + m) * (3 + m))


def test_03_classical_bernoulli(record):
    t0 = time.perf_counter()
    status, out = _cli("bernoulli-classic", "--n-max", "12")
    elapsed = time.perf_counter() - t0
    record(3, "classical Bernoulli B_0..B_12 with B_1 = +1/2", f"{elapsed:.3f}s")
    values = [rational(v) for v in out.strip().split(", ")]
    assert status == 0 and len(values) == 13
    assert values == [mpb_explicit(n, classic()) for n in range(13)]
    assert values[1] == F(1, 2)
    assert all(values[n] == 0 for n in range(3, 13, 2))
    assert elapsed < 1.0


ROUTE_IDS = [
    "Q1", "hat:Q1", "Re1", "Re2", "hat:Re1", "hat:Re2", "GEN1KIND", "hat:GEN",
    "GenFi", "Gq1", "TGQ1", "TGQ11", "Alg1",
]


def test_04_route_agreement(record):
    cfg = VerifyConfig(n_max=10, m_max=5, orders=(1, 2, 3, -1, -2))
    t0 = time.perf_counter()
    reports = run_many(ROUTE_IDS, cfg)
    elapsed = time.perf_counter() - t0
    checked, skipped = sum(r.checked for r in reports), sum(r.skipped for r in reports)
    record(4, "explicit = r-Stirling = recurrence = EGF", f"{checked} values, {skipped} pole cells, {elapsed:.1f}s")
    _reports_ok(reports)
    assert elapsed < 60.0


def test_05_integral_oracle(record):
    count = 0
    record(5, "box integral = Stirling sum, both kinds", "a in {1,2,3}, n <= 8, k in {1,2}, m <= 3")
    points = [("1", ["1"]), ("1/2", ["2"]), ("2", ["1/2", "3"]), ("-1/3", ["3/2"])]
    for a in (1, 2, 3):
        for k in (1, 2):
            for q, L in points:
                if len(L) > k:
                    continue
                for m in range(4):
                    p = make_params(a, q, L, k, m)
                    for kind in (FIRST, SECOND):
                        for n in range(9):
                            assert pc_integral_oracle(kind, n, p) == mpc_number_explicit(kind, n, p)
                            count += 1
    record(5, "box integral = Stirling sum, both kinds", f"{count} values, a in {{1,2,3}}, n <= 8, k in {{1,2}}, m <= 3")


def test_06_duality(record):
    cfg = VerifyConfig(n_max=10)
    reports = run_many(["AN1", "AN2", "zR1", "zR2"], cfg)
    checked, skipped = sum(r.checked for r in reports), sum(r.skipped for r in reports)
    record(6, "AN1, AN2, zR1, zR2 duality", f"{checked} values, {skipped} pole cells, 1 <= n <= 10, x0 in {{0,1,-1,2/3}}")
    _reports_ok(reports)


def test_07_conversions(record):
    cfg = VerifyConfig(n_max=10, m_max=4, orders=(1, 2, 3))
    ids = ["B_from_C1", "B_from_C2", "C1_from_B", "C2_from_B",
           "thm200:For9", "thm200:For10", "thm200:For11", "thm200:For12"]
    reports = run_many(ids, cfg)
    checked = sum(r.checked for r in reports)
    record(7, "B<->C number conversions and For9-For12", f"{checked} values, n <= 10, m <= 4, k in {{1,2,3}}")
    _reports_ok(reports)


def test_08_double_generating_functions(record):
    cfg = VerifyConfig(n_max=5, m_max=1, k_max=5, sample=((1, "1", ("1",)), (3, "2", ("1/2", "3"))))
    reports = run_many(["DGF-C1", "DGF-C2", "DGF-B"], cfg)
    checked = sum(r.checked for r in reports)
    record(8, "double EGFs vs negative-order values", f"{checked} values, orders (5, 5), classic + non-classic")
    _reports_ok(reports)
    assert checked == 3 * 2 * 2 * 6 * 5


def test_09_weighted_stirling(record):
    points = [F(0), F(1), F(-1), F(2, 3), F(-5, 2)]
    count = 0
    for x in points:
        for n in range(11):
            for j in range(n + 1):
                delta = int(n == j)
                assert sum((weighted_T(n, i, x) * weighted_S(i, j, x) for i in range(j, n + 1)), F(0)) == delta
                assert sum((weighted_S(n, i, x) * weighted_T(i, j, x) for i in range(j, n + 1)), F(0)) == delta
                count += 2
    three = [F(0), F(2, 3), F(-7, 4)]
    for a, q, L in ((1, 1, ["1"]), (3, 2, ["1/2", "3"])):
        for k in (1, 2, -1):
            p = make_params(a, q, L, k, 1)
            for n in range(8):
                cauchy = {mpc_poly_inverse_check(n, p, x) for x in three}
                bern = {mpb_poly_weighted_inverse_check(n, p, x) for x in three}
                assert cauchy == {cauchy_inverse_closed(n, p)}
                assert bern == {bernoulli_inverse_closed(n, p)}
                count += 6
    record(9, "T/S orthogonality; thm14 and For6 x0-independent", f"{count} checks, 5 points n <= 10, 3 points each")


def test_10_recurrence_orientations(record):
    cfg = VerifyConfig(n_max=8, m_max=3, orders=(-1, -2, -3))
    neg = run_many(["TGQ11"], cfg)
    pos_cfg = VerifyConfig(n_max=8, m_max=3, orders=(1, 2, 3, -1, -2))
    orient = run_many(["For14"], pos_cfg)
    checked = sum(r.checked for r in neg + orient)
    record(10, "p-advancing TGQ11 and proof-consistent For14", f"{checked} values, n + p <= 8")
    _reports_ok(neg + orient)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
