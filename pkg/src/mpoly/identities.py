"""Identity registry: every check compares two independent computation routes.

Ids are stable strings; ``run_identity`` returns a :class:`Report`.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from functools import partial
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterator

from . import polybernoulli as pb
from . import polyfamilies as pf
from .egfseries import egf_coefficients
from .exactnum import Params, PoleError, fmt, make_params
from .polycauchy import (
    FIRST,
    SECOND,
    build_cauchy_table,
    dual_side,
    dual_target,
    gregory_table,
    m_cauchy,
    mpc_number_explicit,
    mpc_number_via_rstirling,
    pc_integral_oracle,
)
from .report import Report
from .stirling import r_stirling2, r_whitney2, stirling1, stirling2, weighted_S, weighted_T

# (a, q, L)
DEFAULT_SAMPLE: tuple[tuple[int, str, tuple[str, ...]], ...] = (
    (1, "1", ("1",)),
    (2, "1", ("1",)),
    (1, "1/2", ("2",)),
    (3, "2", ("1/2", "3")),
    (-3, "1", ("1",)),
)
DEFAULT_ORDERS = (1, 2, 3, -1, -2)
DEFAULT_POINTS = (Fraction(0), Fraction(1), Fraction(-1), Fraction(2, 3))


@dataclass
class VerifyConfig:
    n_max: int = 6
    m_max: int = 3
    orders: tuple[int, ...] = DEFAULT_ORDERS
    sample: tuple[tuple[int, str, tuple[str, ...]], ...] = DEFAULT_SAMPLE
    points: tuple[Fraction, ...] = DEFAULT_POINTS
    k_max: int = 5  # y-order of the double generating functions
    all_orders: bool = False  # also run positive-only identities at negative order

    def ranges(self) -> dict:
        return {
            "n_max": self.n_max,
            "m_max": self.m_max,
            "orders": list(self.orders),
            "x0": [fmt(x) for x in self.points],
        }

    def described_sample(self) -> list[dict]:
        return [{"a": a, "q": q, "L": list(L)} for a, q, L in self.sample]


@dataclass
class Identity:
    name: str
    doc: str
    check: Callable[[VerifyConfig, Report], None]
    positive_only: bool = False


REGISTRY: dict[str, Identity] = {}


def identity(name: str, doc: str, *, positive_only: bool = False):
    def deco(fn):
        REGISTRY[name] = Identity(name, doc, fn, positive_only)
        return fn

    return deco


def _params(cfg: VerifyConfig, *, positive_only: bool = False, shifts: bool = True) -> Iterator[Params]:
    for a, q, L in cfg.sample:
        for k in cfg.orders:
            if positive_only and k < 0 and not cfg.all_orders:
                continue
            for m in range(cfg.m_max + 1 if shifts else 1):
                yield make_params(a, q, L, k, m)


def _tag(p: Params, **extra) -> dict:
    return {"a": p.a, "q": fmt(p.q), "l": fmt(p.l), "k": p.k, "m": p.m, **extra}


def _cmp(report: Report, index: dict, lhs: Callable[[], Fraction], rhs: Callable[[], Fraction]) -> None:
    try:
        left, right = lhs(), rhs()
    except PoleError:
        report.skipped += 1
        return
    report.compare(index, left, right)


# --- Stirling machinery ---------------------------------------------------


@identity("F3", "r-Stirling numbers obey Broder's recurrence in r")
def _f3(cfg, report):
    for r in range(1, 6):
        for n in range(cfg.n_max + 1):
            for i in range(n + 1):
                report.compare(
                    {"n": n, "i": i, "r": r},
                    r_stirling2(n, i, r),
                    r_stirling2(n + 1, i + 1, r - 1) - (r - 1) * r_stirling2(n, i + 1, r - 1),
                )


@identity("F4", "r-Stirling numbers with i = 0 are powers of r")
def _f4(cfg, report):
    for r in range(0, 6):
        for n in range(cfg.n_max + 1):
            report.compare({"n": n, "r": r}, r_stirling2(n, 0, r), Fraction(r) ** n)


@identity("orth", "weighted Stirling numbers T and S are mutually inverse")
def _orth(cfg, report):
    points = set(cfg.points) | {Fraction(1, 2), Fraction(3, 7)}
    for x in sorted(points):
        for n in range(cfg.n_max + 1):
            for j in range(n + 1):
                d = Fraction(int(n == j))
                ts = sum((weighted_T(n, i, x) * weighted_S(i, j, x) for i in range(j, n + 1)), Fraction(0))
                st = sum((weighted_S(n, i, x) * weighted_T(i, j, x) for i in range(j, n + 1)), Fraction(0))
                report.compare({"x": fmt(x), "n": n, "j": j, "order": "TS"}, ts, d)
                report.compare({"x": fmt(x), "n": n, "j": j, "order": "ST"}, st, d)


@identity("BC-sums", "Stirling sums behind the B<->C conversions")
def _bc_sums(cfg, report):
    for n in range(1, cfg.n_max + 1):
        for p in range(1, n + 1):
            for i in range(1, n + 1):
                lhs = sum((stirling2(i - 1, j - 1) * stirling1(j, p) for j in range(1, i + 1)), Fraction(0))
                report.compare({"i": i, "p": p}, lhs, Fraction((-1) ** (i - p) * comb(i - 1, p - 1)))
            lhs = sum(
                ((-1) ** (i - p) * factorial(i) * stirling2(n, i) * comb(i - 1, p - 1) for i in range(1, n + 1)),
                Fraction(0),
            )
            report.compare({"n": n, "p": p}, lhs, (-1) ** (n - p) * factorial(p) * stirling2(n, p))


# --- Cauchy numbers -------------------------------------------------------


def _route(kind, rhs_fn, positive=None):
    def check(cfg, report):
        for p in _params(cfg):
            if positive is not None and (p.k > 0) != positive:
                continue
            for n in range(cfg.n_max + 1):
                _cmp(report, _tag(p, n=n), lambda: mpc_number_explicit(kind, n, p), lambda: rhs_fn(kind, n, p))

    return check


def _via_table(kind, n, p):
    return build_cauchy_table(kind, p, n, p.m)[n, p.m]


def _via_egf(kind, n, p):
    family = "cauchy1" if kind is FIRST else "cauchy2"
    return egf_coefficients(family, p, n)[n]


def _register_route(name, doc, fn):
    REGISTRY[name] = Identity(name, doc, fn)


_register_route("Q1", "first kind: explicit sum = r-Stirling resummation", _route(FIRST, mpc_number_via_rstirling))
_register_route("hat:Q1", "second kind: explicit sum = r-Stirling resummation", _route(SECOND, mpc_number_via_rstirling))
_register_route("Re1", "first kind, positive order: explicit = diagonal recurrence", _route(FIRST, _via_table, True))
_register_route("Re2", "first kind, negative order: explicit = diagonal recurrence", _route(FIRST, _via_table, False))
_register_route("hat:Re1", "second kind, positive order: explicit = recurrence", _route(SECOND, _via_table, True))
_register_route("hat:Re2", "second kind, negative order: explicit = recurrence", _route(SECOND, _via_table, False))
_register_route("GEN1KIND", "first kind: explicit = EGF coefficient", _route(FIRST, _via_egf))
_register_route("hat:GEN", "second kind: explicit = EGF coefficient", _route(SECOND, _via_egf))


def _integral(kind):
    def check(cfg, report):
        for p in _params(cfg):
            if p.a < 1 or p.k < 1 or len(p.L) > p.k:
                continue
            for n in range(min(cfg.n_max, 8) + 1):
                _cmp(
                    report,
                    _tag(p, n=n),
                    lambda: mpc_number_explicit(kind, n, p),
                    lambda: pc_integral_oracle(kind, n, p),
                )

    return check


_register_route("A", "first kind: explicit = direct box integral", _integral(FIRST))
_register_route("B", "second kind: explicit = direct box integral", _integral(SECOND))


@identity("Re3", "m-Cauchy numbers: (2+m)C_{n+1,m} = (1+m)C_{n,m+1} - n(2+m)C_{n,m}")
def _re3(cfg, report):
    for m in range(cfg.m_max + 1):
        for n in range(cfg.n_max):
            report.compare(
                {"n": n, "m": m},
                (2 + m) * m_cauchy(n + 1, m),
                (1 + m) * m_cauchy(n, m + 1) - n * (2 + m) * m_cauchy(n, m),
            )


@identity("Gregory", "n! G_{n,m} = C_{n,m}")
def _gregory(cfg, report):
    g = gregory_table(cfg.n_max, cfg.m_max)
    for n in range(cfg.n_max + 1):
        for m in range(cfg.m_max + 1):
            report.compare({"n": n, "m": m}, factorial(n) * g[n, m], m_cauchy(n, m))


def _duality(kind):
    def check(cfg, report):
        for p in _params(cfg, positive_only=True):
            for n in range(1, cfg.n_max + 1):
                _cmp(report, _tag(p, n=n), lambda: dual_side(kind, n, p), lambda: dual_target(kind, n, p))

    return check


REGISTRY["AN1"] = Identity("AN1", "(-1)^n C_n/n! = sum q^(n-i) C(n-1,i-1) Chat_i/i!", _duality(FIRST), True)
REGISTRY["AN2"] = Identity("AN2", "(-1)^n Chat_n/n! = sum q^(n-i) C(n-1,i-1) C_i/i!", _duality(SECOND), True)


# --- Bernoulli numbers ----------------------------------------------------


@identity("GenFi", "Bernoulli: explicit second-kind Stirling sum = EGF coefficient")
def _genfi(cfg, report):
    for p in _params(cfg):
        for n in range(cfg.n_max + 1):
            _cmp(report, _tag(p, n=n), lambda: pb.mpb_explicit(n, p), lambda: egf_coefficients("bernoulli", p, n)[n])


@identity("InvStirling", "sum s(n,i)(-q)^(n-i) B_i = (a+m)^k n! l^(n+a) / (a(n+a+m))^k")
def _inv_stirling(cfg, report):
    for p in _params(cfg):
        for n in range(cfg.n_max + 1):
            _cmp(report, _tag(p, n=n), lambda: pb.inverse_stirling_check(n, p), lambda: pb.inverse_stirling_closed(n, p))


@identity("Gq1", "H_{0,p} = l^a/a^k and H_{n,0} = B_{n,m} from the defining sum")
def _gq1(cfg, report):
    for p in _params(cfg):
        for c in range(cfg.n_max + 1):
            _cmp(report, _tag(p, n=0, col=c), lambda: pb.h_explicit(0, p, c), lambda: p.seed)
        for n in range(cfg.n_max + 1):
            _cmp(report, _tag(p, n=n, col=0), lambda: pb.h_explicit(n, p, 0), lambda: pb.mpb_explicit(n, p))


def _h_table_check(positive: bool):
    def check(cfg, report):
        for p in _params(cfg):
            if (p.k > 0) != positive:
                continue
            try:
                table = pb.build_h_table(p, cfg.n_max, cfg.n_max)
            except PoleError:
                report.skipped += 1
                continue
            for n in range(cfg.n_max + 1):
                for c in range(cfg.n_max - n + 1):
                    _cmp(report, _tag(p, n=n, col=c), lambda: table[n, c], lambda: pb.h_explicit(n, p, c))

    return check


REGISTRY["TGQ1"] = Identity("TGQ1", "H-triangle recurrence = defining sum (positive order)", _h_table_check(True))
REGISTRY["TGQ11"] = Identity(
    "TGQ11", "p-advancing H recurrence = defining sum (negative order)", _h_table_check(False)
)


@identity("Alg1", "column 0 of the m = 0 H-triangle gives B_{n,0}; classic case is Bernoulli with B_1 = 1/2")
def _alg1(cfg, report):
    for p in _params(cfg, shifts=False):
        try:
            col = pb.build_h_table(p, cfg.n_max, 0).column(0)
        except PoleError:
            report.skipped += 1
            continue
        for n, v in enumerate(col):
            _cmp(report, _tag(p, n=n), lambda: v, lambda: pb.mpb_explicit(n, p))
    for n, v in enumerate(pb.bernoulli_classic(max(cfg.n_max, 12))):
        report.compare({"classic": True, "n": n}, v, pb.mpb_explicit(n, make_params(1, 1, [1], 1, 0)))


def _conversion(relation):
    def check(cfg, report):
        for p in _params(cfg):
            for n in range(1, cfg.n_max + 1):
                _cmp(report, _tag(p, n=n), lambda: pb.convert(relation, n, p), lambda: pb.convert_target(relation, n, p))

    return check


for _rel in pb.CONVERSIONS:
    REGISTRY[_rel] = Identity(_rel, f"conversion {_rel} double sum = direct value", _conversion(_rel))


def _dgf(family, name):
    def check(cfg, report):
        for p in _params(cfg, shifts=True):
            if p.k != 1:
                continue  # the order is the y variable; one pass per (a, q, L, m)
            x_points = cfg.points if family == "bernoulli_poly" else (None,)
            for x0 in x_points:
                try:
                    sub = pb.double_egf_check(family, p, min(cfg.n_max, 5), cfg.k_max, x0)
                except PoleError:
                    report.skipped += 1
                    continue
                for f in sub.failures:
                    f.update(_tag(p))
                report.merge(sub)

    REGISTRY[name] = Identity(name, f"double EGF of negative-order {family} values", check)


_dgf("cauchy1", "DGF-C1")
_dgf("cauchy2", "DGF-C2")
_dgf("bernoulli", "DGF-B")
_dgf("bernoulli_poly", "DGF-Bx")


# --- polynomial families --------------------------------------------------


def _poly_check(name, doc, lhs, rhs, *, n_min=0, positive_only=False):
    def check(cfg, report):
        for p in _params(cfg, positive_only=positive_only):
            for x0 in cfg.points:
                for n in range(n_min, cfg.n_max + 1):
                    _cmp(report, _tag(p, n=n, x0=fmt(x0)), lambda: lhs(n, p, x0), lambda: rhs(n, p, x0))

    REGISTRY[name] = Identity(name, doc, check, positive_only)


_poly_check(
    "GGF",
    "first-kind polynomial (rising factorial sum) = EGF with (1+qz)^(-x/q)",
    lambda n, p, x: pf.mpc_polynomial(FIRST, n, p)(x),
    lambda n, p, x: egf_coefficients("cauchy1_poly", p, n, x0=x)[n],
)
_poly_check(
    "hat:GGF",
    "second-kind polynomial (rising factorial sum) = EGF",
    lambda n, p, x: pf.mpc_polynomial(SECOND, n, p)(x),
    lambda n, p, x: egf_coefficients("cauchy2_poly", p, n, x0=x)[n],
)
_poly_check(
    "thm13",
    "first-kind polynomial = weighted Stirling T expression",
    lambda n, p, x: pf.mpc_polynomial(FIRST, n, p)(x),
    lambda n, p, x: pf.mpc_poly_weighted_eval(FIRST, n, p, x),
)
_poly_check(
    "ws",
    "second-kind polynomial = weighted Stirling T expression",
    lambda n, p, x: pf.mpc_polynomial(SECOND, n, p)(x),
    lambda n, p, x: pf.mpc_poly_weighted_eval(SECOND, n, p, x),
)
_poly_check(
    "thm14",
    "sum q^(n-i) S_n^i(x/q) C_i(x) is the x-free closed form",
    lambda n, p, x: pf.mpc_poly_inverse_check(n, p, x),
    lambda n, p, x: pf.cauchy_inverse_closed(n, p),
)
_poly_check(
    "zR1",
    "(-1)^n C_n(-x)/n! = sum C(n-1,i-1) q^(n-i) Chat_i(x)/i!",
    lambda n, p, x: pf.mpc_poly_dual(FIRST, n, p, x),
    lambda n, p, x: pf.mpc_poly_dual_target(FIRST, n, p, x),
    n_min=1,
    positive_only=True,
)
_poly_check(
    "zR2",
    "(-1)^n Chat_n(-x)/n! = sum C(n-1,i-1) q^(n-i) C_i(x)/i!",
    lambda n, p, x: pf.mpc_poly_dual(SECOND, n, p, x),
    lambda n, p, x: pf.mpc_poly_dual_target(SECOND, n, p, x),
    n_min=1,
    positive_only=True,
)
_poly_check(
    "For4",
    "Bernoulli polynomial EGF = weighted Stirling S expression",
    lambda n, p, x: egf_coefficients("bernoulli_poly", p, n, x0=x)[n],
    lambda n, p, x: pf.mpb_poly_weighted_eval(n, p, x),
)
_poly_check(
    "For5",
    "Bernoulli polynomial = weighted Stirling S expression",
    lambda n, p, x: pf.mpb_polynomial(n, p)(x),
    lambda n, p, x: pf.mpb_poly_weighted_eval(n, p, x),
)
_poly_check(
    "For6",
    "sum T_n^i(x)(-q)^(n-i) B_i(x) is the x-free closed form",
    lambda n, p, x: pf.mpb_poly_weighted_inverse_check(n, p, x),
    lambda n, p, x: pf.bernoulli_inverse_closed(n, p),
)
_poly_check(
    "For7",
    "Bernoulli polynomial binomial expansion = EGF coefficient",
    lambda n, p, x: pf.mpb_polynomial(n, p)(x),
    lambda n, p, x: egf_coefficients("bernoulli_poly", p, n, x0=x)[n],
)
for _rel in pf.THM200:
    _poly_check(
        f"thm200:{_rel}",
        f"{_rel} double sum = direct polynomial value",
        lambda n, p, x, r=_rel: pf.thm200_sum(r, n, p, x),
        lambda n, p, x, r=_rel: pf.thm200_target(r, n, p, x),
        positive_only=True,
    )


@identity("For5-r", "Bernoulli polynomial at r and r/h through r-Stirling and r-Whitney numbers")
def _for5_r(cfg, report):
    for p in _params(cfg):
        for n in range(cfg.n_max + 1):
            for r in range(3):
                _cmp(report, _tag(p, n=n, r=r), lambda: pf.mpb_poly_rstirling_eval(n, p, r), lambda: pf.mpb_polynomial(n, p)(r))
            for h, r in ((2, 1), (3, -2), (Fraction(1, 2), 1)):
                x = Fraction(r) / Fraction(h)
                _cmp(
                    report,
                    _tag(p, n=n, h=fmt(Fraction(h)), r=r),
                    lambda: pf.mpb_poly_whitney_eval(n, p, h, r),
                    lambda: pf.mpb_polynomial(n, p)(x),
                )


@identity("Whitney", "r-Whitney numbers reduce to r-Stirling numbers at h = 1")
def _whitney(cfg, report):
    for r in range(4):
        for n in range(cfg.n_max + 1):
            for i in range(n + 1):
                report.compare({"n": n, "i": i, "r": r}, r_whitney2(n, i, 1, r), r_stirling2(n, i, r))


@identity("For13", "H polynomials: recurrence-table coefficients = defining sums = S(x+p) closed form")
def _for13(cfg, report):
    for p in _params(cfg):
        for n in range(min(cfg.n_max, 6) + 1):
            for c in range(min(cfg.n_max, 6) - n + 1):
                try:
                    table_poly = pf.h_polynomial(n, c, p)
                    explicit_poly = pf.h_polynomial_explicit(n, c, p)
                except PoleError:
                    report.skipped += 1
                    continue
                for d in range(n + 1):
                    report.compare(_tag(p, n=n, col=c, degree=d), table_poly[d], explicit_poly[d])
                for x0 in cfg.points:
                    _cmp(
                        report,
                        _tag(p, n=n, col=c, x0=fmt(x0)),
                        lambda: table_poly(x0),
                        lambda: pf.h_poly_alt_eval(n, c, p, x0),
                    )


@identity("For14", "H_{n+1,p}(x) = F H_{n,p+1}(x) - q(x+p) H_{n,p}(x) as polynomials; reduces to TGQ1 at x = 0")
def _for14(cfg, report):
    for p in _params(cfg):
        bound = min(cfg.n_max, 8)
        for n in range(bound):
            for c in range(bound - n):
                try:
                    residual = pf.h_poly_recurrence_residual(n, c, p)
                    table = pb.build_h_table(p, n + 1, c)
                    factor = pf.h_poly_step_factor(p, c)
                except PoleError:
                    report.skipped += 1
                    continue
                for d in range(n + 2):
                    report.compare(_tag(p, n=n, col=c, degree=d), residual[d], Fraction(0))
                report.compare(
                    _tag(p, n=n, col=c, x=0),
                    table[n + 1, c],
                    factor * table[n, c + 1] - c * p.q * table[n, c],
                )


# --- running --------------------------------------------------------------


def identity_ids() -> list[str]:
    return list(REGISTRY)


def run_identity(name: str, cfg: VerifyConfig | None = None) -> Report:
    cfg = cfg or VerifyConfig()
    try:
        ident = REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown identity {name!r}; known: {', '.join(REGISTRY)}") from None
    ranges = cfg.ranges()
    if ident.positive_only and not cfg.all_orders:
        ranges["orders"] = [k for k in cfg.orders if k > 0]
    report = Report(name, ranges=ranges, sample=cfg.described_sample())
    ident.check(cfg, report)
    return report


def run_many(names: list[str], cfg: VerifyConfig | None = None, jobs: int = 1) -> list[Report]:
    """Run identities, possibly concurrently; reports come back in the order of ``names``."""
    cfg = cfg or VerifyConfig()
    if jobs <= 1:
        return [run_identity(n, cfg) for n in names]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(partial(run_identity, cfg=cfg), names))
