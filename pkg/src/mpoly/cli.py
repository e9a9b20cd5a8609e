"""Command-line front end: tables, polynomials and the identity runner.

Exit status: 0 output produced / all checks pass, 1 verification failure,
2 usage, parameter or pole error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactnum import ParameterError, Params, PoleError, fmt, make_params, rational
from .identities import VerifyConfig, identity_ids, run_many
from .polybernoulli import bernoulli_classic, build_h_table, h_explicit, mpb_explicit
from .polycauchy import CauchyKind, build_cauchy_table, gregory_table, mpc_number_explicit
from .polyfamilies import h_polynomial, mpb_polynomial, mpc_polynomial

FAMILIES = ("cauchy1", "cauchy2", "bernoulli", "h")
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    family: str = "cauchy1"
    n_max: int = 4
    m_max: int = 3
    p_max: int = 3
    a: int = 1
    q: Fraction = Fraction(1)
    L: tuple[Fraction, ...] = (Fraction(1),)
    k: int = 1
    shift: int = 0
    x0: Fraction | None = None
    format: str = "csv"
    identities: list[str] = field(default_factory=list)
    params_given: bool = False
    orders: tuple[int, ...] | None = None
    jobs: int = 1

    def params(self) -> Params:
        return make_params(self.a, self.q, self.L, self.k, self.shift)


# --- rendering -------------------------------------------------------------


def _grid_csv(grid: list[list[Fraction]], col: str = "m") -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", col, "value"])
    for n, row in enumerate(grid):
        for m, v in enumerate(row):
            w.writerow([n, m, fmt(v)])
    return buf.getvalue()


def _grid_json(params: dict, grid: list[list[Fraction]], **extra) -> str:
    doc = {"params": params, **extra, "values": [[fmt(v) for v in row] for row in grid]}
    return json.dumps(doc, indent=1) + "\n"


def _emit_grid(cfg: RunConfig, grid, params: dict, col: str = "m", **extra) -> str:
    if cfg.format == "json":
        return _grid_json(params, grid, **extra)
    if cfg.format == "csv":
        return _grid_csv(grid, col)
    return "\n".join(", ".join(fmt(v) for v in row) for row in grid) + "\n"


# --- commands --------------------------------------------------------------


def _cauchy_grid(kind: CauchyKind, cfg: RunConfig) -> list[list[Fraction]]:
    p = cfg.params()
    try:
        return build_cauchy_table(kind, p, cfg.n_max, cfg.m_max).matrix()
    except PoleError:
        # the recurrence needs the whole band; fall back to the explicit sum per cell
        return [
            [mpc_number_explicit(kind, n, p.with_shift(m)) for m in range(cfg.m_max + 1)]
            for n in range(cfg.n_max + 1)
        ]


def cmd_table(cfg: RunConfig) -> str:
    p = cfg.params()
    if cfg.family in ("cauchy1", "cauchy2"):
        grid = _cauchy_grid(CauchyKind.parse(cfg.family), cfg)
    elif cfg.family == "bernoulli":
        grid = [[mpb_explicit(n, p.with_shift(m)) for m in range(cfg.m_max + 1)] for n in range(cfg.n_max + 1)]
    else:
        try:
            grid = build_h_table(p, cfg.n_max, cfg.p_max).matrix()
        except PoleError:
            grid = [[h_explicit(n, p, c) for c in range(cfg.p_max + 1)] for n in range(cfg.n_max + 1)]
        return _emit_grid(cfg, grid, p.describe(), col="p", family=cfg.family)
    return _emit_grid(cfg, grid, p.describe(), family=cfg.family)


def cmd_poly(cfg: RunConfig) -> str:
    p = cfg.params()
    polys = []
    for n in range(cfg.n_max + 1):
        if cfg.family in ("cauchy1", "cauchy2"):
            polys.append(mpc_polynomial(CauchyKind.parse(cfg.family), n, p))
        elif cfg.family == "bernoulli":
            polys.append(mpb_polynomial(n, p))
        else:
            polys.append(h_polynomial(n, cfg.p_max, p))
    if cfg.x0 is not None:
        values = [poly(cfg.x0) for poly in polys]
        if cfg.format == "json":
            doc = {"params": p.describe(), "family": cfg.family, "x0": fmt(cfg.x0), "values": [fmt(v) for v in values]}
            return json.dumps(doc, indent=1) + "\n"
        if cfg.format == "csv":
            return "n,value\n" + "".join(f"{n},{fmt(v)}\n" for n, v in enumerate(values))
        return ", ".join(fmt(v) for v in values) + "\n"
    if cfg.format == "json":
        doc = {"params": p.describe(), "family": cfg.family, "values": [poly.to_json() for poly in polys]}
        return json.dumps(doc, indent=1) + "\n"
    if cfg.format == "csv":
        lines = ["n,degree,value"]
        for n, poly in enumerate(polys):
            lines += [f"{n},{d},{c}" for d, c in enumerate(poly.to_json())]
        return "\n".join(lines) + "\n"
    return "".join(f"{n}: {poly.dumps()}\n" for n, poly in enumerate(polys))


def cmd_gregory(cfg: RunConfig) -> str:
    t = gregory_table(cfg.n_max, cfg.m_max)
    grid = [[t[n, m] for m in range(cfg.m_max + 1)] for n in range(cfg.n_max + 1)]
    return _emit_grid(cfg, grid, {"table": "gregory"})


def cmd_bernoulli_classic(cfg: RunConfig) -> str:
    values = bernoulli_classic(cfg.n_max)
    if cfg.format == "json":
        return json.dumps({"params": {"a": 1, "q": "1", "l": "1", "k": 1, "m": 0}, "values": [fmt(v) for v in values]}) + "\n"
    if cfg.format == "csv":
        return "n,value\n" + "".join(f"{n},{fmt(v)}\n" for n, v in enumerate(values))
    return ", ".join(fmt(v) for v in values) + "\n"


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    known = identity_ids()
    names = cfg.identities or known
    unknown = [n for n in names if n not in known]
    if unknown:
        raise UsageError(f"unknown identity id(s): {', '.join(unknown)}; run `verify --list`")
    vc = VerifyConfig(n_max=cfg.n_max, m_max=cfg.m_max)
    if cfg.params_given:
        vc.sample = ((cfg.a, fmt(cfg.q), tuple(fmt(x) for x in cfg.L)),)
        vc.orders = (cfg.k,)
    if cfg.orders:
        vc.orders = cfg.orders
    if cfg.x0 is not None:
        vc.points = (cfg.x0,)
    reports = run_many(names, vc, jobs=cfg.jobs)
    ok = all(r.passed for r in reports)
    if cfg.format == "json":
        out = json.dumps({"passed": ok, "reports": [r.as_dict() for r in reports]}, indent=1) + "\n"
    else:
        lines = [r.summary() for r in reports]
        for r in reports:
            for f in r.failures[:5]:
                lines.append(f"  {r.identity} mismatch: {json.dumps(f)}")
        lines.append(f"{sum(r.passed for r in reports)}/{len(reports)} identities pass")
        out = "\n".join(lines) + "\n"
    return out, EXIT_OK if ok else EXIT_FAIL


# --- argument parsing -------------------------------------------------------


def _rational_arg(text: str) -> Fraction:
    try:
        return rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _rational_list(text: str) -> tuple[Fraction, ...]:
    return tuple(_rational_arg(x) for x in text.split(",") if x.strip())


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a list of integers: {text!r}") from exc


def _add_params(sp: argparse.ArgumentParser) -> None:
    g = sp.add_argument_group("parameters (only the product l of L enters the formulas)")
    g.add_argument("--a", type=int, default=None, help="integer a != 0 (default 1)")
    g.add_argument("--q", type=_rational_arg, default=None, help="rational q != 0 (default 1)")
    lg = g.add_mutually_exclusive_group()
    lg.add_argument("--l", type=_rational_arg, default=None, help="the product l directly")
    lg.add_argument("--L", type=_rational_list, default=None, help="comma-separated sides l_1,...,l_r")
    g.add_argument("--k", type=int, default=None, help="signed order k != 0 (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mpoly",
        description="Exact m-poly-Cauchy / m-poly-Bernoulli tables and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("table", help="print the (n, m) grid of a family")
    sp.add_argument("--family", choices=FAMILIES, default="cauchy1")
    sp.add_argument("--n-max", type=int, default=4)
    sp.add_argument("--m-max", type=int, default=3)
    sp.add_argument("--p-max", type=int, default=3, help="column count for the h family")
    _add_params(sp)
    sp.add_argument("--format", choices=("csv", "json", "text"), default="csv")

    sp = sub.add_parser("poly", help="print polynomial coefficient lists (degree ascending)")
    sp.add_argument("--family", choices=FAMILIES, default="cauchy1")
    sp.add_argument("--n-max", type=int, default=4)
    sp.add_argument("--m", type=int, default=0, help="shift m")
    sp.add_argument("--p-max", type=int, default=0, help="column p for the h family")
    sp.add_argument("--x0", type=_rational_arg, default=None, help="evaluate at x0 instead")
    _add_params(sp)
    sp.add_argument("--format", choices=("csv", "json", "text"), default="text")

    sp = sub.add_parser("gregory", help="print the G-triangle; column 0 holds the Gregory coefficients")
    sp.add_argument("--n-max", type=int, default=6)
    sp.add_argument("--m-max", type=int, default=3)
    sp.add_argument("--format", choices=("csv", "json", "text"), default="csv")

    sp = sub.add_parser("bernoulli-classic", help="print B_0..B_N (B_1 = +1/2)")
    sp.add_argument("--n-max", type=int, default=12)
    sp.add_argument("--format", choices=("csv", "json", "text"), default="text")

    sp = sub.add_parser("verify", help="cross-check identities between independent routes")
    which = sp.add_mutually_exclusive_group()
    which.add_argument("--identity", action="append", default=[], help="identity id (repeatable, or comma-separated)")
    which.add_argument("--all", action="store_true", help="every registered identity (the default)")
    which.add_argument("--list", action="store_true", help="list identity ids and exit")
    sp.add_argument("--n-max", type=int, default=6)
    sp.add_argument("--m-max", type=int, default=3)
    sp.add_argument("--orders", type=_int_list, default=None, help="comma-separated signed orders")
    sp.add_argument("--x0", type=_rational_arg, default=None, help="single evaluation point for polynomial identities")
    sp.add_argument("--jobs", type=int, default=1)
    _add_params(sp)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=ns.command, format=ns.format, n_max=ns.n_max)
    for attr in ("family", "m_max", "p_max", "x0", "jobs", "orders"):
        if hasattr(ns, attr):
            setattr(cfg, attr, getattr(ns, attr))
    if cfg.n_max < 0 or cfg.m_max < 0 or cfg.p_max < 0:
        raise UsageError("index bounds must be nonnegative")
    if hasattr(ns, "a"):
        given = [ns.a, ns.q, ns.l, ns.L, ns.k]
        cfg.params_given = any(v is not None for v in given)
        cfg.a = 1 if ns.a is None else ns.a
        cfg.q = Fraction(1) if ns.q is None else ns.q
        if ns.L is not None:
            cfg.L = ns.L
        elif ns.l is not None:
            cfg.L = (ns.l,)
        cfg.k = 1 if ns.k is None else ns.k
    if ns.command == "poly":
        cfg.shift = ns.m
    if ns.command == "verify":
        cfg.identities = [x for chunk in ns.identity for x in chunk.split(",") if x]
    # validate before any computation starts
    cfg.params()
    return cfg


def run(cfg: RunConfig) -> tuple[str, int]:
    if cfg.command == "table":
        return cmd_table(cfg), EXIT_OK
    if cfg.command == "poly":
        return cmd_poly(cfg), EXIT_OK
    if cfg.command == "gregory":
        return cmd_gregory(cfg), EXIT_OK
    if cfg.command == "bernoulli-classic":
        return cmd_bernoulli_classic(cfg), EXIT_OK
    if cfg.command == "verify":
        return cmd_verify(cfg)
    raise UsageError(f"unknown command {cfg.command!r}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    if ns.command == "verify" and ns.list:
        print("\n".join(identity_ids()))
        return EXIT_OK
    try:
        cfg = config_from_args(ns)
        out, status = run(cfg)
    except PoleError as exc:
        print(f"mpoly: pole at index {exc.index}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParameterError, UsageError) as exc:
        print(f"mpoly: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
