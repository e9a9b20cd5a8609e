"""Print the C_{n,m} grid of both kinds for one parameter point, side by side
with the Gregory triangle (first kind, classic parameters only)."""

from __future__ import annotations

import argparse

from mpoly.exactnum import fmt, make_params
from mpoly.polycauchy import FIRST, SECOND, build_cauchy_table, gregory_table


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--a", type=int, default=1)
    ap.add_argument("--q", default="1")
    ap.add_argument("--L", default="1", help="comma-separated sides")
    ap.add_argument("--k", type=int, default=1)
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--m-max", type=int, default=4)
    args = ap.parse_args()

    p = make_params(args.a, args.q, args.L.split(","), args.k)
    for kind in (FIRST, SECOND):
        table = build_cauchy_table(kind, p, args.n_max, args.m_max)
        print(f"{kind.value} kind, {p.describe()}")
        for n, row in enumerate(table.matrix()):
            print(f"  n={n:<2}", "  ".join(f"{fmt(v):>14}" for v in row))
    if (args.a, args.q, args.L, args.k) == (1, "1", "1", 1):
        g = gregory_table(args.n_max, args.m_max)
        print("G_{n,m} = C_{n,m}/n!")
        for n in range(args.n_max + 1):
            print(f"  n={n:<2}", "  ".join(f"{fmt(g[n, m]):>14}" for m in range(args.m_max + 1)))


if __name__ == "__main__":
    main()
