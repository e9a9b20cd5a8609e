"""Print the negative-order poly-Bernoulli array B_n^(-k) (classic
parameters) and confirm its n <-> k symmetry, or the same array at a
user-chosen parameter point (where the symmetry generally fails)."""

from __future__ import annotations

import argparse

from mpoly.exactnum import fmt, make_params
from mpoly.polybernoulli import mpb_explicit


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--size", type=int, default=6)
    ap.add_argument("--a", type=int, default=1)
    ap.add_argument("--q", default="1")
    ap.add_argument("--L", default="1")
    ap.add_argument("--m", type=int, default=0)
    args = ap.parse_args()

    grid = [
        [mpb_explicit(n, make_params(args.a, args.q, args.L.split(","), -k, args.m)) for k in range(1, args.size + 1)]
        for n in range(args.size + 1)
    ]
    for n, row in enumerate(grid):
        print(f"n={n:<2}", "  ".join(f"{fmt(v):>10}" for v in row))
    symmetric = all(grid[n][k - 1] == grid[k][n - 1] for n in range(1, args.size + 1) for k in range(1, args.size + 1))
    print("symmetric in (n, k):", symmetric)


if __name__ == "__main__":
    main()
