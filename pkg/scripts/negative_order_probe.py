"""Report (without asserting) whether the identities that are only claimed
for positive order also hold for negative order over the default sample."""

from __future__ import annotations

import argparse

from mpoly.identities import VerifyConfig, run_identity

POSITIVE_ONLY = ["AN1", "AN2", "zR1", "zR2", "thm200:For9", "thm200:For10", "thm200:For11", "thm200:For12"]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--orders", default="-1,-2,-3")
    args = ap.parse_args()
    orders = tuple(int(k) for k in args.orders.split(","))

    cfg = VerifyConfig(n_max=args.n_max, orders=orders, all_orders=True)
    for name in POSITIVE_ONLY:
        report = run_identity(name, cfg)
        agree = report.checked - len(report.failures)
        print(f"{name:>14}: {agree}/{report.checked} agree at k in {orders} ({report.skipped} pole cells)")


if __name__ == "__main__":
    main()
