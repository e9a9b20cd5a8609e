"""Run the whole identity registry over a grid of index bounds and report
checked / skipped counts and wall time per bound."""

from __future__ import annotations

import argparse
import time

from mpoly.identities import VerifyConfig, identity_ids, run_many


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, nargs="+", default=[4, 6, 8])
    ap.add_argument("--m-max", type=int, default=3)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    names = identity_ids()
    print("n_max  identities  checked  skipped  failed  seconds")
    for n_max in args.n_max:
        t0 = time.perf_counter()
        reports = run_many(names, VerifyConfig(n_max=n_max, m_max=args.m_max), jobs=args.jobs)
        dt = time.perf_counter() - t0
        failed = [r.identity for r in reports if not r.passed]
        print(
            f"{n_max:>5}  {len(reports):>10}  {sum(r.checked for r in reports):>7}"
            f"  {sum(r.skipped for r in reports):>7}  {len(failed):>6}  {dt:>7.1f}"
        )
        for name in failed:
            print(f"       FAIL {name}")


if __name__ == "__main__":
    main()
