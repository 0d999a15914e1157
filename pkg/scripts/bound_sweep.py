#!/usr/bin/env python3
"""Sweep the overpseudoprime counting function against its x**(3/4) envelope.

Runs one enumeration at the largest bound, prints an aligned table of
Ov(x), x**(3/4), their ratio and the conjectured x**(1/2) reference, and
optionally writes the CSV.

Usage:
  python scripts/bound_sweep.py
  python scripts/bound_sweep.py --points 1e4,1e5,1e6,1e7 --csv bounds.csv
"""

import argparse
import sys
import time

from overpseudo import Budget, bound_report, bound_report_csv


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--points", default="1e3,1e4,1e5,1e6,1e7",
                        help="comma-separated ascending bounds")
    parser.add_argument("--csv", default=None, help="write CSV here")
    parser.add_argument("--budget", type=int, default=500_000_000)
    args = parser.parse_args()

    xs = [int(float(part)) for part in args.points.split(",")]
    budget = Budget(args.budget)
    t0 = time.time()
    rows = bound_report(xs, budget)
    elapsed = time.time() - t0

    print(f"{'x':>12} {'Ov(x)':>7} {'x^(3/4)':>14} {'ratio':>10} {'x^(1/2)':>12}")
    for row in rows:
        print(f"{row.x:>12} {row.ov:>7} {row.x_3_4:>14.2f} "
              f"{row.ratio:>10.6f} {row.x_1_2:>12.2f}")
    print(f"\n{budget.spent} work units, {elapsed:.1f}s")

    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(bound_report_csv(rows))
        print(f"wrote {args.csv}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
