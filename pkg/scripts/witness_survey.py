#!/usr/bin/env python3
"""Survey least overpseudoprime witnesses over the odd composites up to N.

Reports the witness histogram, the composites needing the largest witness,
and the least base that witnesses the whole set at once (the common-witness
question for the initial segment).

Usage:
  python scripts/witness_survey.py
  python scripts/witness_survey.py --limit 20000 --max-base 50
"""

import argparse
import sys
from collections import Counter

from overpseudo import common_witness, is_prime, least_witness


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--limit", type=int, default=10_000)
    parser.add_argument("--max-base", type=int, default=50)
    args = parser.parse_args()

    composites = [n for n in range(9, args.limit + 1, 2) if not is_prime(n)]
    histogram: Counter[int] = Counter()
    worst: list[tuple[int, int]] = []
    for n in composites:
        w = least_witness(n).witness
        histogram[w] += 1
        if w is not None and (not worst or w >= worst[-1][1]):
            worst.append((n, w))
            worst = [item for item in worst if item[1] == worst[-1][1]][-5:]

    print(f"odd composites <= {args.limit}: {len(composites)}")
    for w, count in sorted(histogram.items(), key=lambda kv: (kv[0] is None, kv[0])):
        print(f"  witness {w}: {count}")
    print(f"largest least-witness cases: {worst}")

    shared = common_witness(composites, args.max_base)
    if shared is None:
        print(f"no single base <= {args.max_base} witnesses the whole set")
    else:
        print(f"least common witness for the whole set: {shared}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
