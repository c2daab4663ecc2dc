#!/usr/bin/env python3
"""Sweep the identity over every pair 1 <= i < n <= N and time each band.

All five checks per pair (both polynomial forms, both unit sums, the
consistency factor), exact arithmetic throughout.
"""

import argparse
import time

from latticechains.verification import verify_all


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--up-to", type=int, default=12, metavar="N")
    args = parser.parse_args()

    grand_start = time.perf_counter()
    total = failures = 0
    for n in range(2, args.up_to + 1):
        band_start = time.perf_counter()
        terms = 0
        for i in range(1, n):
            report = verify_all(i, n)
            total += 1
            terms += len(report.per_term_ledger)
            if not report.all_passed:
                failures += 1
                print(f"FAIL i={i} n={n}: {report.failed_check}")
        band = time.perf_counter() - band_start
        print(f"n={n:3d}: {n - 1:3d} pairs, {terms:6d} terms, {band:7.3f}s")
    elapsed = time.perf_counter() - grand_start
    print(f"{total - failures}/{total} pairs pass in {elapsed:.2f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
