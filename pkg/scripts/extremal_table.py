"""Minimum size of a connected graph of order n with pd = k, against n-1 / n+2k-4."""

import argparse
import math

from properdisc.census import census, extremal_min_size_census


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    print(f"{'n':>2} {'k':>2} {'min |E|':>8} {'formula':>8} {'#extremal':>10}  ok")
    for n in range(3, args.max_n + 1):
        rows = census(n, jobs=args.jobs)
        for k in range(1, math.ceil(n / 2) + 1):
            er = extremal_min_size_census(n, k, rows)
            print(f"{n:>2} {k:>2} {er.min_size!s:>8} {er.expected:>8} {len(er.witnesses):>10}  {'yes' if er.passed else 'NO'}")


if __name__ == "__main__":
    main()
