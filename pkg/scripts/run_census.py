"""Run the theorem census for a range of orders and write one TSV per order.

    python3 scripts/run_census.py --max-n 7 --jobs 2 --out results/
"""

import argparse
import time
from pathlib import Path

from properdisc.census import TSV_COLUMNS, census, row_to_tsv
from properdisc.solver import SolveBudget


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", type=Path, default=Path("results"))
    args = ap.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    budget = SolveBudget.from_env()
    for n in range(args.min_n, args.max_n + 1):
        t0 = time.perf_counter()
        rows = census(n, budget, args.jobs)
        path = args.out / f"census_n{n}.tsv"
        with path.open("w") as fh:
            fh.write("\t".join(TSV_COLUMNS) + "\n")
            fh.writelines(row_to_tsv(r) + "\n" for r in rows)
        failed = sum(bool(r.failed) for r in rows)
        hist: dict[str, int] = {}
        for r in rows:
            hist[r.pd] = hist.get(r.pd, 0) + 1
        print(f"n={n}: {len(rows)} graphs, failed={failed}, pd histogram {dict(sorted(hist.items()))}, "
              f"{time.perf_counter() - t0:.1f}s -> {path}")


if __name__ == "__main__":
    main()
