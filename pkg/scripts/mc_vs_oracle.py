#!/usr/bin/env python3
"""Cross-validate Monte Carlo estimates against the exact ordering oracle
on the fixed 40-instance suite, with the equitable-partition baseline.

Example:
    python scripts/mc_vs_oracle.py --trials 10000 --seed 7 --out suite.csv
"""

import argparse
import csv

from hgcolor import baseline_equitable_success, greedy_success_exact, monte_carlo
from hgcolor.suite import fixed_suite


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--out", default="suite.csv")
    args = ap.parse_args()

    with open(args.out, "w", newline="\n") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(
            ["name", "vertices", "edges", "r", "exact", "mc_estimate",
             "wilson99_lo", "wilson99_hi", "inside", "equitable_estimate"]
        )
        misses = 0
        for name, h, r in fixed_suite():
            exact = float(greedy_success_exact(h, r).success_probability)
            rep = monte_carlo(h, r, args.trials, args.seed)
            base = baseline_equitable_success(h, r, args.trials, args.seed)
            lo, hi = rep.wilson99
            inside = lo <= exact <= hi
            misses += not inside
            writer.writerow(
                [name, h.vertex_count, h.edge_count, r, f"{exact:.6f}",
                 f"{rep.estimate:.6f}", f"{lo:.6f}", f"{hi:.6f}", inside,
                 f"{base.estimate:.6f}"]
            )
            print(f"{name:32s} exact={exact:.4f} mc={rep.estimate:.4f} inside={inside}")
    print(f"wrote {args.out}; {misses} instances outside the 99% Wilson band")


if __name__ == "__main__":
    main()
