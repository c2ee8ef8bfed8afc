#!/usr/bin/env python3
"""Emit the certified bound table over a grid of (n, r).

Example:
    python scripts/make_bound_table.py --n 50:500:50 --r 2,3 --out bounds.csv --plot bounds.svg
"""

import argparse

from hgcolor.cli import _parse_int_list
from hgcolor.experiment import bound_table, bound_table_to_csv, svg_plot


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", default="50:500:50")
    ap.add_argument("--r", default="2,3")
    ap.add_argument("--out", default="bounds.csv")
    ap.add_argument("--plot")
    args = ap.parse_args()

    rows = bound_table(_parse_int_list(args.n), _parse_int_list(args.r))
    with open(args.out, "w", newline="\n") as fh:
        fh.write(bound_table_to_csv(rows))
    print(f"wrote {args.out} ({len(rows)} rows)")

    if args.plot:
        series = {}
        for row in rows:
            if row.max_k_rcol is not None:
                series.setdefault(f"max_k_rcol r={row.r}", []).append(
                    (row.n, row.max_k_rcol)
                )
        with open(args.plot, "w", newline="\n") as fh:
            fh.write(svg_plot(series, "certified edge-count coefficients"))
        print(f"wrote {args.plot}")


if __name__ == "__main__":
    main()
