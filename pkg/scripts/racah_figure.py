#!/usr/bin/env python
"""Write the R(k, n, 51) lattice as CSV plus a gnuplot script.

    python scripts/racah_figure.py [--T 51] [--out figure/]
"""

import argparse
from pathlib import Path

from schubert.cli import gnuplot_script, write_scan_csv
from schubert.racah import conjecture_scan, default_jobs, format_fraction


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--T", type=int, default=51)
    ap.add_argument("--out", default="figure")
    ap.add_argument("--jobs", type=int, default=None)
    args = ap.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rep = conjecture_scan(args.T, jobs=args.jobs or default_jobs())
    csv_path = out / f"racah_T{args.T}.csv"
    with open(csv_path, "w", newline="") as fh:
        write_scan_csv(rep, fh)
    (out / f"racah_T{args.T}.gp").write_text(gnuplot_script(csv_path.name, args.T))

    print(f"wrote {csv_path} ({args.T ** 2} points)")
    print(f"max |R| = {format_fraction(rep.max_abs)} at {rep.argmax}")
    print(f"min R   = {format_fraction(rep.min_val)} at {rep.argmin}")
    print(f"points with |R| > 1: {len(rep.violations)}")


if __name__ == "__main__":
    main()
