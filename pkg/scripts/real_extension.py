#!/usr/bin/env python
"""How badly |R| <= 1 fails off the integers, for a few grid steps.

    python scripts/real_extension.py [--T 51]
"""

import argparse
import time
from fractions import Fraction

from schubert.racah import real_grid_scan


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--T", type=int, default=51)
    ap.add_argument("--steps", default="1,1/2,1/3,1/4")
    args = ap.parse_args()

    hi = args.T - 1
    print(f"{'step':>6} {'points':>8} {'max |R|':>14}  argmax            secs")
    for step in map(Fraction, args.steps.split(",")):
        t0 = time.perf_counter()
        res = real_grid_scan(args.T, step, 0, hi)
        x, y = res.arg
        print(f"{str(step):>6} {res.points:>8} {float(res.max_abs):>14.6e}  ({str(x)}, {str(y)})"
              f"  {time.perf_counter() - t0:.1f}")


if __name__ == "__main__":
    main()
