#!/usr/bin/env python
"""Print theta polynomials for all k-strict partitions of a given weight,
marking which ones coincide with the determinant or the Pfaffian.

    python scripts/theta_table.py --k 1 --weight 5
"""

import argparse

from schubert.giambelli import giambelli_det, schur_pfaffian, theta
from schubert.partitions import k_strict_partitions_in_box


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=int, default=1)
    ap.add_argument("--weight", type=int, default=5)
    args = ap.parse_args()

    w = args.weight
    for lam in k_strict_partitions_in_box(args.k, w, w):
        if lam.partition.weight() != w:
            continue
        th = theta(lam)
        tags = []
        if th == giambelli_det(lam.partition):
            tags.append("det")
        if lam.partition.is_strict() and th == schur_pfaffian(lam.partition):
            tags.append("pf")
        print(f"{str(lam.partition):<14} {','.join(tags):<7} {th}")


if __name__ == "__main__":
    main()
