#!/usr/bin/env python3
"""Cross-validate the branching DP against brute-force double-coset counts.

For every (n, m, q) within the size guards, the sum of squared
multiplicities (weighted by class size) from the decomposition must equal
the number of orbits of the block subgroup on the morphism space.
"""

import argparse
import time

from glstab.branching import decompose_perm_module
from glstab.degrees import vic_hom_count
from glstab.errors import GuardExceeded
from glstab.oracle.counts import double_cosets_gl


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=6)
    parser.add_argument("--m-max", type=int, default=2)
    parser.add_argument("--q", type=int, nargs="+", default=[2, 3])
    args = parser.parse_args()

    bad = 0
    for q in args.q:
        for m in range(1, args.m_max + 1):
            for n in range(m, args.n_max + 1):
                start = time.time()
                dp = decompose_perm_module(n, m, q).sum_squares()
                try:
                    oracle = double_cosets_gl(n, m, q)
                except GuardExceeded:
                    print(f"n={n} m={m} q={q}: dp={dp} oracle=SKIPPED "
                          f"(space {vic_hom_count(m, n, q)})")
                    continue
                mark = "ok" if dp == oracle else "MISMATCH"
                bad += dp != oracle
                print(f"n={n} m={m} q={q}: dp={dp} oracle={oracle} {mark} "
                      f"[{time.time() - start:.1f}s]")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
