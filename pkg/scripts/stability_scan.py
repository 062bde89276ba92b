#!/usr/bin/env python3
"""Scan the observed multiplicity-stability onset against the 3m bound.

For each (m, q) the permutation module k[G_n/G_{n-m}] is decomposed for
every n from m up to 3m + extra, and the first n from which the stable-
coordinate decomposition never changes again is reported next to the bound.
"""

import argparse
import time

from glstab.stability import empirical_stability_degree


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--m-max", type=int, default=3)
    parser.add_argument("--q", type=int, nargs="+", default=[2, 3])
    parser.add_argument("--extra", type=int, default=3, help="window past 3m")
    args = parser.parse_args()

    print(f"{'m':>3} {'q':>3} {'onset':>6} {'bound':>6} {'shapes':>7} {'seconds':>8}")
    for m in range(args.m_max + 1):
        for q in args.q:
            start = time.time()
            report = empirical_stability_degree(m, q, 3 * m + args.extra)
            shapes = len(report.decompositions[3 * m].entries)
            print(
                f"{m:>3} {q:>3} {report.observed_stability_degree:>6} {3 * m:>6} "
                f"{shapes:>7} {time.time() - start:>8.2f}"
                + ("" if report.bound_satisfied else "  BOUND VIOLATED")
            )


if __name__ == "__main__":
    main()
