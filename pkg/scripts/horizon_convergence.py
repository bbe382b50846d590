#!/usr/bin/env python3
"""Print the positivity horizon gamma(N) of the tridiagonal metric family.

The successive differences shrink monotonically, consistent with
convergence toward a positive limit; no limit value is asserted.

Usage: python scripts/horizon_convergence.py [N_max]
"""

import sys

from qtlattice import horizon_convergence_scan


def main():
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 64
    sizes = [n for n in (2, 4, 8, 16, 32, 64, 128) if n <= n_max]
    print(f"{'N':>4}  {'gamma':>20}  {'|diff|':>12}")
    for N, gamma, diff in horizon_convergence_scan(sizes):
        diff_text = f"{diff:.6e}" if diff is not None else "-"
        print(f"{N:>4}  {gamma:.17f}  {diff_text:>12}")


if __name__ == "__main__":
    main()
