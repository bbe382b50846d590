#!/usr/bin/env python3
"""Demonstrate a hidden horizon: the observable Theta(alpha)^{-1} K with
K = diag(1, -1) at N = 2 keeps a real spectrum up to alpha = 1, strictly
beyond the metric's own positivity boundary gamma(2) = sqrt(3)/2.

Usage: python scripts/hidden_horizon_demo.py
"""

import numpy as np

from qtlattice import hidden_horizon_scan, horizon_gamma


def main():
    gamma = horizon_gamma(2).gamma
    grid = np.arange(0.0, 1.2, 1e-3)
    scan = hidden_horizon_scan(2, np.diag([1.0, -1.0]), grid)
    print(f"metric positivity horizon  gamma(2) = {gamma:.12f}")
    print(f"observable reality horizon          = {scan.first_crossing:.3f}")
    print()
    print(f"{'alpha':>6}  {'max |Im lambda|':>16}  definiteness")
    for alpha in (0.0, 0.5, 0.85, 0.9, 0.99, 1.0, 1.05, 1.1):
        idx = int(np.argmin(np.abs(grid - alpha)))
        print(f"{grid[idx]:>6.3f}  {scan.max_imag[idx]:>16.6e}  {scan.definiteness[idx]}")


if __name__ == "__main__":
    main()
