"""Positivity horizons of the tridiagonal metric family and hidden horizons.

The tridiagonal metric Theta(alpha) = Q + alpha T stays positive-definite
only on a finite interval (-gamma, gamma).  gamma is found two independent
ways: spectrally (1/spectral-radius of Q^{-1/2} T Q^{-1/2}) and by bisecting
the definiteness classification; the two must agree tightly.  Beyond gamma
the metric is inadmissible, and companion observables Lambda(alpha) =
Theta(alpha)^{-1} K lose spectral reality at their own, generally larger,
"hidden" horizon.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import eigvalsh_tridiagonal

from .lattice import build_metric_Q
from .metrics import classify_definiteness, tridiagonal_family

__all__ = [
    "HorizonReport",
    "RealityScan",
    "horizon_gamma",
    "horizon_convergence_scan",
    "hidden_horizon_scan",
]

CROSS_CHECK_TOL = 1e-10
BISECTION_WIDTH = 1e-12
REALITY_THRESHOLD = 1e-8
SINGULAR_RCOND = 1e-12


@dataclass(frozen=True)
class HorizonReport:
    """gamma for one lattice size, with the method cross-check."""

    dimension: int
    gamma: float
    method_primary: str
    method_check: str
    cross_check_residual: float
    bisection_iterations: int

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "gamma": self.gamma,
            "method_primary": self.method_primary,
            "method_check": self.method_check,
            "cross_check_residual": self.cross_check_residual,
            "bisection_iterations": self.bisection_iterations,
        }


@dataclass(frozen=True)
class RealityScan:
    """Largest imaginary eigenvalue part of a companion observable per alpha."""

    dimension: int
    observable_label: str
    alpha_grid: np.ndarray
    max_imag: np.ndarray
    definiteness: list[str]
    first_crossing: float | None
    skipped_singular: list[float] = field(default_factory=list)


def _gamma_spectral(N: int) -> float:
    """gamma = 1/rho(Q^{-1/2} T Q^{-1/2}).

    Theta(alpha) = Q^{1/2} (I + alpha S) Q^{1/2} with S symmetric
    tridiagonal; positivity is lost exactly when alpha * rho(S) reaches 1.
    """
    q = build_metric_Q(N).entries
    t = np.arange(1, N, dtype=float)
    couplings = t / np.sqrt(q[:-1] * q[1:])
    eigenvalues = eigvalsh_tridiagonal(np.zeros(N), couplings)
    return 1.0 / np.max(np.abs(eigenvalues))


def _gamma_bisection(N: int) -> tuple[float, int]:
    """Bisection on the definiteness classification of Theta(alpha)."""
    family = tridiagonal_family(N)
    iterations = 0
    lo, hi = 0.0, 1.0
    while classify_definiteness(family.realize(hi).matrix) == "positive-definite":
        lo, hi = hi, 2.0 * hi
        iterations += 1
    while hi - lo > BISECTION_WIDTH:
        mid = 0.5 * (lo + hi)
        if classify_definiteness(family.realize(mid).matrix) == "positive-definite":
            lo = mid
        else:
            hi = mid
        iterations += 1
    return 0.5 * (lo + hi), iterations


def horizon_gamma(N: int) -> HorizonReport:
    """Locate gamma at size N by both methods and cross-check them."""
    if N < 2:
        raise ValueError("N must be at least 2")
    gamma_eig = _gamma_spectral(N)
    gamma_bis, iterations = _gamma_bisection(N)
    residual = abs(gamma_eig - gamma_bis)
    if residual > CROSS_CHECK_TOL:
        raise RuntimeError(
            f"horizon methods disagree by {residual:.3e} at N={N}"
        )
    return HorizonReport(
        dimension=N,
        gamma=gamma_eig,
        method_primary="generalized-eigenvalue",
        method_check="bisection",
        cross_check_residual=residual,
        bisection_iterations=iterations,
    )


def horizon_convergence_scan(N_values: list[int]) -> list[tuple[int, float, float | None]]:
    """gamma per N plus the successive absolute differences.

    Returns (N, gamma, diff_from_previous); the first diff is None.
    """
    rows: list[tuple[int, float, float | None]] = []
    previous = None
    for N in N_values:
        gamma = horizon_gamma(N).gamma
        rows.append((N, gamma, None if previous is None else abs(gamma - previous)))
        previous = gamma
    return rows


def hidden_horizon_scan(
    N: int, K: np.ndarray, alpha_grid: np.ndarray, label: str = "theta-inverse-K"
) -> RealityScan:
    """Scan the spectrum of Lambda(alpha) = Theta(alpha)^{-1} K for reality loss.

    Lambda(alpha) satisfies the intertwining condition with Theta(alpha) by
    construction for every alpha, so its spectrum is guaranteed real while
    Theta(alpha) is positive-definite; the first grid point where a complex
    eigenvalue appears is the observable's hidden horizon.
    """
    K = np.asarray(K, dtype=float)
    scale = max(1.0, np.max(np.abs(K)))
    if np.max(np.abs(K - K.T)) > 1e-12 * scale:
        raise ValueError("K must be symmetric")
    if K.shape != (N, N):
        raise ValueError("K has wrong shape")
    family = tridiagonal_family(N)
    alpha_grid = np.asarray(alpha_grid, dtype=float)
    threshold = REALITY_THRESHOLD * scale
    max_imag = np.full(len(alpha_grid), np.nan)
    definiteness: list[str] = []
    skipped: list[float] = []
    first_crossing = None
    for i, alpha in enumerate(alpha_grid):
        theta = family.realize(alpha)
        definiteness.append(theta.definiteness)
        if theta.definiteness == "singular" or 1.0 / np.linalg.cond(theta.matrix) < SINGULAR_RCOND:
            skipped.append(float(alpha))
            continue
        eigenvalues = np.linalg.eigvals(np.linalg.solve(theta.matrix, K))
        max_imag[i] = np.max(np.abs(eigenvalues.imag))
        if first_crossing is None and max_imag[i] > threshold:
            first_crossing = float(alpha)
    return RealityScan(
        dimension=N,
        observable_label=label,
        alpha_grid=alpha_grid,
        max_imag=max_imag,
        definiteness=definiteness,
        first_crossing=first_crossing,
        skipped_singular=skipped,
    )
