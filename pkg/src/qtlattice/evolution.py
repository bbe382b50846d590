"""Time evolution under the lattice Hamiltonian.

H is not Hermitian in the Dirac sense, so exp(-iHt) does not conserve the
usual norm; it does conserve every Theta-norm built from the metric family.
The propagator is assembled from the exactly available biorthogonal
eigensystem: H = S diag(E) S^{-1} with S^{-1} = diag(1/n_j) S^T Q.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lattice import LatticeHamiltonian, biorthogonal_system
from .metrics import MetricOperator
from .observables import dieudonne_residual

__all__ = ["EvolutionState", "propagator", "theta_norm", "norm_drift"]

COMPATIBILITY_TOL = 1e-10


@dataclass(frozen=True)
class EvolutionState:
    """A state vector at a given time."""

    dimension: int
    amplitudes: np.ndarray
    time: float = 0.0

    def __post_init__(self):
        if not np.any(self.amplitudes):
            raise ValueError("state must be nonzero")


def propagator(H: LatticeHamiltonian, t: float) -> np.ndarray:
    """exp(-i H t) via the spectral decomposition of H."""
    N = H.dimension
    if t == 0.0:
        return np.eye(N, dtype=complex)
    system = biorthogonal_system(N)
    phases = np.exp(-1j * system.eigenvalues.roots * t)
    # S^{-1} = diag(1/n_j) S^T Q, i.e. rows are ketkets^T / n_j
    S_inv = system.ketkets.T / system.q_norms[:, None]
    return (system.kets * phases[None, :]) @ S_inv


def theta_norm(theta: MetricOperator, psi: EvolutionState) -> float:
    """The squared metric norm psi^H Theta psi (real for symmetric Theta)."""
    if theta.definiteness != "positive-definite":
        raise ValueError("theta must be positive-definite to define a norm")
    v = psi.amplitudes
    return float(np.real(v.conj() @ theta.matrix @ v))


def norm_drift(
    H: LatticeHamiltonian,
    theta: MetricOperator,
    psi0: EvolutionState,
    t_grid: np.ndarray,
) -> tuple[float, float]:
    """Relative drift of the Theta-norm and the Dirac norm along t_grid.

    Returns (max_theta_drift, max_dirac_drift); the former should be at
    rounding level whenever theta intertwines with H, the latter is O(1)
    because H is not Dirac-Hermitian.
    """
    if dieudonne_residual(H.to_dense(), theta) > COMPATIBILITY_TOL:
        raise ValueError("theta does not intertwine with H; norm is not conserved")
    system = biorthogonal_system(H.dimension)
    # expand psi0 once in the eigenbasis; each time step is then a phase twist
    coefficients = (system.ketkets.T @ np.asarray(psi0.amplitudes, dtype=complex)) / system.q_norms
    v0 = np.asarray(psi0.amplitudes, dtype=complex)
    theta0 = float(np.real(v0.conj() @ theta.matrix @ v0))
    dirac0 = float(np.real(v0.conj() @ v0))
    max_theta = 0.0
    max_dirac = 0.0
    for t in np.asarray(t_grid, dtype=float):
        phases = np.exp(-1j * system.eigenvalues.roots * t)
        v = system.kets @ (phases * coefficients)
        theta_t = float(np.real(v.conj() @ theta.matrix @ v))
        dirac_t = float(np.real(v.conj() @ v))
        max_theta = max(max_theta, abs(theta_t / theta0 - 1.0))
        max_dirac = max(max_dirac, abs(dirac_t / dirac0 - 1.0))
    return max_theta, max_dirac
