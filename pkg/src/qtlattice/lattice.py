"""The truncated Legendre-recurrence Hamiltonian and its biorthogonal eigensystem.

The N-site Hamiltonian H is the upper-left N x N block of the infinite
recurrence matrix: zero diagonal, superdiagonal (n+1)/(2n+1), subdiagonal
(n+1)/(2n+3).  It is real and asymmetric, but intertwined with the diagonal
positive matrix Q = diag(n + 1/2) through H^T Q = Q H, which makes it
Hermitian in the Q-weighted inner product.  Eigenvectors are columns of
Legendre values (P_0(E), ..., P_{N-1}(E)) at the roots E of P_N.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .legendre import RootSet, eval_P_table, jacobi_eigenvalues, roots_P

__all__ = [
    "LatticeHamiltonian",
    "DiagonalMetric",
    "BiorthogonalSystem",
    "build_hamiltonian",
    "build_metric_Q",
    "spectrum",
    "ket",
    "biorthogonal_system",
]

SPECTRUM_CHECK_TOL = 1e-10
EIGEN_RESIDUAL_TOL = 1e-12


@dataclass(frozen=True)
class LatticeHamiltonian:
    """Tridiagonal N x N lattice Hamiltonian with zero diagonal."""

    dimension: int
    superdiagonal: np.ndarray
    subdiagonal: np.ndarray

    def to_dense(self) -> np.ndarray:
        return np.diag(self.superdiagonal, 1) + np.diag(self.subdiagonal, -1)

    def to_json(self) -> dict:
        return {"dimension": self.dimension, "matrix": self.to_dense().tolist()}


@dataclass(frozen=True)
class DiagonalMetric:
    """Positive diagonal metric of the auxiliary space."""

    dimension: int
    entries: np.ndarray

    def to_dense(self) -> np.ndarray:
        return np.diag(self.entries)

    def to_json(self) -> dict:
        return {"dimension": self.dimension, "matrix": self.to_dense().tolist()}


@dataclass(frozen=True)
class BiorthogonalSystem:
    """Eigenvalues, kets, ketkets (Q kets) and Q-norms of the lattice model.

    kets[:, j] has components (P_0(E_j), ..., P_{N-1}(E_j)); ketkets are
    Q kets; q_norms[j] = kets[:, j]^T Q kets[:, j].  Together they resolve
    the identity: sum_j kets_j (1/q_norms_j) kets_j^T Q = I.
    """

    dimension: int
    eigenvalues: RootSet
    kets: np.ndarray
    ketkets: np.ndarray
    q_norms: np.ndarray


def build_hamiltonian(N: int) -> LatticeHamiltonian:
    """N x N truncation of the Legendre recurrence matrix."""
    if N < 1:
        raise ValueError("N must be positive")
    n = np.arange(N - 1, dtype=float)
    return LatticeHamiltonian(
        dimension=N,
        superdiagonal=(n + 1) / (2 * n + 1),
        subdiagonal=(n + 1) / (2 * n + 3),
    )


def build_metric_Q(N: int) -> DiagonalMetric:
    """The diagonal intertwiner of H, normalized to Q_00 = 1/2.

    Defined as the unique positive diagonal solution of H^T Q = Q H: the
    ratio condition q_{n+1}/q_n = (2n+3)/(2n+1) gives q_n = n + 1/2.
    """
    if N < 1:
        raise ValueError("N must be positive")
    return DiagonalMetric(N, np.arange(N) + 0.5)


def spectrum(H: LatticeHamiltonian) -> RootSet:
    """Eigenvalues of H via the symmetric similarity transform.

    h = Q^(1/2) H Q^(-1/2) is symmetric tridiagonal with couplings
    sqrt(superdiag * subdiag); its eigenvalues are cross-checked against the
    independently computed roots of P_N.
    """
    N = H.dimension
    values = jacobi_eigenvalues(N)
    # enforce the exact antisymmetry of the spectrum (shared RootSet invariant)
    values = 0.5 * (values - values[::-1])
    if N % 2 == 1:
        values[N // 2] = 0.0
    reference = roots_P(N).roots
    disagreement = np.max(np.abs(values - reference))
    if disagreement > SPECTRUM_CHECK_TOL:
        raise RuntimeError(
            f"eigensolve and polynomial roots disagree by {disagreement:.3e}"
        )
    return RootSet(N, values)


def ket(N: int, E: float) -> np.ndarray:
    """The length-N Legendre column (P_0(E), ..., P_{N-1}(E))."""
    if N < 1:
        raise ValueError("N must be positive")
    return eval_P_table(N - 1, E).values.copy()


def biorthogonal_system(N: int) -> BiorthogonalSystem:
    """Assemble and validate the full biorthogonal eigensystem at size N."""
    H = build_hamiltonian(N)
    Q = build_metric_Q(N)
    eigenvalues = spectrum(H)
    kets = np.column_stack([ket(N, E) for E in eigenvalues.roots])
    ketkets = Q.entries[:, None] * kets
    q_norms = np.einsum("ij,ij->j", kets, ketkets)

    Hd = H.to_dense()
    residual = np.max(np.abs(Hd @ kets - kets * eigenvalues.roots[None, :]))
    if residual > EIGEN_RESIDUAL_TOL:
        raise RuntimeError(f"eigenvector residual {residual:.3e} exceeds tolerance")
    gram = kets.T @ ketkets
    off = gram - np.diag(np.diag(gram))
    if np.max(np.abs(off)) > 1e-12 * np.max(q_norms):
        raise RuntimeError("biorthogonality violated")
    return BiorthogonalSystem(N, eigenvalues, kets, ketkets, q_norms)
