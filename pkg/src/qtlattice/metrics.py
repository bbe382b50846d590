"""Physical metrics for the lattice model and their charge operators.

Every metric Theta making H quasi-Hermitian is a positive combination of
ketket projectors, Theta = sum_j (Q psi_j) kappa_j (Q psi_j)^T, with free
weights kappa_j > 0.  The exceptional weights kappa_j = 1/n_j collapse
Theta back onto the diagonal Q (trivial charge).  A one-parameter
tridiagonal slice of the family, Theta(alpha) = Q + alpha T with couplings
t_n = n + 1, is the unique tridiagonal solution of the intertwining
relation with diagonal part Q and t_0 = 1 (verified exactly in the
exact_oracle module).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lattice import BiorthogonalSystem, DiagonalMetric, build_hamiltonian, build_metric_Q

__all__ = [
    "KappaVector",
    "MetricOperator",
    "ChargeOperator",
    "TridiagonalMetricFamily",
    "metric_from_kappa",
    "exceptional_kappa",
    "charge_operator",
    "kappa_from_metric",
    "tridiagonal_metric",
    "tridiagonal_family",
    "is_positive_definite",
    "classify_definiteness",
]

SYMMETRY_TOL = 1e-12
PIVOT_TOL = 1e-12
MEMBERSHIP_TOL = 1e-9


@dataclass(frozen=True)
class KappaVector:
    """Weights selecting one metric out of the quasi-Hermitian family."""

    dimension: int
    values: np.ndarray

    def __post_init__(self):
        if len(self.values) != self.dimension:
            raise ValueError("kappa length does not match dimension")


@dataclass(frozen=True)
class MetricOperator:
    """A symmetric candidate metric with an honest definiteness label."""

    dimension: int
    matrix: np.ndarray
    definiteness: str  # positive-definite | singular | indefinite
    provenance: str  # diagonal-Q | kappa-family | tridiagonal-family | external

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "matrix": self.matrix.tolist(),
            "definiteness": self.definiteness,
            "provenance": self.provenance,
        }

    @classmethod
    def from_matrix(cls, matrix: np.ndarray, provenance: str = "external") -> "MetricOperator":
        matrix = np.asarray(matrix, dtype=float)
        return cls(matrix.shape[0], matrix, classify_definiteness(matrix), provenance)


@dataclass(frozen=True)
class ChargeOperator:
    """The factor C in the decomposition Theta = Q C."""

    dimension: int
    matrix: np.ndarray

    def to_json(self) -> dict:
        return {"dimension": self.dimension, "matrix": self.matrix.tolist()}


@dataclass(frozen=True)
class TridiagonalMetricFamily:
    """The line Theta(alpha) = diag + alpha T inside the metric family."""

    dimension: int
    diagonal: np.ndarray
    coupling_base: np.ndarray  # t_n = n + 1, normalized t_0 = 1

    def coupling_matrix(self) -> np.ndarray:
        return np.diag(self.coupling_base, 1) + np.diag(self.coupling_base, -1)

    def realize(self, alpha: float) -> MetricOperator:
        matrix = np.diag(self.diagonal) + alpha * self.coupling_matrix()
        return MetricOperator(
            self.dimension, matrix, classify_definiteness(matrix), "tridiagonal-family"
        )


def _require_symmetric(matrix: np.ndarray, tol: float = SYMMETRY_TOL) -> None:
    scale = max(1.0, np.max(np.abs(matrix)))
    if np.max(np.abs(matrix - matrix.T)) > tol * scale:
        raise ValueError("matrix is not symmetric within tolerance")


def classify_definiteness(matrix: np.ndarray) -> str:
    """Classify a symmetric matrix as positive-definite, singular or indefinite.

    Symmetric elimination with pivot threshold 1e-12 * max|Theta|; a pivot
    inside the threshold band falls back to an eigenvalue tie-breaker.
    """
    matrix = np.asarray(matrix, dtype=float)
    _require_symmetric(matrix)
    threshold = PIVOT_TOL * max(1.0, np.max(np.abs(matrix)))
    a = matrix.copy()
    n = a.shape[0]
    for k in range(n):
        pivot = a[k, k]
        if pivot <= threshold:
            break
        a[k + 1 :, k + 1 :] -= np.outer(a[k + 1 :, k], a[k + 1 :, k]) / pivot
    else:
        return "positive-definite"
    eigenvalues = np.linalg.eigvalsh(matrix)
    smallest = eigenvalues[0]
    if abs(smallest) <= threshold:
        return "singular"
    return "positive-definite" if smallest > 0 else "indefinite"


def is_positive_definite(theta: MetricOperator) -> str:
    """Definiteness classification of a metric operator."""
    return classify_definiteness(theta.matrix)


def metric_from_kappa(
    system: BiorthogonalSystem, kappa: KappaVector, strict: bool = True
) -> MetricOperator:
    """Theta = sum_j (Q psi_j) kappa_j (Q psi_j)^T.

    With all kappa_j > 0 this is positive-definite by construction.  The
    relaxed mode (strict=False) admits arbitrary signs so positivity-loss
    experiments can cross the boundary; the definiteness label stays honest.
    """
    if kappa.dimension != system.dimension:
        raise ValueError("kappa dimension does not match system")
    if strict and np.any(kappa.values <= 0):
        raise ValueError("kappa must be strictly positive in strict mode")
    matrix = (system.ketkets * kappa.values[None, :]) @ system.ketkets.T
    matrix = 0.5 * (matrix + matrix.T)
    return MetricOperator(
        system.dimension, matrix, classify_definiteness(matrix), "kappa-family"
    )


def exceptional_kappa(system: BiorthogonalSystem) -> KappaVector:
    """The weights kappa_j = 1/n_j at which the metric collapses onto Q."""
    return KappaVector(system.dimension, 1.0 / system.q_norms)


def charge_operator(Q: DiagonalMetric, theta: MetricOperator) -> ChargeOperator:
    """C = Q^{-1} Theta, the charge-like factor in Theta = Q C."""
    if Q.dimension != theta.dimension:
        raise ValueError("dimension mismatch between Q and theta")
    return ChargeOperator(theta.dimension, theta.matrix / Q.entries[:, None])


def _dieudonne_residual(matrix: np.ndarray, N: int) -> float:
    H = build_hamiltonian(N).to_dense()
    return float(np.max(np.abs(H.T @ matrix - matrix @ H)))


def kappa_from_metric(system: BiorthogonalSystem, theta: MetricOperator) -> KappaVector:
    """Recover the weights of a family member: kappa_j = psi_j^T Theta psi_j / n_j^2.

    Rejects matrices outside the family (intertwining residual too large),
    for which the projection would be meaningless.
    """
    if theta.dimension != system.dimension:
        raise ValueError("dimension mismatch")
    scale = max(1.0, float(np.max(np.abs(theta.matrix))))
    if _dieudonne_residual(theta.matrix, system.dimension) > MEMBERSHIP_TOL * scale:
        raise ValueError("matrix does not intertwine with H: not in the metric family")
    quad = np.einsum("ij,ik,kj->j", system.kets, theta.matrix, system.kets)
    return KappaVector(system.dimension, quad / system.q_norms**2)


def tridiagonal_family(N: int) -> TridiagonalMetricFamily:
    """The tridiagonal metric line at size N (couplings t_n = n + 1)."""
    if N < 2:
        raise ValueError("N must be at least 2")
    Q = build_metric_Q(N)
    return TridiagonalMetricFamily(N, Q.entries, np.arange(1, N, dtype=float))


def tridiagonal_metric(N: int, alpha: float) -> MetricOperator:
    """Theta(alpha) = Q + alpha T for the unique tridiagonal-ansatz couplings."""
    return tridiagonal_family(N).realize(alpha)
