"""Polynomial-kernel C-SVC trained with SMO."""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from ispear.errors import ConvergenceWarning, DimensionMismatchError
from ispear.ml._smo import compute_rho, smo_solve
from ispear.ml.data import EMOTIONAL, NON_EMOTIONAL, LabeledSet, class_weights


@dataclass(frozen=True)
class PolyKernel:
    degree: int = 3
    coef0: float = 1.0
    gamma: float | None = None  # None -> 1 / n_features

    def __post_init__(self):
        if int(self.degree) != self.degree or self.degree < 1:
            raise ValueError(f"kernel degree must be a positive integer, got {self.degree}")
        if self.gamma is not None and self.gamma <= 0:
            raise ValueError("gamma must be positive")

    def resolved_gamma(self, n_features):
        return 1.0 / n_features if self.gamma is None else float(self.gamma)

    def __call__(self, A, B, gamma):
        return (gamma * (np.asarray(A) @ np.asarray(B).T) + self.coef0) ** int(self.degree)


@dataclass(frozen=True, eq=False)
class SvmModel:
    alphas: np.ndarray
    bias: float
    support_vectors: np.ndarray
    support_labels: np.ndarray
    support_alphas: np.ndarray
    kernel: PolyKernel
    gamma: float
    C: float
    converged: bool
    n_iter: int

    def decision_function(self, X):
        X = np.atleast_2d(np.asarray(X, dtype=np.float64))
        if X.shape[1] != self.support_vectors.shape[1]:
            raise DimensionMismatchError(
                f"model expects {self.support_vectors.shape[1]} features, got {X.shape[1]}"
            )
        if self.support_vectors.shape[0] == 0:
            return np.full(X.shape[0], self.bias)
        K = self.kernel(X, self.support_vectors, self.gamma)
        return K @ (self.support_alphas * self.support_labels) + self.bias

    def predict(self, X):
        # ties at exactly zero go to the emotional (majority) class
        return np.where(self.decision_function(X) >= 0.0, EMOTIONAL, NON_EMOTIONAL)


def dual_objective(alpha, y, K):
    """Dual objective W(a) = sum(a) - 0.5 sum_ij a_i a_j y_i y_j K_ij (maximized)."""
    ay = np.asarray(alpha) * np.asarray(y)
    return float(np.sum(alpha) - 0.5 * ay @ K @ ay)


def train_svm(
    data: LabeledSet,
    kernel: PolyKernel = PolyKernel(),
    C: float = 1.0,
    tol: float = 1e-3,
    max_iter: int = 10_000_000,
    seed: int = 0,
    class_weight=None,
    backend=None,
) -> SvmModel:
    """SMO fit of the soft-margin dual.

    ``seed`` fixes the scan order used when several candidates tie in
    working-set selection. Hitting ``max_iter`` returns the current iterate
    with ``converged=False`` and a ConvergenceWarning.
    """
    if C <= 0:
        raise ValueError("C must be positive")
    data.require_both_classes()
    n = len(data)
    order = np.random.default_rng(seed).permutation(n)
    X = data.features[order]
    y = data.labels[order].astype(np.float64)
    gamma = kernel.resolved_gamma(data.n_features)
    K = kernel(X, X, gamma)
    Cvec = C * class_weights(data.labels[order], class_weight)
    alpha, G, n_iter, converged = smo_solve(K, y, Cvec, tol=tol, max_iter=max_iter, backend=backend)
    if not converged:
        warnings.warn(f"SMO stopped after {n_iter} iterations without meeting tol={tol}", ConvergenceWarning)
    rho = compute_rho(y, Cvec, alpha, G)
    alphas = np.empty(n)
    alphas[order] = alpha
    sv = alphas > 0.0
    return SvmModel(
        alphas=alphas,
        bias=-rho,
        support_vectors=data.features[sv],
        support_labels=data.labels[sv].astype(np.float64),
        support_alphas=alphas[sv],
        kernel=kernel,
        gamma=gamma,
        C=float(C),
        converged=bool(converged),
        n_iter=int(n_iter),
    )
