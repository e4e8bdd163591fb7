"""Single sigmoid neuron (logistic regression) trained by full-batch gradient descent."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ispear.errors import DimensionMismatchError, DivergedLossError
from ispear.ml.data import EMOTIONAL, NON_EMOTIONAL, LabeledSet, class_weights


def sigmoid(z):
    return 0.5 * (1.0 + np.tanh(0.5 * np.asarray(z, dtype=np.float64)))


def loss_and_grad(w, b, X, t, sample_weight=None):
    """Weighted mean cross-entropy and its gradient; ``t`` holds 0/1 targets."""
    X = np.asarray(X, dtype=np.float64)
    t = np.asarray(t, dtype=np.float64)
    sw = np.ones(t.size) if sample_weight is None else np.asarray(sample_weight, dtype=np.float64)
    z = X @ w + b
    # log(1 + e^z) - t z, stable for large |z|
    loss = float(np.sum(sw * (np.logaddexp(0.0, z) - t * z)) / sw.sum())
    r = sw * (sigmoid(z) - t) / sw.sum()
    return loss, X.T @ r, float(r.sum())


@dataclass(frozen=True, eq=False)
class SigmoidModel:
    weights: np.ndarray
    bias: float
    threshold: float = 0.5
    final_loss: float = float("nan")

    def predict_proba(self, X):
        X = np.atleast_2d(np.asarray(X, dtype=np.float64))
        if X.shape[1] != self.weights.size:
            raise DimensionMismatchError(f"model expects {self.weights.size} features, got {X.shape[1]}")
        return sigmoid(X @ self.weights + self.bias)

    def predict(self, X):
        return np.where(self.predict_proba(X) >= self.threshold, EMOTIONAL, NON_EMOTIONAL)


def train_sigmoid(
    data: LabeledSet,
    learning_rate: float = 0.1,
    epochs: int = 1000,
    seed: int = 0,
    class_weight=None,
) -> SigmoidModel:
    data.require_both_classes()
    rng = np.random.default_rng(seed)
    w = rng.uniform(-0.01, 0.01, size=data.n_features)
    b = float(rng.uniform(-0.01, 0.01))
    t = (data.labels == EMOTIONAL).astype(np.float64)
    sw = class_weights(data.labels, class_weight)
    loss = float("nan")
    # overflow is detected through the loss below, so numpy's warnings are noise
    with np.errstate(over="ignore", invalid="ignore"):
        for _ in range(int(epochs)):
            loss, gw, gb = loss_and_grad(w, b, data.features, t, sw)
            if not np.isfinite(loss):
                raise DivergedLossError(f"loss became {loss}; lower the learning rate")
            w = w - learning_rate * gw
            b = b - learning_rate * gb
        loss, _, _ = loss_and_grad(w, b, data.features, t, sw)
    if not (np.isfinite(loss) and np.all(np.isfinite(w)) and np.isfinite(b)):
        raise DivergedLossError("parameters diverged")
    return SigmoidModel(w, b, 0.5, loss)
