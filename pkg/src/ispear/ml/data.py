from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ispear.errors import BothClassesRequiredError

EMOTIONAL = 1
NON_EMOTIONAL = -1
# confusion-matrix index order, matching the published table layout
CLASS_NAMES = ("non_emotional", "emotional")
EMOTION_TO_LABEL = {"happy": EMOTIONAL, "sad": EMOTIONAL, "neutral": NON_EMOTIONAL}


@dataclass(frozen=True, eq=False)
class LabeledSet:
    """n x d features with labels in {+1 emotional, -1 non-emotional}."""

    features: np.ndarray
    labels: np.ndarray

    def __post_init__(self):
        X = np.asarray(self.features, dtype=np.float64)
        if X.ndim == 1:
            X = X[:, None]
        y = np.asarray(self.labels).astype(np.int64).ravel()
        if X.ndim != 2 or X.shape[0] == 0:
            raise ValueError("features must be a non-empty n x d matrix")
        if X.shape[0] != y.size:
            raise ValueError(f"{X.shape[0]} feature rows but {y.size} labels")
        if not np.all(np.isfinite(X)):
            raise ValueError("features contain non-finite values")
        if not np.all((y == EMOTIONAL) | (y == NON_EMOTIONAL)):
            raise ValueError("labels must be +1 (emotional) or -1 (non-emotional)")
        object.__setattr__(self, "features", X)
        object.__setattr__(self, "labels", y)

    def __len__(self):
        return self.labels.size

    @property
    def n_features(self):
        return self.features.shape[1]

    def subset(self, idx) -> "LabeledSet":
        return LabeledSet(self.features[idx], self.labels[idx])

    def require_both_classes(self):
        if not (np.any(self.labels == EMOTIONAL) and np.any(self.labels == NON_EMOTIONAL)):
            raise BothClassesRequiredError("training data must contain both classes")


def labeled_set_from_table(table, columns=("duration_samples",)) -> LabeledSet:
    """Map happy/sad to emotional and neutral to non-emotional."""
    X = np.column_stack([np.asarray(table[c], dtype=np.float64) for c in columns])
    labels = np.array([EMOTION_TO_LABEL[str(e)] for e in table["emotion"]])
    return LabeledSet(X, labels)


@dataclass(frozen=True, eq=False)
class Standardizer:
    mean: np.ndarray
    scale: np.ndarray

    @classmethod
    def fit(cls, X):
        X = np.asarray(X, dtype=np.float64)
        sd = X.std(axis=0)
        return cls(X.mean(axis=0), np.where(sd > 0, sd, 1.0))

    def transform(self, X):
        return (np.asarray(X, dtype=np.float64) - self.mean) / self.scale

    def apply(self, data: LabeledSet) -> LabeledSet:
        return LabeledSet(self.transform(data.features), data.labels)


def class_weights(labels, mode):
    """Per-sample weights; ``mode='balanced'`` gives n / (2 n_class)."""
    labels = np.asarray(labels)
    if mode is None:
        return np.ones(labels.size)
    if mode != "balanced":
        raise ValueError(f"class_weight must be None or 'balanced', got {mode!r}")
    w = np.empty(labels.size)
    for cls in (EMOTIONAL, NON_EMOTIONAL):
        mask = labels == cls
        w[mask] = labels.size / (2.0 * mask.sum()) if mask.any() else 1.0
    return w
