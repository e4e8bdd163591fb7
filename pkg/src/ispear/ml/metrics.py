"""Confusion matrices and the per-class metrics of the published results table.

The published table labels a class's *precision* as diagonal / row total
(rows = actual class) and its *recall* as diagonal / column total (columns =
predicted class), which is the transpose of the textbook convention. Both
are reported: ``table_precision`` / ``table_recall`` reproduce the table,
``precision`` / ``recall`` follow the standard definitions.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ispear.errors import EmptyMatrixError
from ispear.ml.data import CLASS_NAMES, EMOTIONAL


@dataclass(frozen=True, eq=False)
class ConfusionMatrix:
    """counts[actual][predicted], index 0 = non-emotional, 1 = emotional."""

    counts: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.counts, dtype=np.int64).reshape(2, 2)
        if np.any(c < 0):
            raise ValueError("confusion counts must be non-negative")
        object.__setattr__(self, "counts", c)

    @classmethod
    def from_labels(cls, actual, predicted):
        a = (np.asarray(actual) == EMOTIONAL).astype(np.int64)
        p = (np.asarray(predicted) == EMOTIONAL).astype(np.int64)
        counts = np.zeros((2, 2), dtype=np.int64)
        np.add.at(counts, (a, p), 1)
        return cls(counts)

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    def __add__(self, other):
        return ConfusionMatrix(self.counts + other.counts)

    def __eq__(self, other):
        return isinstance(other, ConfusionMatrix) and np.array_equal(self.counts, other.counts)


@dataclass(frozen=True)
class ClassMetrics:
    name: str
    tp_row: int  # diagonal count
    fp_row: int  # off-diagonal count in this actual-class row
    table_precision: float | None
    table_recall: float | None
    precision: float | None
    recall: float | None


@dataclass(frozen=True)
class ConfusionMetrics:
    accuracy: float
    classes: tuple

    def __getitem__(self, name) -> ClassMetrics:
        for c in self.classes:
            if c.name == name:
                return c
        raise KeyError(name)


def _ratio(num, den):
    return None if den == 0 else num / den


def confusion_metrics(cm: ConfusionMatrix) -> ConfusionMetrics:
    """Accuracy and per-class metrics; undefined ratios (0/0) are None."""
    c = cm.counts
    total = cm.total
    if total == 0:
        raise EmptyMatrixError("confusion matrix is empty")
    rows = c.sum(axis=1)
    cols = c.sum(axis=0)
    classes = []
    for k, name in enumerate(CLASS_NAMES):
        diag = int(c[k, k])
        classes.append(ClassMetrics(
            name=name,
            tp_row=diag,
            fp_row=int(rows[k] - diag),
            table_precision=_ratio(diag, rows[k]),
            table_recall=_ratio(diag, cols[k]),
            precision=_ratio(diag, cols[k]),
            recall=_ratio(diag, rows[k]),
        ))
    return ConfusionMetrics(float(np.trace(c)) / total, tuple(classes))


def pct(value, digits=1) -> str:
    return "-" if value is None else f"{100.0 * value:.{digits}f}%"
