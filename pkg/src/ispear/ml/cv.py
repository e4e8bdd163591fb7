"""Stratified k-fold cross-validation of the emotional / non-emotional classifiers."""
from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field

import numpy as np

from ispear.errors import IspearError, TooFewSamplesError
from ispear.ml.data import EMOTIONAL, NON_EMOTIONAL, LabeledSet, Standardizer
from ispear.ml.metrics import ConfusionMatrix, confusion_metrics
from ispear.ml.sigmoid import train_sigmoid
from ispear.ml.svm import PolyKernel, train_svm

log = logging.getLogger(__name__)


def stratified_kfold(data: LabeledSet, k: int = 10, seed: int = 0) -> list:
    """(train_idx, test_idx) pairs; each class is shuffled and split into k near-equal parts."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    rng = np.random.default_rng(seed)
    test_parts = [[] for _ in range(k)]
    for cls in (NON_EMOTIONAL, EMOTIONAL):
        idx = np.flatnonzero(data.labels == cls)
        if idx.size < k:
            raise TooFewSamplesError(f"class {cls:+d} has {idx.size} samples, fewer than k={k}")
        for f, chunk in enumerate(np.array_split(rng.permutation(idx), k)):
            test_parts[f].append(chunk)
    all_idx = np.arange(len(data))
    folds = []
    for parts in test_parts:
        test = np.sort(np.concatenate(parts))
        train = np.setdiff1d(all_idx, test, assume_unique=True)
        folds.append((train, test))
    return folds


@dataclass(frozen=True)
class SvmConfig:
    degree: int = 3
    coef0: float = 1.0
    gamma: float | None = None
    C: float = 1.0
    tol: float = 1e-3
    max_iter: int = 10_000_000
    class_weight: str | None = None

    name = "svm"

    def train(self, data, seed):
        kernel = PolyKernel(self.degree, self.coef0, self.gamma)
        return train_svm(data, kernel, self.C, self.tol, self.max_iter, seed=seed,
                         class_weight=self.class_weight)


@dataclass(frozen=True)
class SigmoidConfig:
    learning_rate: float = 0.1
    epochs: int = 1000
    class_weight: str | None = None

    name = "sigmoid"

    def train(self, data, seed):
        return train_sigmoid(data, self.learning_rate, self.epochs, seed=seed,
                             class_weight=self.class_weight)


def fold_seed(root_seed: int, fold: int) -> int:
    return int(np.random.SeedSequence([root_seed, fold]).generate_state(1)[0])


@dataclass
class EvalReport:
    classifier: str
    params: dict
    k: int
    seed: int
    fold_matrices: list = field(default_factory=list)
    fold_errors: list = field(default_factory=list)  # (fold index, message)

    @property
    def pooled(self) -> ConfusionMatrix:
        out = ConfusionMatrix(np.zeros((2, 2)))
        for cm in self.fold_matrices:
            out = out + cm
        return out

    @property
    def metrics(self):
        return confusion_metrics(self.pooled)

    @property
    def accuracy(self) -> float:
        return self.metrics.accuracy

    @property
    def mean_fold_accuracy(self) -> float:
        return float(np.mean([confusion_metrics(cm).accuracy for cm in self.fold_matrices]))


def evaluate_cv(data: LabeledSet, classifier, k: int = 10, seed: int = 42, standardize: bool = True) -> EvalReport:
    """Train on each training split, test on the held-out split, pool the counts.

    Standardization statistics come from the training split only. Fold ``f``
    trains with seed ``fold_seed(seed, f)``.
    """
    folds = stratified_kfold(data, k, seed)
    report = EvalReport(classifier.name, asdict(classifier), k, seed)
    for f, (train_idx, test_idx) in enumerate(folds):
        train, test = data.subset(train_idx), data.subset(test_idx)
        if standardize:
            scaler = Standardizer.fit(train.features)
            train, test = scaler.apply(train), scaler.apply(test)
        try:
            model = classifier.train(train, fold_seed(seed, f))
        except IspearError as exc:
            log.warning("fold %d: %s", f, exc)
            report.fold_errors.append((f, str(exc)))
            continue
        report.fold_matrices.append(ConfusionMatrix.from_labels(test.labels, model.predict(test.features)))
    if not report.fold_matrices:
        raise IspearError(f"{classifier.name}: training failed in every fold")
    return report
