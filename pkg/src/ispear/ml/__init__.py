"""Emotional vs non-emotional classifiers, cross-validation and table metrics."""
import numpy as np

from ispear.ml.cv import EvalReport, SigmoidConfig, SvmConfig, evaluate_cv, stratified_kfold
from ispear.ml.data import (
    CLASS_NAMES,
    EMOTIONAL,
    NON_EMOTIONAL,
    LabeledSet,
    Standardizer,
    labeled_set_from_table,
)
from ispear.ml.metrics import ConfusionMatrix, ConfusionMetrics, confusion_metrics
from ispear.ml.sigmoid import SigmoidModel, loss_and_grad, train_sigmoid
from ispear.ml.svm import PolyKernel, SvmModel, dual_objective, train_svm


def predict(model, x):
    """Class label(s) for one feature vector or a matrix of them."""
    x = np.asarray(x, dtype=float)
    single = x.ndim <= 1
    out = model.predict(x.reshape(1, -1) if single else x)
    return int(out[0]) if single else out


__all__ = [
    "EvalReport",
    "SigmoidConfig",
    "SvmConfig",
    "evaluate_cv",
    "stratified_kfold",
    "CLASS_NAMES",
    "EMOTIONAL",
    "NON_EMOTIONAL",
    "LabeledSet",
    "Standardizer",
    "labeled_set_from_table",
    "ConfusionMatrix",
    "ConfusionMetrics",
    "confusion_metrics",
    "SigmoidModel",
    "loss_and_grad",
    "train_sigmoid",
    "PolyKernel",
    "SvmModel",
    "dual_objective",
    "train_svm",
    "predict",
]
