import numpy as np
import pytest

from ispear.errors import BothClassesRequiredError, DimensionMismatchError, DivergedLossError
from ispear.ml.data import EMOTIONAL, LabeledSet
from ispear.ml.sigmoid import SigmoidModel, loss_and_grad, sigmoid, train_sigmoid


def finite_difference(w, b, X, t, sw, eps=1e-5):
    f = lambda w_, b_: loss_and_grad(w_, b_, X, t, sw)[0]  # noqa: E731
    gw = np.empty_like(w)
    for k in range(w.size):
        e = np.zeros_like(w)
        e[k] = eps
        gw[k] = (f(w + e, b) - f(w - e, b)) / (2 * eps)
    gb = (f(w, b + eps) - f(w, b - eps)) / (2 * eps)
    return gw, gb


def max_relative_error(a, b):
    return float(np.max(np.abs(a - b) / np.maximum(1e-8, np.abs(a) + np.abs(b))))


def test_gradient_matches_finite_differences(rng):
    worst = 0.0
    for _ in range(100):
        n, d = int(rng.integers(1, 40)), int(rng.integers(1, 6))
        X = rng.normal(size=(n, d))
        t = rng.integers(0, 2, n).astype(float)
        w, b = rng.normal(size=d), float(rng.normal())
        sw = rng.uniform(0.5, 2.0, n) if rng.random() < 0.5 else None
        _, gw, gb = loss_and_grad(w, b, X, t, sw)
        fw, fb = finite_difference(w, b, X, t, sw)
        worst = max(worst, max_relative_error(np.append(gw, gb), np.append(fw, fb)))
    assert worst < 1e-5


def test_sigmoid_stable_and_symmetric():
    z = np.array([-800.0, -5.0, 0.0, 5.0, 800.0])
    s = sigmoid(z)
    assert np.all(np.isfinite(s))
    np.testing.assert_allclose(s + sigmoid(-z), 1.0)
    assert s[2] == 0.5


def test_loss_at_zero_is_log2():
    X = np.ones((4, 2))
    loss, _, _ = loss_and_grad(np.zeros(2), 0.0, X, np.array([0, 1, 0, 1.0]))
    assert loss == pytest.approx(np.log(2.0))


def test_zero_model_predicts_emotional():
    model = SigmoidModel(np.zeros(3), 0.0)
    assert np.all(model.predict(np.random.default_rng(0).normal(size=(5, 3))) == EMOTIONAL)


def test_separable_reaches_full_accuracy(rng):
    X = np.concatenate([rng.normal(-2, 0.5, 50), rng.normal(2, 0.5, 50)])[:, None]
    y = np.repeat([-1, 1], 50)
    model = train_sigmoid(LabeledSet(X, y), learning_rate=0.5, epochs=2000)
    assert np.array_equal(model.predict(X), y)


def test_deterministic(rng):
    X = rng.normal(size=(30, 2))
    y = np.where(X[:, 1] > 0, 1, -1)
    a = train_sigmoid(LabeledSet(X, y), epochs=50, seed=5)
    b = train_sigmoid(LabeledSet(X, y), epochs=50, seed=5)
    assert np.array_equal(a.weights, b.weights) and a.bias == b.bias


def test_divergence_detected():
    X = np.array([[1e200], [1e200]])
    with pytest.raises(DivergedLossError):
        train_sigmoid(LabeledSet(X, np.array([1, -1])), learning_rate=1e200, epochs=5)


def test_errors():
    with pytest.raises(BothClassesRequiredError):
        train_sigmoid(LabeledSet(np.zeros((2, 1)), np.array([-1, -1])))
    with pytest.raises(DimensionMismatchError):
        SigmoidModel(np.zeros(2), 0.0).predict(np.zeros((1, 3)))
