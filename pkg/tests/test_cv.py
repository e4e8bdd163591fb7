import numpy as np
import pytest

from ispear.errors import TooFewSamplesError
from ispear.ml.cv import SigmoidConfig, SvmConfig, evaluate_cv, fold_seed, stratified_kfold
from ispear.ml.data import EMOTIONAL, NON_EMOTIONAL, LabeledSet, Standardizer, labeled_set_from_table


def corpus_shaped(rng, n_neg=1140, n_pos=2280):
    y = np.concatenate([np.full(n_neg, NON_EMOTIONAL), np.full(n_pos, EMOTIONAL)])
    perm = rng.permutation(y.size)
    return LabeledSet(rng.normal(size=(y.size, 1)), y[perm])


def test_fold_sizes_disjoint_exhaustive(rng):
    data = corpus_shaped(rng)
    folds = stratified_kfold(data, 10, seed=3)
    seen = np.concatenate([test for _, test in folds])
    assert np.array_equal(np.sort(seen), np.arange(len(data)))
    for train, test in folds:
        assert (data.labels[test] == NON_EMOTIONAL).sum() == 114
        assert (data.labels[test] == EMOTIONAL).sum() == 228
        assert np.intersect1d(train, test).size == 0
        assert train.size + test.size == len(data)


def test_folds_deterministic(rng):
    data = corpus_shaped(rng, 30, 50)
    a = stratified_kfold(data, 5, seed=9)
    b = stratified_kfold(data, 5, seed=9)
    c = stratified_kfold(data, 5, seed=10)
    assert all(np.array_equal(x[1], y[1]) for x, y in zip(a, b))
    assert not all(np.array_equal(x[1], y[1]) for x, y in zip(a, c))


def test_too_few_samples(rng):
    with pytest.raises(TooFewSamplesError):
        stratified_kfold(corpus_shaped(rng, 3, 20), 5)
    with pytest.raises(ValueError):
        stratified_kfold(corpus_shaped(rng, 3, 20), 1)


def test_pooled_is_sum_of_folds(rng):
    X = rng.normal(size=(90, 1))
    y = np.where(X[:, 0] + rng.normal(0, 0.7, 90) > -0.4, EMOTIONAL, NON_EMOTIONAL)
    data = LabeledSet(X, y)
    for clf in (SvmConfig(), SigmoidConfig(epochs=100)):
        rep = evaluate_cv(data, clf, k=5, seed=1)
        assert len(rep.fold_matrices) == 5
        total = sum(cm.counts for cm in rep.fold_matrices)
        assert np.array_equal(rep.pooled.counts, total)
        assert rep.pooled.total == 90
        again = evaluate_cv(data, clf, k=5, seed=1)
        assert again.pooled == rep.pooled


def test_fold_seed_distinct():
    seeds = {fold_seed(42, f) for f in range(10)}
    assert len(seeds) == 10
    assert fold_seed(42, 0) == fold_seed(42, 0)


def test_standardizer_uses_given_statistics():
    s = Standardizer.fit(np.array([[1.0], [3.0]]))
    np.testing.assert_allclose(s.transform(np.array([[2.0], [5.0]])), [[0.0], [3.0]])
    const = Standardizer.fit(np.array([[4.0], [4.0]]))
    assert np.all(np.isfinite(const.transform(np.array([[4.0]]))))


def test_labels_from_table():
    table = {"emotion": np.array(["happy", "neutral", "sad"]), "duration_samples": np.array([1.0, 2.0, 3.0])}
    data = labeled_set_from_table(table)
    assert data.labels.tolist() == [EMOTIONAL, NON_EMOTIONAL, EMOTIONAL]
    assert data.features.shape == (3, 1)
