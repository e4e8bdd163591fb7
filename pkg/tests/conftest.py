import numpy as np
import pytest

from ispear.corpus import SynthConfig, synth_corpus


@pytest.fixture
def rng():
    return np.random.default_rng(20171108)


@pytest.fixture(scope="session")
def small_corpus(tmp_path_factory):
    """4 subjects x 5 words x 3 emotions, default calibration."""
    out = tmp_path_factory.mktemp("small_corpus")
    cfg = SynthConfig(n_subjects=4, n_words=5)
    manifest = synth_corpus(cfg, 7, out)
    return out, manifest, cfg
