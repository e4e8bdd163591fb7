import csv
import filecmp
import json
import math
from pathlib import Path

import numpy as np
import pytest

from ispear.corpus import SynthConfig, load_manifest, read_wav, synth_corpus
from ispear.corpus.synth import subject_roster
from ispear.errors import BadConfigError

ROOT = Path(__file__).resolve().parents[1]


def _tree(root):
    return sorted(p.relative_to(root).as_posix() for p in Path(root).rglob("*") if p.is_file())


def _truth(root):
    with open(Path(root) / "truth.csv", newline="") as fh:
        return {r["path"]: (int(r["burst_start"]), int(r["burst_samples"])) for r in csv.DictReader(fh)}


def test_small_corpus_shape(small_corpus):
    root, manifest, cfg = small_corpus
    assert len(manifest) == 4 * 5 * 3
    loaded = load_manifest(root / "manifest.csv", strict_shape=True)
    assert [r.key for r in loaded.records] == [r.key for r in manifest.records]
    assert {r.gender for r in loaded.records} == {"male", "female"}


def test_roster_balanced():
    genders = [g for _, g in subject_roster(38)]
    assert genders.count("male") == genders.count("female") == 19


def test_deterministic(tmp_path):
    cfg = SynthConfig(n_subjects=2, n_words=2)
    a, b = tmp_path / "a", tmp_path / "b"
    synth_corpus(cfg, 11, a)
    synth_corpus(cfg, 11, b)
    files = _tree(a)
    assert files == _tree(b)
    match, mismatch, errors = filecmp.cmpfiles(a, b, files, shallow=False)
    assert not mismatch and not errors


def test_seed_changes_audio_not_schema(tmp_path):
    cfg = SynthConfig(n_subjects=2, n_words=2)
    synth_corpus(cfg, 1, tmp_path / "a")
    synth_corpus(cfg, 2, tmp_path / "b")
    assert (tmp_path / "a/manifest.csv").read_bytes() == (tmp_path / "b/manifest.csv").read_bytes()
    wav = "wav/S01/S01_perut_happy.wav"
    assert (tmp_path / "a" / wav).read_bytes() != (tmp_path / "b" / wav).read_bytes()


def test_noiseless_bursts_have_intercept_length(tmp_path):
    cfg = SynthConfig(
        n_subjects=2, n_words=3, intercept_samples=7000.0,
        emotion_offsets={"happy": 0.0, "neutral": 0.0, "sad": 0.0},
        gender_offsets={"male": 0.0, "female": 0.0},
        noise_sd=0.0, noise_floor=0.0,
    )
    m = synth_corpus(cfg, 3, tmp_path)
    truth = _truth(tmp_path)
    for rec in m.records:
        assert truth[rec.path][1] == 7000
        # independent check on the audio: span of non-silent samples
        x = read_wav(m.resolve(rec)).samples
        nz = np.flatnonzero(np.abs(x) > 0)
        span = nz[-1] - nz[0] + 1
        assert abs(span - 7000) <= 160


def test_truth_gender_means_match_configuration(small_corpus):
    root, manifest, cfg = small_corpus
    truth = _truth(root)
    for gender in ("male", "female"):
        lengths = np.array([truth[r.path][1] for r in manifest.records if r.gender == gender], float)
        emotions = [r.emotion for r in manifest.records if r.gender == gender]
        expected = np.mean([cfg.intercept_samples + cfg.gender_offsets[gender] + cfg.emotion_offsets[e]
                            for e in emotions])
        se = lengths.std(ddof=1) / math.sqrt(lengths.size)
        assert abs(lengths.mean() - expected) <= 2 * se + 0.5


@pytest.mark.parametrize("kwargs", [
    {"n_subjects": 0},
    {"n_words": -1},
    {"n_words": 31},
    {"noise_sd": -1.0},
    {"subject_sd": -0.5},
    {"peak_amplitude": 0.0},
    {"emotion_offsets": {"happy": 0.0}},
    {"band_hz": (3000.0, 200.0)},
])
def test_bad_config(kwargs):
    with pytest.raises(BadConfigError):
        SynthConfig(**kwargs)


def test_config_json_roundtrip(tmp_path):
    cfg = SynthConfig(noise_sd=50.0, band_hz=(300.0, 3000.0))
    p = tmp_path / "c.json"
    p.write_text(cfg.to_json())
    assert SynthConfig.from_json(p) == cfg


def test_unknown_config_key():
    with pytest.raises(BadConfigError, match="unknown"):
        SynthConfig.from_dict({"n_subject": 3})


def test_shipped_default_config_matches_code():
    shipped = json.loads((ROOT / "configs" / "synth_default.json").read_text())
    assert SynthConfig.from_dict(shipped) == SynthConfig()
