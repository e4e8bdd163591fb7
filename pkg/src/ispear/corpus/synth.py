"""Deterministic synthetic corpus with a calibrated emotion/gender duration effect.

Every clip is silence, a speech-like burst, silence. The burst is
band-limited noise (200-3400 Hz) under a slow amplitude modulation with
10 ms raised-cosine on/off ramps. Its length in samples is

    intercept + emotion_offset + gender_offset + subject_effect + word_effect + noise

Amplitude depends only on subject and utterance gain, never on emotion, so
only the duration feature carries an emotion effect.
"""
from __future__ import annotations

import csv
import json
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path

import numpy as np

from ispear.corpus.manifest import EMOTIONS, WORDS, CorpusManifest, UtteranceRecord, write_manifest
from ispear.corpus.wavio import AudioClip, write_wav
from ispear.errors import BadConfigError

# stream ids mixed into the root seed so each random quantity is independent
_SUBJECT_STREAM, _WORD_STREAM, _RECORD_STREAM = 0, 1, 2


@dataclass(frozen=True)
class SynthConfig:
    n_subjects: int = 38
    n_words: int = 30
    sample_rate: int = 16000
    # duration model, in samples at sample_rate
    intercept_samples: float = 9331.8
    emotion_offsets: dict = field(default_factory=lambda: {"happy": 0.0, "neutral": -282.0, "sad": 32.5})
    gender_offsets: dict = field(default_factory=lambda: {"male": -1440.0, "female": 1440.0})
    subject_sd: float = 0.0
    word_sd: float = 0.0
    noise_sd: float = 200.0
    min_burst_samples: int = 800
    # amplitude model
    peak_amplitude: float = 0.5
    subject_gain_sd: float = 0.25
    utterance_gain_sd: float = 0.1
    # signal shape
    band_hz: tuple = (200.0, 3400.0)
    ramp_s: float = 0.010
    modulation_hz: float = 4.0
    modulation_depth: float = 0.5
    lead_silence_s: tuple = (0.20, 0.35)
    trail_silence_s: tuple = (0.20, 0.35)
    noise_floor: float = 5e-4

    def __post_init__(self):
        try:
            self.validate()
        except (TypeError, KeyError) as exc:
            raise BadConfigError(str(exc)) from exc

    def validate(self):
        for name in ("n_subjects", "n_words", "sample_rate", "min_burst_samples"):
            if int(getattr(self, name)) <= 0:
                raise BadConfigError(f"{name} must be positive, got {getattr(self, name)}")
        if self.n_words > len(WORDS):
            raise BadConfigError(f"n_words must be <= {len(WORDS)}, got {self.n_words}")
        for name in ("subject_sd", "word_sd", "noise_sd", "subject_gain_sd", "utterance_gain_sd",
                     "noise_floor", "ramp_s", "modulation_hz"):
            if getattr(self, name) < 0:
                raise BadConfigError(f"{name} must be non-negative, got {getattr(self, name)}")
        if not 0.0 <= self.modulation_depth < 1.0:
            raise BadConfigError("modulation_depth must lie in [0, 1)")
        if not 0.0 < self.peak_amplitude <= 1.0:
            raise BadConfigError("peak_amplitude must lie in (0, 1]")
        if set(self.emotion_offsets) != set(EMOTIONS):
            raise BadConfigError(f"emotion_offsets must have keys {EMOTIONS}")
        if set(self.gender_offsets) != {"male", "female"}:
            raise BadConfigError("gender_offsets must have keys male, female")
        lo, hi = self.band_hz
        if not 0 < lo < hi < self.sample_rate / 2:
            raise BadConfigError(f"band_hz must satisfy 0 < low < high < Nyquist, got {self.band_hz}")
        for name in ("lead_silence_s", "trail_silence_s"):
            a, b = getattr(self, name)
            if not 0 <= a <= b:
                raise BadConfigError(f"{name} must be an ordered non-negative range")

    def to_json(self) -> str:
        d = asdict(self)
        d["band_hz"] = list(self.band_hz)
        d["lead_silence_s"] = list(self.lead_silence_s)
        d["trail_silence_s"] = list(self.trail_silence_s)
        return json.dumps(d, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "SynthConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise BadConfigError(f"unknown synth config keys: {sorted(unknown)}")
        data = dict(data)
        for name in ("band_hz", "lead_silence_s", "trail_silence_s"):
            if name in data:
                data[name] = tuple(data[name])
        return cls(**data)

    @classmethod
    def from_json(cls, path) -> "SynthConfig":
        with open(path, encoding="utf-8") as fh:
            try:
                return cls.from_dict(json.load(fh))
            except json.JSONDecodeError as exc:
                raise BadConfigError(f"{path}: {exc}") from exc


def subject_roster(n_subjects: int) -> list:
    """(subject_id, gender) pairs, alternating male/female."""
    width = max(2, len(str(n_subjects)))
    return [(f"S{i + 1:0{width}d}", "male" if i % 2 == 0 else "female") for i in range(n_subjects)]


def burst_length(cfg: SynthConfig, emotion, gender, subject_effect, word_effect, noise) -> int:
    mean = cfg.intercept_samples + cfg.emotion_offsets[emotion] + cfg.gender_offsets[gender]
    return max(cfg.min_burst_samples, int(round(mean + subject_effect + word_effect + noise)))


def _band_noise(rng, n, sample_rate, band):
    white = rng.standard_normal(n)
    spec = np.fft.rfft(white)
    freqs = np.fft.rfftfreq(n, d=1.0 / sample_rate)
    spec[(freqs < band[0]) | (freqs > band[1])] = 0.0
    out = np.fft.irfft(spec, n=n)
    peak = np.abs(out).max()
    return out / peak if peak > 0 else out


def burst_signal(rng, n, cfg: SynthConfig, peak) -> np.ndarray:
    x = _band_noise(rng, n, cfg.sample_rate, cfg.band_hz)
    t = np.arange(n) / cfg.sample_rate
    phase = rng.uniform(0.0, 2.0 * np.pi)
    env = 1.0 - cfg.modulation_depth * 0.5 * (1.0 - np.cos(2.0 * np.pi * cfg.modulation_hz * t + phase))
    ramp = min(int(round(cfg.ramp_s * cfg.sample_rate)), n // 2)
    if ramp > 0:
        rc = 0.5 * (1.0 - np.cos(np.pi * (np.arange(ramp) + 0.5) / ramp))
        env[:ramp] *= rc
        env[n - ramp:] *= rc[::-1]
    return peak * env * x


def synth_clip(cfg: SynthConfig, rng, n_burst: int, peak: float) -> tuple:
    """Return (clip, burst_start) for one utterance."""
    sr = cfg.sample_rate
    lead = int(round(rng.uniform(*cfg.lead_silence_s) * sr))
    trail = int(round(rng.uniform(*cfg.trail_silence_s) * sr))
    total = lead + n_burst + trail
    x = cfg.noise_floor * rng.standard_normal(total) if cfg.noise_floor > 0 else np.zeros(total)
    x[lead:lead + n_burst] += burst_signal(rng, n_burst, cfg, peak)
    return AudioClip(np.clip(x, -1.0, 1.0), sr), lead


def synth_corpus(cfg: SynthConfig, seed: int, out_dir) -> CorpusManifest:
    """Write ``manifest.csv``, ``synth_config.json``, ``truth.csv`` and ``wav/`` under out_dir.

    ``truth.csv`` records where each burst was placed (``path,burst_start,
    burst_samples``). Output is a pure function of (cfg, seed).
    """
    out_dir = Path(out_dir)
    wav_dir = out_dir / "wav"
    wav_dir.mkdir(parents=True, exist_ok=True)
    roster = subject_roster(cfg.n_subjects)
    words = WORDS[:cfg.n_words]

    subj_effect, subj_gain = {}, {}
    for s_idx, (sid, _) in enumerate(roster):
        rng = np.random.default_rng([seed, _SUBJECT_STREAM, s_idx])
        subj_effect[sid] = rng.normal(0.0, cfg.subject_sd) if cfg.subject_sd > 0 else 0.0
        subj_gain[sid] = float(np.exp(rng.normal(0.0, cfg.subject_gain_sd)))
    word_effect = {}
    for w_idx, word in enumerate(words):
        rng = np.random.default_rng([seed, _WORD_STREAM, w_idx])
        word_effect[word] = rng.normal(0.0, cfg.word_sd) if cfg.word_sd > 0 else 0.0

    records = []
    truth = []
    idx = 0
    for sid, gender in roster:
        (wav_dir / sid).mkdir(exist_ok=True)
        for word in words:
            for emotion in EMOTIONS:
                rng = np.random.default_rng([seed, _RECORD_STREAM, idx])
                idx += 1
                noise = rng.normal(0.0, cfg.noise_sd) if cfg.noise_sd > 0 else 0.0
                n_burst = burst_length(cfg, emotion, gender, subj_effect[sid], word_effect[word], noise)
                gain = float(np.exp(rng.normal(0.0, cfg.utterance_gain_sd)))
                peak = min(0.95, cfg.peak_amplitude * subj_gain[sid] * gain)
                clip, start = synth_clip(cfg, rng, n_burst, peak)
                rel = f"wav/{sid}/{sid}_{word}_{emotion}.wav"
                write_wav(clip, out_dir / rel)
                records.append(UtteranceRecord(rel, sid, gender, word, emotion))
                truth.append((rel, start, n_burst))

    manifest = CorpusManifest(root=out_dir, records=records)
    write_manifest(manifest, out_dir / "manifest.csv")
    (out_dir / "synth_config.json").write_text(cfg.to_json(), encoding="utf-8")
    with open(out_dir / "truth.csv", "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(("path", "burst_start", "burst_samples"))
        writer.writerows(truth)
    return manifest
