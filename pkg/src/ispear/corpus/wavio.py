"""Mono 16-bit PCM WAV reading and writing."""
from __future__ import annotations

import os
import wave
from dataclasses import dataclass

import numpy as np

from ispear.errors import BadFormatError, EmptyAudioError

READ_SCALE = 32768.0
WRITE_SCALE = 32767.0


@dataclass(frozen=True, eq=False)
class AudioClip:
    """Normalized mono samples in [-1, 1] plus the sample rate in Hz."""

    samples: np.ndarray
    sample_rate: int

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=np.float64)
        if samples.ndim != 1:
            raise ValueError("AudioClip samples must be one-dimensional")
        if int(self.sample_rate) <= 0:
            raise ValueError(f"sample_rate must be positive, got {self.sample_rate}")
        if samples.size and (np.abs(samples).max() > 1.0 or not np.all(np.isfinite(samples))):
            raise ValueError("AudioClip samples must be finite and lie in [-1, 1]")
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "sample_rate", int(self.sample_rate))

    def __len__(self):
        return self.samples.size

    @property
    def duration(self) -> float:
        return self.samples.size / self.sample_rate


def read_wav(path) -> AudioClip:
    """Load a mono 16-bit PCM file; integer samples are divided by 32768.

    Raises FileNotFoundError if ``path`` does not exist, BadFormatError for
    anything other than mono 16-bit PCM, EmptyAudioError for zero samples.
    """
    path = os.fspath(path)
    if not os.path.exists(path):
        raise FileNotFoundError(path)
    try:
        with wave.open(path, "rb") as wf:
            n_channels = wf.getnchannels()
            width = wf.getsampwidth()
            rate = wf.getframerate()
            n_frames = wf.getnframes()
            raw = wf.readframes(n_frames)
    except (wave.Error, EOFError) as exc:
        raise BadFormatError(f"{path}: {exc}") from exc
    if n_channels != 1:
        raise BadFormatError(f"{path}: expected mono, found {n_channels} channels")
    if width != 2:
        raise BadFormatError(f"{path}: expected 16-bit samples, found {8 * width}-bit")
    if rate <= 0:
        raise BadFormatError(f"{path}: invalid sample rate {rate}")
    ints = np.frombuffer(raw, dtype="<i2")
    if ints.size == 0:
        raise EmptyAudioError(path)
    return AudioClip(ints.astype(np.float64) / READ_SCALE, rate)


def quantize(samples) -> np.ndarray:
    """Clamp to [-1, 1], scale by 32767 and round half-to-even to int16."""
    x = np.clip(np.asarray(samples, dtype=np.float64), -1.0, 1.0)
    return np.rint(x * WRITE_SCALE).astype("<i2")


def write_wav(clip: AudioClip, path) -> None:
    ints = quantize(clip.samples)
    with wave.open(os.fspath(path), "wb") as wf:
        wf.setnchannels(1)
        wf.setsampwidth(2)
        wf.setframerate(clip.sample_rate)
        wf.writeframes(ints.tobytes())
