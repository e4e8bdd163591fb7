"""Short-time-energy endpoint detection for isolated-word recordings."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ispear.dsp._kernels import frame_energy
from ispear.errors import NoSpeechError, TooShortError


@dataclass(frozen=True)
class EndpointConfig:
    frame_len: float = 0.025
    hop: float = 0.010
    rel_threshold: float = 0.01
    min_onset_frames: int = 3
    hangover_frames: int = 5

    def __post_init__(self):
        if not (self.hop > 0 and self.frame_len >= self.hop):
            raise ValueError(f"need frame_len >= hop > 0, got frame_len={self.frame_len}, hop={self.hop}")
        if not 0.0 < self.rel_threshold < 1.0:
            raise ValueError(f"rel_threshold must lie in (0, 1), got {self.rel_threshold}")
        if self.min_onset_frames < 1 or self.hangover_frames < 1:
            raise ValueError("min_onset_frames and hangover_frames must be >= 1")

    def frame_samples(self, sample_rate: int) -> tuple:
        frame = max(1, int(round(self.frame_len * sample_rate)))
        hop = max(1, int(round(self.hop * sample_rate)))
        return frame, hop


@dataclass(frozen=True)
class Endpoints:
    start: int
    end: int  # exclusive

    def __post_init__(self):
        if not 0 <= self.start < self.end:
            raise ValueError(f"invalid endpoints [{self.start}, {self.end})")

    def __len__(self):
        return self.end - self.start


def detect_endpoints(clip, cfg: EndpointConfig = EndpointConfig(), backend=None) -> Endpoints:
    """Locate the utterance as [start, end) sample indices.

    A frame is active when its energy exceeds ``rel_threshold`` times the
    peak frame energy. The utterance starts at the first sample of the first
    run of ``min_onset_frames`` active frames and ends at the last sample of
    the last active frame plus ``hangover_frames`` hops, clamped to the clip.
    """
    x = clip.samples
    frame, hop = cfg.frame_samples(clip.sample_rate)
    if x.size < frame:
        raise TooShortError(f"clip of {x.size} samples is shorter than one {frame}-sample frame")
    energy = frame_energy(x, frame, hop, backend=backend)
    peak = energy.max()
    if not peak > 0.0:
        raise NoSpeechError("clip is silent")
    active = energy > cfg.rel_threshold * peak

    run = cfg.min_onset_frames
    if active.size < run:
        raise NoSpeechError("fewer frames than the onset run length")
    window = np.convolve(active.astype(np.int64), np.ones(run, dtype=np.int64), mode="valid")
    onsets = np.flatnonzero(window == run)
    if onsets.size == 0:
        raise NoSpeechError(f"no run of {run} active frames")
    first = int(onsets[0])
    last = int(np.flatnonzero(active)[-1])
    start = first * hop
    end = min(x.size, last * hop + frame + cfg.hangover_frames * hop)
    return Endpoints(start, end)
