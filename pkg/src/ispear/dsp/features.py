"""Per-utterance vocal features: amplitude, duration and DWT approximation means."""
from __future__ import annotations

import csv
import logging
from dataclasses import dataclass, field

import numpy as np

from ispear.corpus.wavio import read_wav
from ispear.dsp.endpoints import EndpointConfig, Endpoints, detect_endpoints
from ispear.dsp.wavelets import MAX_ORDER, dwt_level1
from ispear.errors import IspearError

log = logging.getLogger(__name__)

FEATURE_HEADER = (
    "subject_id", "gender", "word", "emotion",
    "amplitude_mean", "duration_samples", "duration_s", "db1", "db2", "db3", "db4",
)
RESPONSES = ("amplitude_mean", "duration_samples", "db1", "db2", "db3", "db4")


def duration_feature(ep: Endpoints, sample_rate: int) -> tuple:
    n = ep.end - ep.start
    return n, n / sample_rate


def amplitude_feature(clip, ep: Endpoints) -> float:
    return float(np.mean(np.abs(clip.samples[ep.start:ep.end])))


def approx_mean_feature(clip, ep: Endpoints, order: int, backend=None) -> float:
    approx, _ = dwt_level1(clip.samples[ep.start:ep.end], order, backend=backend)
    return float(approx.mean())


@dataclass(frozen=True)
class FeatureRow:
    subject_id: str
    gender: str
    word: str
    emotion: str
    amplitude_mean: float
    duration_samples: int
    duration_s: float
    db1: float
    db2: float
    db3: float
    db4: float
    padded: bool = False  # segment was odd-length and zero-padded before the DWT

    def values(self):
        return [getattr(self, name) for name in FEATURE_HEADER]


@dataclass
class ExtractionReport:
    rows: list = field(default_factory=list)
    failures: list = field(default_factory=list)  # (record, error message)


def features_for_clip(clip, cfg: EndpointConfig = EndpointConfig(), backend=None) -> dict:
    ep = detect_endpoints(clip, cfg, backend=backend)
    n, seconds = duration_feature(ep, clip.sample_rate)
    out = {
        "amplitude_mean": amplitude_feature(clip, ep),
        "duration_samples": n,
        "duration_s": seconds,
        "padded": bool(n % 2),
    }
    for order in range(1, MAX_ORDER + 1):
        out[f"db{order}"] = approx_mean_feature(clip, ep, order, backend=backend)
    return out


def extract_features(manifest, cfg: EndpointConfig = EndpointConfig(), backend=None) -> ExtractionReport:
    """One FeatureRow per manifest record, in manifest order.

    Records that cannot be read or contain no detectable speech are listed
    in ``report.failures`` instead of aborting the run; an IspearError is
    raised only when every record fails.
    """
    report = ExtractionReport()
    for rec in manifest.records:
        try:
            clip = read_wav(manifest.resolve(rec))
            feats = features_for_clip(clip, cfg, backend=backend)
        except (IspearError, OSError) as exc:
            log.warning("%s: %s: %s", rec.path, type(exc).__name__, exc)
            report.failures.append((rec, f"{type(exc).__name__}: {exc}"))
            continue
        report.rows.append(FeatureRow(rec.subject_id, rec.gender, rec.word, rec.emotion, **feats))
    if manifest.records and not report.rows:
        raise IspearError(f"feature extraction failed for all {len(manifest.records)} records")
    return report


def _fmt(v):
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return f"{float(v):.9g}"
    return str(v)


def write_features_csv(rows, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(FEATURE_HEADER)
        for row in rows:
            writer.writerow([_fmt(v) for v in row.values()])


def read_features_csv(path) -> dict:
    """Column-oriented feature table: name -> numpy array (strings as object)."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or tuple(reader.fieldnames) != FEATURE_HEADER:
            raise IspearError(f"{path}: header must be {','.join(FEATURE_HEADER)}")
        cols = {name: [] for name in FEATURE_HEADER}
        for row in reader:
            for name in FEATURE_HEADER:
                cols[name].append(row[name])
    table = {}
    for name in FEATURE_HEADER[:4]:
        table[name] = np.array(cols[name], dtype=object)
    for name in FEATURE_HEADER[4:]:
        try:
            table[name] = np.array([float(v) for v in cols[name]])
        except ValueError as exc:
            raise IspearError(f"{path}: non-numeric value in column {name}: {exc}") from exc
    return table
