"""Corpus manifest: one CSV row per labeled utterance."""
from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

from ispear.errors import DuplicateRecordError, ManifestParseError, ShapeMismatchError

GENDERS = ("male", "female")
EMOTIONS = ("happy", "neutral", "sad")
MANIFEST_HEADER = ("path", "subject_id", "gender", "word", "emotion")

# The 30 neutral Indonesian nouns of the reference corpus, in table order.
WORDS = (
    "perut", "kamera", "tangan",
    "mobil", "darat", "momen",
    "permen", "waktu", "batik",
    "hujan", "rumah", "negara",
    "akris", "ikan", "baja",
    "kelapa", "album", "surat",
    "kabin", "pasar", "calon",
    "garam", "motor", "payung",
    "soda", "swasta", "warga",
    "eksport", "acara", "daerah",
)


@dataclass(frozen=True)
class UtteranceRecord:
    path: str
    subject_id: str
    gender: str
    word: str
    emotion: str

    def __post_init__(self):
        if self.gender not in GENDERS:
            raise ValueError(f"gender must be one of {GENDERS}, got {self.gender!r}")
        if self.emotion not in EMOTIONS:
            raise ValueError(f"emotion must be one of {EMOTIONS}, got {self.emotion!r}")
        if not self.path or not self.subject_id or not self.word:
            raise ValueError("path, subject_id and word must be non-empty")

    @property
    def key(self):
        return (self.subject_id, self.word, self.emotion)


@dataclass
class CorpusManifest:
    root: Path
    records: list = field(default_factory=list)

    def __len__(self):
        return len(self.records)

    def resolve(self, record: UtteranceRecord) -> Path:
        return Path(self.root) / record.path

    @property
    def subjects(self):
        return sorted({r.subject_id for r in self.records})

    @property
    def words(self):
        return sorted({r.word for r in self.records})

    @property
    def emotions(self):
        return sorted({r.emotion for r in self.records})

    def check_unique(self):
        seen = {}
        for lineno, rec in enumerate(self.records, start=2):
            if rec.key in seen:
                raise DuplicateRecordError(
                    f"duplicate (subject, word, emotion) {rec.key} on rows {seen[rec.key]} and {lineno}"
                )
            seen[rec.key] = lineno

    def check_shape(self):
        """Full crossing: |subjects| x |words| x |emotions| == |records|."""
        expected = len(self.subjects) * len(self.words) * len(self.emotions)
        if expected != len(self.records):
            raise ShapeMismatchError(
                f"{len(self.subjects)} subjects x {len(self.words)} words x "
                f"{len(self.emotions)} emotions = {expected}, but manifest has {len(self.records)} records"
            )


def load_manifest(path, strict_shape: bool = False) -> CorpusManifest:
    """Parse a manifest CSV; WAV paths are taken relative to its directory."""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(path)
    records = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or tuple(h.strip() for h in header) != MANIFEST_HEADER:
            raise ManifestParseError(f"{path}: header must be {','.join(MANIFEST_HEADER)}, got {header}")
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != len(MANIFEST_HEADER):
                raise ManifestParseError(f"{path}:{lineno}: expected 5 fields, got {len(row)}")
            try:
                records.append(UtteranceRecord(*(c.strip() for c in row)))
            except ValueError as exc:
                raise ManifestParseError(f"{path}:{lineno}: {exc}") from exc
    if not records:
        raise ManifestParseError(f"{path}: manifest has no records")
    manifest = CorpusManifest(root=path.parent, records=records)
    manifest.check_unique()
    if strict_shape:
        manifest.check_shape()
    return manifest


def write_manifest(manifest: CorpusManifest, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(MANIFEST_HEADER)
        for r in manifest.records:
            writer.writerow([r.path, r.subject_id, r.gender, r.word, r.emotion])


