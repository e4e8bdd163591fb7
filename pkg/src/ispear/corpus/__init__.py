"""Corpus manifests, WAV I/O, DES questionnaire validation and synthetic corpora."""
from ispear.corpus.des import DES_ITEMS, DesRecord, ValidationVerdict, des_validate, read_des_csv
from ispear.corpus.manifest import (
    EMOTIONS,
    GENDERS,
    WORDS,
    CorpusManifest,
    UtteranceRecord,
    load_manifest,
    write_manifest,
)
from ispear.corpus.synth import SynthConfig, synth_corpus
from ispear.corpus.wavio import AudioClip, read_wav, write_wav

__all__ = [
    "DES_ITEMS",
    "DesRecord",
    "ValidationVerdict",
    "des_validate",
    "read_des_csv",
    "EMOTIONS",
    "GENDERS",
    "WORDS",
    "CorpusManifest",
    "UtteranceRecord",
    "load_manifest",
    "write_manifest",
    "SynthConfig",
    "synth_corpus",
    "AudioClip",
    "read_wav",
    "write_wav",
]
