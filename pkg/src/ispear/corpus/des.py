"""Differential Emotions Scale (DES) questionnaire validation.

Each participant fills a 16-item DES form (scores 1..5) before and after
the elicitation of a targeted emotion. A session is kept when

1. the targeted-emotion score differs significantly between pre and post;
2. post-stimulation, the targeted score differs significantly from the
   pooled scores of the 15 non-targeted items.

Both conditions are one-way ANOVA tests. Utterance clarity (the third
acceptance condition of the protocol) is a manual judgement and is not
computed here.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

from ispear.corpus.manifest import EMOTIONS
from ispear.errors import DegenerateGroupsError, ManifestParseError, SubjectMismatchError
from ispear.stats.anova import anova_oneway

DES_ITEMS = (
    "surprise", "anger", "anxiety", "calm", "confusion", "contempt", "disgust",
    "embarrassment", "enthusiasm", "fear", "shame", "happiness", "interest",
    "love", "pride", "sadness",
)
# DES has no "neutral" item; calm is its closest counterpart.
TARGET_ITEM = {"happy": "happiness", "neutral": "calm", "sad": "sadness"}
PHASES = ("pre", "post")
DES_HEADER = ("subject_id", "phase", "targeted_emotion") + tuple(f"s{i:02d}" for i in range(1, 17))


@dataclass(frozen=True)
class DesRecord:
    subject_id: str
    phase: str
    targeted_emotion: str
    scores: tuple

    def __post_init__(self):
        if self.phase not in PHASES:
            raise ValueError(f"phase must be one of {PHASES}, got {self.phase!r}")
        if self.targeted_emotion not in EMOTIONS:
            raise ValueError(f"targeted_emotion must be one of {EMOTIONS}, got {self.targeted_emotion!r}")
        scores = tuple(int(s) for s in self.scores)
        if len(scores) != len(DES_ITEMS):
            raise ValueError(f"expected {len(DES_ITEMS)} DES scores, got {len(scores)}")
        if any(s < 1 or s > 5 for s in scores):
            raise ValueError(f"DES scores must lie in 1..5, got {scores}")
        object.__setattr__(self, "scores", scores)

    def score(self, item: str) -> int:
        return self.scores[DES_ITEMS.index(item)]


@dataclass(frozen=True)
class ValidationVerdict:
    condition1_p: float
    condition2_p: float
    alpha: float = 0.05

    @property
    def valid(self) -> bool:
        return self.condition1_p <= self.alpha and self.condition2_p <= self.alpha


def read_des_csv(path) -> list:
    path = Path(path)
    out = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or tuple(h.strip() for h in header) != DES_HEADER:
            raise ManifestParseError(f"{path}: header must be {','.join(DES_HEADER)}")
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(DES_HEADER):
                raise ManifestParseError(f"{path}:{lineno}: expected {len(DES_HEADER)} fields, got {len(row)}")
            try:
                out.append(DesRecord(row[0].strip(), row[1].strip(), row[2].strip(), tuple(row[3:])))
            except ValueError as exc:
                raise ManifestParseError(f"{path}:{lineno}: {exc}") from exc
    return out


def _select(records, targeted):
    return [r for r in records if r.targeted_emotion == targeted]


def _verdict(pre, post, targeted, alpha):
    item = TARGET_ITEM[targeted]
    idx = DES_ITEMS.index(item)
    pre_target = [r.scores[idx] for r in pre]
    post_target = [r.scores[idx] for r in post]
    post_other = [s for r in post for j, s in enumerate(r.scores) if j != idx]
    for name, group in (("pre targeted", pre_target), ("post targeted", post_target)):
        if len(group) < 2:
            raise DegenerateGroupsError(f"{name} group has {len(group)} observation(s); need >= 2")
    c1 = anova_oneway([pre_target, post_target])
    c2 = anova_oneway([post_target, post_other])
    return ValidationVerdict(c1.p_value, c2.p_value, alpha)


def des_validate(pre, post, targeted: str, alpha: float = 0.05, by_subject: bool = False):
    """Validate elicitation of ``targeted`` from pre/post DES records.

    With ``by_subject=False`` (default) scores are pooled across subjects
    and a single ValidationVerdict is returned. With ``by_subject=True`` a
    dict ``subject_id -> ValidationVerdict`` is returned, each computed from
    that subject's records alone; this requires repeated questionnaires
    (>= 2 records per phase) for every subject.
    """
    if targeted not in EMOTIONS:
        raise ValueError(f"targeted must be one of {EMOTIONS}, got {targeted!r}")
    if not 0.0 < alpha < 1.0:
        raise ValueError("alpha must lie in (0, 1)")
    pre = _select(pre, targeted)
    post = _select(post, targeted)
    if any(r.phase != "pre" for r in pre) or any(r.phase != "post" for r in post):
        raise ValueError("pre/post lists contain records of the wrong phase")
    pre_subjects = {r.subject_id for r in pre}
    post_subjects = {r.subject_id for r in post}
    if pre_subjects != post_subjects:
        missing = sorted(pre_subjects ^ post_subjects)
        raise SubjectMismatchError(f"subjects present in only one phase: {missing}")
    if not by_subject:
        return _verdict(pre, post, targeted, alpha)
    return {
        s: _verdict(
            [r for r in pre if r.subject_id == s],
            [r for r in post if r.subject_id == s],
            targeted,
            alpha,
        )
        for s in sorted(pre_subjects)
    }
