"""Question scoring, per-segment allocation and per-student selection.

Questions are scored with a linear acceptability model over a fixed
9-slot feature vector; segments receive question counts proportional to
their spoken duration (largest-remainder rounding); each student's quiz
is a seeded, reproducible random sample from the positive-score pool of
every segment. The SplitMix64 generator and the seed derivation are
spelled out so any implementation produces identical quizzes.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Sequence

from .imagelink import LINKED, FrameLink
from .qgen import VAGUE_PRONOUN, GenerationReport, QuestionCandidate
from .textproc import pos_tag, tokenize
from .tiling import Segment


class DimensionMismatch(Exception):
    pass


FEATURE_NAMES = (
    "has_image",
    "length_penalty",
    "wh_who",
    "wh_what",
    "wh_when",
    "wh_where",
    "wh_how_many",
    "vague_pronoun",
    "proper_noun_count",
)

_WH_SLOT = {"Who": 2, "What": 3, "When": 4, "Where": 5, "How many": 6}

DEFAULT_WEIGHTS = (2.0, -1.0, 0.5, 0.5, 0.5, 0.5, 0.5, -2.0, 0.5)


def extract_features(q: QuestionCandidate) -> list[float]:
    """Fixed-order feature vector, every entry in [0, 1]."""
    tokens = pos_tag(tokenize(q.question_text))
    word_count = sum(1 for t in tokens if t.is_word)
    proper_nouns = sum(1 for t in tokens if t.pos == "NNP")
    features = [0.0] * len(FEATURE_NAMES)
    features[0] = 1.0 if q.link_outcome == LINKED else 0.0
    features[1] = min(abs(word_count - 12), 12) / 12
    features[_WH_SLOT[q.wh_word]] = 1.0
    features[7] = 1.0 if VAGUE_PRONOUN in q.flags else 0.0
    features[8] = min(proper_nouns, 5) / 5
    return features


def score(q: QuestionCandidate, weights: Sequence[float]) -> float:
    """Acceptability = weights . features; stored on the question."""
    if q.features is None or len(q.features) != len(weights):
        raise DimensionMismatch(
            f"features {None if q.features is None else len(q.features)} "
            f"vs weights {len(weights)}"
        )
    total = 0.0
    for w, f in zip(weights, q.features):
        total += w * f
    q.score = total
    return total


def default_total(video_duration_ms: int) -> int:
    """Suggested quiz size: one question per two minutes, at least one."""
    if video_duration_ms <= 0:
        raise ValueError("duration must be positive")
    minutes = video_duration_ms / 60_000.0
    return max(1, int(minutes / 2.0 + 0.5))


def allocate(durations: Sequence[float], total: int) -> list[int]:
    """Integer counts proportional to durations, largest remainder.

    Floors are assigned first; leftover units go to the largest
    fractional remainders, earlier segment winning ties. The result
    always sums to *total*.
    """
    if total < 0:
        raise ValueError("total must be >= 0")
    if not durations:
        return []
    if any(d <= 0 for d in durations):
        raise ValueError("durations must be positive")
    whole = sum(durations)
    quotas = [total * d / whole for d in durations]
    counts = [int(qta) for qta in quotas]
    leftover = total - sum(counts)
    order = sorted(range(len(durations)), key=lambda i: (-(quotas[i] - counts[i]), i))
    for i in order[:leftover]:
        counts[i] += 1
    return counts


_MASK64 = (1 << 64) - 1


class SplitMix64:
    """The SplitMix64 sequence; identical on every platform."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        return self.next_u64() % n


def quiz_seed(student_id: str, quiz_id: str) -> int:
    """FNV-1a 64-bit hash of "student_id\\x1fquiz_id" in UTF-8."""
    h = 0xCBF29CE484222325
    for byte in student_id.encode("utf-8") + b"\x1f" + quiz_id.encode("utf-8"):
        h ^= byte
        h = (h * 0x100000001B3) & _MASK64
    return h


@dataclass(frozen=True)
class Quiz:
    quiz_id: str
    student_id: str
    question_ids: tuple[str, ...]
    seed: int


@dataclass
class QuestionBank:
    source_id: str
    video_duration_ms: int
    segments: list[Segment]
    questions: list[QuestionCandidate]  # discarded questions never enter
    config: dict
    generation_report: list[GenerationReport]

    def question_by_id(self, question_id: str) -> QuestionCandidate:
        for q in self.questions:
            if q.question_id == question_id:
                return q
        raise KeyError(question_id)


def select_for_student(
    bank: QuestionBank,
    counts: Sequence[int],
    student_id: str,
    quiz_id: str,
    score_threshold: float = 0.0,
) -> Quiz:
    """Deterministic per-student quiz.

    Per segment, the pool is that segment's questions with score above
    the threshold, best first (ties keep bank order). When the pool is
    larger than the segment's count, a partial Fisher-Yates shuffle
    driven by SplitMix64 picks the sample; otherwise the whole pool is
    taken and no random draws are consumed. The quiz lists questions in
    segment order, then bank order.
    """
    seed = quiz_seed(student_id, quiz_id)
    rng = SplitMix64(seed)
    picked: list[str] = []
    for segment, count in zip(bank.segments, counts):
        pool = [
            q
            for q in bank.questions
            if q.segment_id == segment.segment_id
            and q.score is not None
            and q.score > score_threshold
        ]
        pool.sort(key=lambda q: -q.score)  # stable: ties keep bank order
        if count >= len(pool):
            chosen = list(pool)
        else:
            indices = list(range(len(pool)))
            for i in range(count):
                j = i + rng.below(len(pool) - i)
                indices[i], indices[j] = indices[j], indices[i]
            chosen = [pool[i] for i in sorted(indices[:count])]
        order = {q.question_id: i for i, q in enumerate(bank.questions)}
        chosen.sort(key=lambda q: order[q.question_id])
        picked.extend(q.question_id for q in chosen)
    return Quiz(
        quiz_id=quiz_id,
        student_id=student_id,
        question_ids=tuple(picked),
        seed=seed,
    )


# ---------------------------------------------------------------------------
# question-bank file
# ---------------------------------------------------------------------------


def _question_to_dict(q: QuestionCandidate) -> dict:
    return {
        "question_id": q.question_id,
        "question_text": q.question_text,
        "wh_word": q.wh_word,
        "model_answer": q.model_answer,
        "source_sentence": list(q.source_sentence),
        "source_cue_range": list(q.source_cue_range),
        "segment_id": q.segment_id,
        "flags": sorted(q.flags),
        "features": q.features,
        "score": q.score,
        "link_outcome": q.link_outcome,
        "image_link": asdict(q.image_link) if q.image_link is not None else None,
    }


def _question_from_dict(d: dict) -> QuestionCandidate:
    link = d.get("image_link")
    return QuestionCandidate(
        question_text=d["question_text"],
        wh_word=d["wh_word"],
        model_answer=d["model_answer"],
        source_sentence=tuple(d["source_sentence"]),
        source_cue_range=tuple(d["source_cue_range"]),
        segment_id=d["segment_id"],
        flags=set(d["flags"]),
        features=d["features"],
        score=d["score"],
        link_outcome=d["link_outcome"],
        image_link=FrameLink(**link) if link else None,
        question_id=d["question_id"],
    )


def bank_to_json(bank: QuestionBank) -> str:
    payload = {
        "source_id": bank.source_id,
        "video_duration_ms": bank.video_duration_ms,
        "segments": [
            {
                "segment_id": s.segment_id,
                "cue_range": list(s.cue_range),
                "char_span": list(s.char_span),
                "duration_ms": s.duration_ms,
            }
            for s in bank.segments
        ],
        "questions": [_question_to_dict(q) for q in bank.questions],
        "config": bank.config,
        "generation_report": [asdict(r) for r in bank.generation_report],
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def save_bank(bank: QuestionBank, path) -> None:
    Path(path).write_text(bank_to_json(bank), encoding="utf-8")


def load_bank(path) -> QuestionBank:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    return QuestionBank(
        source_id=data["source_id"],
        video_duration_ms=data["video_duration_ms"],
        segments=[
            Segment(
                segment_id=s["segment_id"],
                cue_range=tuple(s["cue_range"]),
                char_span=tuple(s["char_span"]),
                duration_ms=s["duration_ms"],
            )
            for s in data["segments"]
        ],
        questions=[_question_from_dict(d) for d in data["questions"]],
        config=data["config"],
        generation_report=[GenerationReport(**r) for r in data["generation_report"]],
    )
