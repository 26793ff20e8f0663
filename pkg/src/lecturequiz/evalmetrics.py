"""Intrinsic evaluation over human judgments of image-linked questions.

Judgments arrive as a CSV written by a human reviewer; the module only
aggregates. Both accuracy ratios are undefined (None) when no judged
question carries an image.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

from .imagelink import LINKED
from .rank_assign import QuestionBank


class ValidationError(Exception):
    pass


class UnknownQuestionId(Exception):
    pass


@dataclass(frozen=True)
class LinkJudgment:
    question_id: str
    has_image: bool
    correct_timestamp: bool
    relevant: bool

    def __post_init__(self):
        if not self.has_image and (self.correct_timestamp or self.relevant):
            raise ValidationError(
                f"{self.question_id}: timestamp/relevance flags require has_image"
            )


@dataclass(frozen=True)
class EvaluationReport:
    generated: int
    linked: int
    discarded: int
    unlinked: int
    correct_timestamp_accuracy: float | None
    relevant_accuracy: float | None
    unjudged_linked: tuple[str, ...] = field(default_factory=tuple)


def correct_timestamp_accuracy(judgments) -> float | None:
    with_images = [j for j in judgments if j.has_image]
    if not with_images:
        return None
    return sum(1 for j in with_images if j.correct_timestamp) / len(with_images)


def relevant_accuracy(judgments) -> float | None:
    with_images = [j for j in judgments if j.has_image]
    if not with_images:
        return None
    return sum(1 for j in with_images if j.relevant) / len(with_images)


def parse_judgments(path) -> list[LinkJudgment]:
    """Read the judgments CSV: question_id,has_image,correct_timestamp,
    relevant with true/false values."""

    def flag(raw: str, lineno: int) -> bool:
        value = raw.strip().lower()
        if value not in ("true", "false"):
            raise ValidationError(f"line {lineno}: expected true/false, got {raw!r}")
        return value == "true"

    judgments = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        for lineno, row in enumerate(reader, start=2):
            judgments.append(
                LinkJudgment(
                    question_id=row["question_id"].strip(),
                    has_image=flag(row["has_image"], lineno),
                    correct_timestamp=flag(row["correct_timestamp"], lineno),
                    relevant=flag(row["relevant"], lineno),
                )
            )
    return judgments


def report(bank: QuestionBank, judgments) -> EvaluationReport:
    """Accuracies plus pipeline counts for one bank."""
    known = {q.question_id for q in bank.questions}
    for j in judgments:
        if j.question_id not in known:
            raise UnknownQuestionId(j.question_id)
    generated = sum(r.emitted for r in bank.generation_report)
    discarded = sum(
        r.emitted for r in bank.generation_report
    ) - len(bank.questions)
    linked_ids = [q.question_id for q in bank.questions if q.link_outcome == LINKED]
    judged = {j.question_id for j in judgments}
    return EvaluationReport(
        generated=generated,
        linked=len(linked_ids),
        discarded=discarded,
        unlinked=sum(1 for q in bank.questions if q.link_outcome != LINKED),
        correct_timestamp_accuracy=correct_timestamp_accuracy(judgments),
        relevant_accuracy=relevant_accuracy(judgments),
        unjudged_linked=tuple(qid for qid in linked_ids if qid not in judged),
    )
