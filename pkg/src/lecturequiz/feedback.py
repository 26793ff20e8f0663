"""Grading free-text answers against the stored model answer.

Texts are reduced to their content words; the similarity of two texts
is the two-way average of idf-weighted best word matches (uniform
weights unless an idf table is supplied), and the grade buckets that
similarity into HIGH, MEDIUM or LOW.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .textproc import remove_stopwords, tokenize
from .wordnet import WordNetGraph, word_similarity

HIGH = "HIGH"
MEDIUM = "MEDIUM"
LOW = "LOW"


class BadThresholds(Exception):
    pass


@dataclass(frozen=True)
class GradeThresholds:
    high: float = 0.75
    medium: float = 0.45

    def __post_init__(self):
        if not 0.0 < self.medium < self.high <= 1.0:
            raise BadThresholds(
                f"need 0 < medium < high <= 1, got medium={self.medium} high={self.high}"
            )


@dataclass(frozen=True)
class FeedbackGrade:
    similarity: float
    grade: str
    per_word: tuple[tuple[str, str, float], ...] = field(default_factory=tuple)


def content_words(text: str) -> list[str]:
    tokens = remove_stopwords(tokenize(text))
    return [t.surface.lower() for t in tokens if not t.is_stopword]


def _best_match(word: str, pool: list[str], graph: WordNetGraph) -> tuple[str, float]:
    best_word, best_sim = "", 0.0
    for other in pool:
        sim = word_similarity(word, other, graph)
        if sim > best_sim:
            best_word, best_sim = other, sim
    return best_word, best_sim


def _directional(
    source: list[str], target: list[str], graph: WordNetGraph, idf: dict | None
) -> float:
    weight_total = 0.0
    score_total = 0.0
    for word in source:
        weight = 1.0 if idf is None else idf.get(word, 1.0)
        score_total += _best_match(word, target, graph)[1] * weight
        weight_total += weight
    return score_total / weight_total if weight_total else 0.0


def text_similarity(
    answer: str, model: str, graph: WordNetGraph, idf: dict | None = None
) -> float:
    """Symmetric similarity in [0, 1]; 0.0 when either side has no
    content words."""
    a = content_words(answer)
    b = content_words(model)
    if not a or not b:
        return 0.0
    return (_directional(a, b, graph, idf) + _directional(b, a, graph, idf)) / 2.0


def grade_from_similarity(
    similarity: float, thresholds: GradeThresholds = GradeThresholds()
) -> str:
    if similarity >= thresholds.high:
        return HIGH
    if similarity >= thresholds.medium:
        return MEDIUM
    return LOW


def grade(
    answer: str,
    model: str,
    graph: WordNetGraph,
    thresholds: GradeThresholds = GradeThresholds(),
    idf: dict | None = None,
) -> FeedbackGrade:
    """Grade an answer; per_word explains each answer word's best match."""
    similarity = text_similarity(answer, model, graph, idf)
    model_words = content_words(model)
    per_word = tuple(
        (word, *_best_match(word, model_words, graph))
        for word in content_words(answer)
    )
    return FeedbackGrade(
        similarity=similarity,
        grade=grade_from_similarity(similarity, thresholds),
        per_word=per_word,
    )


def load_idf_table(path) -> dict[str, float]:
    """Optional idf weights: one "lemma TAB weight" per line."""
    table = {}
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line:
            continue
        lemma, weight = line.split("\t")
        table[lemma] = float(weight)
    return table
