"""Linking questions to video frames through offline detection records.

A question that mentions one of the detector's class labels is searched
against the detection records inside its source sentence's padded time
range: a qualifying record attaches a frame link, no qualifying record
discards the question as too vague, and questions without any class
label pass through untouched.
"""

from __future__ import annotations

import json
import logging
import subprocess
from dataclasses import dataclass, replace

from .qgen import QuestionCandidate
from .textproc import tokenize
from .textproc.porter import stem
from .transcript import TranscriptDocument

logger = logging.getLogger(__name__)

LINKED = "LINKED"
DISCARDED = "DISCARDED"
UNLINKED = "UNLINKED"


class DetectionError(Exception):
    pass


class SchemaError(DetectionError):
    pass


class UnknownLabel(DetectionError):
    pass


class SourceMismatch(DetectionError):
    pass


class ExtractorFailure(DetectionError):
    pass


@dataclass(frozen=True)
class DetectionRecord:
    timestamp_ms: int
    label: str
    confidence: float
    bbox: tuple[float, float, float, float]  # x, y, width, height in [0, 1]

    def __post_init__(self):
        if not self.label:
            raise SchemaError("empty label")
        if not 0.0 <= self.confidence <= 1.0:
            raise SchemaError(f"confidence {self.confidence} outside [0, 1]")
        x, y, w, h = self.bbox
        if not (0 <= x <= 1 and 0 <= y <= 1 and 0 <= w <= 1 and 0 <= h <= 1
                and x + w <= 1 + 1e-9 and y + h <= 1 + 1e-9):
            raise SchemaError(f"bbox {self.bbox} outside the unit square")


@dataclass(frozen=True)
class DetectionSet:
    source_id: str
    class_labels: tuple[str, ...]
    records: tuple[DetectionRecord, ...]

    def __post_init__(self):
        known = set(self.class_labels)
        for rec in self.records:
            if rec.label not in known:
                raise UnknownLabel(f"record label {rec.label!r} not in class_labels")


@dataclass(frozen=True)
class FrameLink:
    timestamp_ms: int
    label: str
    confidence: float
    frame_ref: str = ""  # empty until a frame extractor fills it


def parse_detections(path) -> DetectionSet:
    """Load and validate a detections JSON file.

    Schema: {"source_id": str, "class_labels": [str], "records":
    [{"timestamp_ms", "label", "confidence", "bbox": [x, y, w, h]}]}.
    Unsorted records are sorted with a warning.
    """
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from exc
    try:
        source_id = data["source_id"]
        class_labels = tuple(data["class_labels"])
        raw_records = data["records"]
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"missing field: {exc}") from exc
    records = []
    for raw in raw_records:
        try:
            records.append(
                DetectionRecord(
                    timestamp_ms=int(raw["timestamp_ms"]),
                    label=raw["label"],
                    confidence=float(raw["confidence"]),
                    bbox=tuple(float(v) for v in raw["bbox"]),
                )
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"bad record {raw!r}: {exc}") from exc
    timestamps = [r.timestamp_ms for r in records]
    if timestamps != sorted(timestamps):
        logger.warning("detection records for %s were unsorted", source_id)
        records.sort(key=lambda r: r.timestamp_ms)
    return DetectionSet(source_id=source_id, class_labels=class_labels, records=tuple(records))


def _stems(text: str) -> list[str]:
    return [stem(t.surface.lower()) for t in tokenize(text) if t.is_word]


def label_in_question(q: QuestionCandidate, class_labels) -> str | None:
    """First class label (in label-list order) mentioned by the question.

    Matching is case-insensitive on whole words and falls back to stem
    equality, so "graphs" still matches the label "graph"; multi-word
    labels must appear as a phrase.
    """
    haystack = _stems(q.question_text) + _stems(q.model_answer)
    for label in class_labels:
        needle = _stems(label)
        if not needle:
            continue
        n = len(needle)
        for i in range(len(haystack) - n + 1):
            if haystack[i : i + n] == needle:
                return label
    return None


def source_time_range(
    q: QuestionCandidate, doc: TranscriptDocument, pad_ms: int = 2000
) -> tuple[int, int]:
    """Padded [start, end] window of the question's source cues."""
    first, last = q.source_cue_range
    start = max(0, doc.cues[first - 1].start_ms - pad_ms)
    end = doc.cues[last - 1].end_ms + pad_ms
    return start, end


@dataclass(frozen=True)
class LinkOutcome:
    status: str  # LINKED | DISCARDED | UNLINKED
    link: FrameLink | None = None


def link(
    q: QuestionCandidate,
    detections: DetectionSet,
    doc: TranscriptDocument,
    min_confidence: float = 0.5,
    pad_ms: int = 2000,
) -> LinkOutcome:
    """Resolve one question against the detection records."""
    if detections.source_id != doc.source_id:
        raise SourceMismatch(
            f"detections for {detections.source_id!r}, transcript is {doc.source_id!r}"
        )
    label = label_in_question(q, detections.class_labels)
    if label is None:
        return LinkOutcome(UNLINKED)
    start, end = source_time_range(q, doc, pad_ms)
    matches = [
        r
        for r in detections.records
        if r.label == label and start <= r.timestamp_ms <= end
        and r.confidence >= min_confidence
    ]
    if not matches:
        return LinkOutcome(DISCARDED)
    best = min(matches, key=lambda r: (-r.confidence, r.timestamp_ms))
    return LinkOutcome(
        LINKED,
        FrameLink(timestamp_ms=best.timestamp_ms, label=best.label, confidence=best.confidence),
    )


def apply_links(
    questions: list[QuestionCandidate],
    detections: DetectionSet | None,
    doc: TranscriptDocument,
    min_confidence: float = 0.5,
    pad_ms: int = 2000,
) -> dict[str, int]:
    """Set link_outcome/image_link on every candidate; returns tallies.

    With no detections file at all, every question stays UNLINKED.
    """
    tally = {LINKED: 0, DISCARDED: 0, UNLINKED: 0}
    for q in questions:
        if detections is None:
            outcome = LinkOutcome(UNLINKED)
        else:
            outcome = link(q, detections, doc, min_confidence, pad_ms)
        q.link_outcome = outcome.status
        q.image_link = outcome.link
        tally[outcome.status] += 1
    return tally


class CommandFrameExtractor:
    """Grabs frames via an external command:
    ``command <video_ref> <timestamp_ms> <out_path>`` must exit 0 and
    write the image to <out_path>."""

    def __init__(self, command: list[str]):
        self.command = list(command)

    def extract(self, video_ref: str, timestamp_ms: int, out_path: str) -> str:
        subprocess.run(
            self.command + [video_ref, str(timestamp_ms), out_path], check=True
        )
        return out_path


def extract_frame(video_ref: str, timestamp_ms: int, extractor, out_path: str) -> str:
    """Frame path from the configured extractor, or "" when absent or
    failing (the link itself is kept either way)."""
    if extractor is None:
        return ""
    try:
        return extractor.extract(video_ref, timestamp_ms, out_path)
    except Exception as exc:
        logger.warning("frame extraction failed at %d ms: %s", timestamp_ms, exc)
        return ""


def attach_frame(link_obj: FrameLink, frame_ref: str) -> FrameLink:
    return replace(link_obj, frame_ref=frame_ref)
