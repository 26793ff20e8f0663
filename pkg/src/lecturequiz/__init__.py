"""Automatic quiz generation and grading for video lecture transcripts.

The pipeline runs from timestamped SRT subtitles to a servable question
bank: subtopic segmentation by lexical cohesion, rule-based wh-question
generation, detection-backed frame linking, linear-model ranking with
duration-proportional allocation, and WordNet-similarity answer
grading. See the README for the CLI and the quiz service API.
"""

from . import (
    cli,
    evalmetrics,
    feedback,
    imagelink,
    qgen,
    rank_assign,
    service,
    textproc,
    tiling,
    transcript,
    wordnet,
)

__all__ = [
    "cli",
    "evalmetrics",
    "feedback",
    "imagelink",
    "qgen",
    "rank_assign",
    "service",
    "textproc",
    "tiling",
    "transcript",
    "wordnet",
]

__version__ = "0.1.0"
