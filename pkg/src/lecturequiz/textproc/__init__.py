"""Deterministic text preprocessing shared across the pipeline.

Everything here is a pure function of its inputs plus the shipped data
tables: tokenization, sentence splitting, Porter stemming, stop-word
flagging, rule-based part-of-speech tagging and shallow entity
detection.
"""

from .entities import (
    DATE,
    KINDS,
    LOCATION,
    NP_OTHER,
    NUMBER,
    PERSON,
    EntitySpan,
    detect_entities,
    span_surface,
)
from .porter import stem
from .tagger import TAGS, pos_tag
from .tokens import Sentence, Token, add_stems, remove_stopwords, split_sentences, tokenize

__all__ = [
    "DATE",
    "KINDS",
    "LOCATION",
    "NP_OTHER",
    "NUMBER",
    "PERSON",
    "EntitySpan",
    "Sentence",
    "TAGS",
    "Token",
    "add_stems",
    "annotate",
    "detect_entities",
    "pos_tag",
    "remove_stopwords",
    "span_surface",
    "split_sentences",
    "stem",
    "tokenize",
]


def annotate(source) -> list[Sentence]:
    """Split into sentences and fill stems, stop-word flags and tags."""
    sentences = split_sentences(source)
    for sent in sentences:
        add_stems(sent.tokens)
        remove_stopwords(sent.tokens)
        pos_tag(sent.tokens)
    return sentences
