"""Rule-based part-of-speech tagging over the shipped lexicon.

Lookup order per token: exact surface, then lowercased surface, then the
unknown-word rules. The tag set is closed:

    NN NNS NNP VB VBD VBZ VBP VBG VBN MD DT IN JJ RB PRP CD AUX OTHER

Unknown words fall through an ordered rule chain: suffix rules, then
capitalization (never for the sentence-initial word), then digit
content, then NN. Tagging a list twice is a no-op: output depends only
on the surfaces.
"""

from __future__ import annotations

from . import resources
from .tokens import Token

TAGS = frozenset(
    "NN NNS NNP VB VBD VBZ VBP VBG VBN MD DT IN JJ RB PRP CD AUX OTHER".split()
)

_NOUN_CONTEXT = frozenset({"DT", "JJ", "NN", "NNS", "CD", "NNP"})


def _suffix_tag(lower: str, prev_tag: str | None) -> str | None:
    if len(lower) >= 5 and lower.endswith("ing"):
        return "VBG"
    if len(lower) >= 4 and lower.endswith("ed"):
        return "VBD"
    if len(lower) >= 3 and lower.endswith("s") and not lower.endswith("ss"):
        return "NNS" if prev_tag in _NOUN_CONTEXT else "VBZ"
    if len(lower) >= 4 and lower.endswith("ly"):
        return "RB"
    if len(lower) >= 5 and lower.endswith(("ous", "ful", "ive")):
        return "JJ"
    return None


def pos_tag(tokens: list[Token]) -> list[Token]:
    lexicon = resources.tag_lexicon()
    first_word = next((i for i, t in enumerate(tokens) if t.is_word), None)
    prev_tag: str | None = None
    for i, tok in enumerate(tokens):
        if not tok.is_word:
            tok.pos = "OTHER"
            continue
        surface = tok.surface
        tag = lexicon.get(surface) or lexicon.get(surface.lower())
        if tag is None:
            tag = _suffix_tag(surface.lower(), prev_tag)
        if tag is None and surface[0].isupper() and i != first_word:
            tag = "NNP"
        if tag is None and any(ch.isdigit() for ch in surface):
            tag = "CD"
        tok.pos = tag or "NN"
        prev_tag = tok.pos
    return tokens
