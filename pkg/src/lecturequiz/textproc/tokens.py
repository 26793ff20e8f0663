"""Tokenization and sentence splitting.

Tokens carry character spans into the text they were cut from, so
downstream consumers (tiling boundaries, question source spans) can map
any token back to its transcript cue. Spans are end-exclusive.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import porter, resources

# characters stripped off token edges; internal occurrences are kept so
# "state-of-the-art", "1,000" and "3.5" survive as single tokens
_PUNCT = set(".,;:!?\"'()[]{}<>«»‘’“”–—-…%$#@&*/\\~`|=+^")

_WORD_RE = re.compile(r"\S+")


@dataclass
class Token:
    surface: str
    char_span: tuple[int, int]
    stem: str = ""
    pos: str = ""
    is_stopword: bool = False

    @property
    def is_word(self) -> bool:
        return any(ch.isalnum() for ch in self.surface)


@dataclass
class Sentence:
    text: str
    char_span: tuple[int, int]
    tokens: list[Token] = field(default_factory=list)


def tokenize(text: str, base_offset: int = 0) -> list[Token]:
    """Split *text* into tokens with spans offset by *base_offset*.

    Whitespace separates chunks; punctuation at a chunk edge becomes its
    own single-character token, while internal punctuation (hyphens,
    decimal points, digit-group commas, apostrophes) stays put. Known
    abbreviations keep their trailing period.
    """
    abbrevs = resources.abbreviations()
    tokens: list[Token] = []
    for m in _WORD_RE.finditer(text):
        chunk, start = m.group(), m.start() + base_offset
        # leading punctuation
        while chunk and chunk[0] in _PUNCT and chunk not in abbrevs:
            tokens.append(Token(chunk[0], (start, start + 1)))
            chunk, start = chunk[1:], start + 1
        if not chunk:
            continue
        if chunk in abbrevs:
            tokens.append(Token(chunk, (start, start + len(chunk))))
            continue
        # trailing punctuation, collected right to left
        tail: list[Token] = []
        while chunk and chunk[-1] in _PUNCT:
            end = start + len(chunk)
            tail.append(Token(chunk[-1], (end - 1, end)))
            chunk = chunk[:-1]
        if chunk:
            tokens.append(Token(chunk, (start, start + len(chunk))))
        tokens.extend(reversed(tail))
    return tokens


def _is_abbreviation_before(text: str, dot_index: int) -> bool:
    """True when the period at *dot_index* ends a guarded abbreviation."""
    i = dot_index
    while i > 0 and not text[i - 1].isspace():
        i -= 1
    candidate = text[i : dot_index + 1]
    return candidate in resources.abbreviations()


_TERMINATOR_RE = re.compile(r"[.?!]+")


def split_sentences(source) -> list[Sentence]:
    """Split flattened transcript text into sentences with tokens.

    *source* is a TimedText (or anything with a ``.text`` attribute) or a
    plain string. A terminator run ([.?!]+) ends a sentence when followed
    by whitespace and a capital letter, or by end of text; abbreviation
    periods from the shipped guard list never split. Sentence and token
    spans index into the source text.
    """
    text = getattr(source, "text", source)
    breaks: list[int] = []
    for m in _TERMINATOR_RE.finditer(text):
        end = m.end()
        if end >= len(text):
            breaks.append(end)
            continue
        follow = text[end:]
        stripped = follow.lstrip()
        if not stripped:
            breaks.append(end)
            continue
        if follow[0].isspace() and stripped[0].isupper():
            if m.group() == "." and _is_abbreviation_before(text, m.start()):
                continue
            breaks.append(end)
    sentences: list[Sentence] = []
    start = 0
    for brk in breaks + [len(text)]:
        if brk <= start:
            continue
        raw = text[start:brk]
        lead = len(raw) - len(raw.lstrip())
        trail = len(raw) - len(raw.rstrip())
        s0, s1 = start + lead, brk - trail
        if s1 > s0:
            body = text[s0:s1]
            sentences.append(Sentence(body, (s0, s1), tokenize(body, base_offset=s0)))
        start = brk
    return sentences


def remove_stopwords(tokens: list[Token]) -> list[Token]:
    """Flag stop words and punctuation; tokens are never deleted."""
    stop = resources.stopwords()
    for tok in tokens:
        tok.is_stopword = (not tok.is_word) or tok.surface.lower() in stop
    return tokens


def add_stems(tokens: list[Token]) -> list[Token]:
    for tok in tokens:
        lower = tok.surface.lower()
        tok.stem = porter.stem(lower) if lower.isalpha() else lower
    return tokens
