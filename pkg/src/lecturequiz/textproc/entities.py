"""Shallow entity detection over tagged sentences.

Five kinds are produced: PERSON, DATE, NUMBER, LOCATION and NP_OTHER.
Candidates from all rules compete for tokens; the longest span wins,
ties go to the earlier span, then to the rule order above. The result
is a disjoint list in sentence order.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import resources
from .tokens import Sentence, Token

PERSON = "PERSON"
DATE = "DATE"
NUMBER = "NUMBER"
LOCATION = "LOCATION"
NP_OTHER = "NP_OTHER"

KINDS = (PERSON, DATE, NUMBER, LOCATION, NP_OTHER)

# rule application order, which doubles as the tie-break priority
_RULE_KINDS = (DATE, NUMBER, PERSON, LOCATION, NP_OTHER)

_MONTHS = frozenset(
    "january february march april may june july august september october november december".split()
)

_NOUN_TAGS = frozenset({"NN", "NNS", "NNP"})


@dataclass(frozen=True)
class EntitySpan:
    token_range: tuple[int, int]  # inclusive token indices
    kind: str


def span_surface(sentence: Sentence, span: EntitySpan) -> str:
    first, last = span.token_range
    base = sentence.char_span[0]
    lo = sentence.tokens[first].char_span[0] - base
    hi = sentence.tokens[last].char_span[1] - base
    return sentence.text[lo:hi]


def _is_int_in(tok: Token, lo: int, hi: int) -> bool:
    return tok.surface.isdigit() and lo <= int(tok.surface) <= hi


def _is_year(tok: Token) -> bool:
    return _is_int_in(tok, 1500, 2099)


def _is_day(tok: Token) -> bool:
    return _is_int_in(tok, 1, 31)


def _date_candidates(tokens: list[Token]) -> tuple[list[tuple[int, int]], set[int]]:
    spans: list[tuple[int, int]] = []
    covered: set[int] = set()
    for i, tok in enumerate(tokens):
        if tok.surface.lower() in _MONTHS and tok.is_word:
            first = i - 1 if i > 0 and _is_day(tokens[i - 1]) else i
            last = i
            if i + 1 < len(tokens) and (_is_year(tokens[i + 1]) or _is_day(tokens[i + 1])):
                last = i + 1
            spans.append((first, last))
            covered.update(range(first, last + 1))
    for i, tok in enumerate(tokens):
        if i not in covered and _is_year(tok):
            spans.append((i, i))
            covered.add(i)
    return spans, covered


def _nnp_runs(tokens: list[Token]) -> list[tuple[int, int]]:
    runs = []
    i = 0
    while i < len(tokens):
        if tokens[i].pos == "NNP":
            j = i
            while j + 1 < len(tokens) and tokens[j + 1].pos == "NNP":
                j += 1
            runs.append((i, j))
            i = j + 1
        else:
            i += 1
    return runs


def _np_other_runs(tokens: list[Token]) -> list[tuple[int, int]]:
    """Maximal DT? JJ* (NN|NNS|NNP)+ runs."""
    runs = []
    i = 0
    n = len(tokens)
    while i < n:
        j = i
        if j < n and tokens[j].pos == "DT":
            j += 1
        while j < n and tokens[j].pos == "JJ":
            j += 1
        k = j
        while k < n and tokens[k].pos in _NOUN_TAGS:
            k += 1
        if k > j:  # at least one noun
            runs.append((i, k - 1))
            i = k
        else:
            i += 1
    return runs


def detect_entities(sentence: Sentence) -> list[EntitySpan]:
    tokens = sentence.tokens
    names = resources.given_names()
    titles = resources.honorifics()
    places = resources.locations()

    candidates: list[tuple[tuple[int, int], int]] = []  # (span, rule priority)
    date_spans, date_covered = _date_candidates(tokens)
    for span in date_spans:
        candidates.append((span, 0))
    for i, tok in enumerate(tokens):
        if tok.pos == "CD" and i not in date_covered:
            candidates.append(((i, i), 1))
    for first, last in _nnp_runs(tokens):
        head = tokens[first].surface
        preceded = first > 0 and tokens[first - 1].surface in titles
        if head in names or head in titles or preceded:
            candidates.append(((first, last), 2))
        joined = " ".join(t.surface for t in tokens[first : last + 1])
        if joined in places:
            candidates.append(((first, last), 3))
    for span in _np_other_runs(tokens):
        candidates.append((span, 4))

    candidates.sort(key=lambda c: (-(c[0][1] - c[0][0]), c[0][0], c[1]))
    taken: set[int] = set()
    chosen: list[EntitySpan] = []
    for (first, last), prio in candidates:
        indices = set(range(first, last + 1))
        if indices & taken:
            continue
        taken |= indices
        chosen.append(EntitySpan((first, last), _RULE_KINDS[prio]))
    chosen.sort(key=lambda s: s.token_range[0])
    return chosen
