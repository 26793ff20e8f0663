"""Wh-question generation from declarative transcript sentences.

Each detected answer phrase yields one candidate question: the phrase
is removed, a question phrase takes its place (subject questions) or is
fronted with auxiliary inversion / do-support (object and adjunct
questions), and the removed surface is kept as the model answer.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .textproc import (
    DATE,
    LOCATION,
    NUMBER,
    PERSON,
    EntitySpan,
    Sentence,
    detect_entities,
)
from .textproc.resources import irregular_verb_bases, tag_lexicon
from .transcript import TimedText, cue_for_offset

SUBJECT = "SUBJECT"
OBJECT = "OBJECT"
ADJUNCT = "ADJUNCT"

WH_WORDS = ("Who", "What", "When", "Where", "How many")

VAGUE_PRONOUN = "VAGUE_PRONOUN"

_FINITE_TAGS = frozenset({"VBD", "VBZ", "VBP", "MD"})
_FINITE_BE = frozenset({"is", "are", "was", "were", "am"})
_MIN_TOKENS = 5
_MAX_TOKENS = 40


class UnsupportedStructure(Exception):
    pass


@dataclass(frozen=True)
class AnswerPhrase:
    entity: EntitySpan
    role: str
    surface: str                   # removed surface, the model answer
    remove_range: tuple[int, int]  # inclusive token range taken out
    wh_word: str                   # canonical wh word
    wh_phrase: str                 # inserted phrase, lowercase


@dataclass
class QuestionCandidate:
    question_text: str
    wh_word: str
    model_answer: str
    source_sentence: tuple[int, int]
    source_cue_range: tuple[int, int]
    segment_id: int
    flags: set[str] = field(default_factory=set)
    features: list[float] | None = None
    score: float | None = None
    link_outcome: str = ""
    image_link: object | None = None
    question_id: str = ""


@dataclass
class GenerationReport:
    segment_id: int
    sentences: int = 0
    eligible: int = 0
    skipped: int = 0
    emitted: int = 0


def _first_finite_index(sentence: Sentence) -> int | None:
    for i, tok in enumerate(sentence.tokens):
        if tok.pos in _FINITE_TAGS:
            return i
        if tok.pos == "AUX" and tok.surface.lower() in _FINITE_BE:
            return i
    return None


def eligible_sentences(sentences: list[Sentence]) -> list[Sentence]:
    """Declarative sentences of workable size with a finite verb."""
    keep = []
    for sent in sentences:
        if sent.text.rstrip().endswith("?"):
            continue
        if not _MIN_TOKENS <= len(sent.tokens) <= _MAX_TOKENS:
            continue
        if _first_finite_index(sent) is None:
            continue
        keep.append(sent)
    return keep


def has_vague_subject(sentence: Sentence) -> bool:
    """True when the sentence opens with a bare pronoun subject."""
    finite = _first_finite_index(sentence)
    if finite is None:
        return False
    first_word = next((i for i, t in enumerate(sentence.tokens) if t.is_word), None)
    return (
        first_word is not None
        and first_word < finite
        and sentence.tokens[first_word].pos == "PRP"
    )


def wh_word_for(kind: str, next_token=None) -> tuple[str, str]:
    """(canonical wh word, inserted phrase) for an entity kind.

    A NUMBER directly followed by a noun asks "how many <noun>"; the
    noun travels with the question phrase.
    """
    if kind == PERSON:
        return "Who", "who"
    if kind == DATE:
        return "When", "when"
    if kind == LOCATION:
        return "Where", "where"
    if kind == NUMBER and next_token is not None and next_token.pos in ("NN", "NNS"):
        return "How many", f"how many {next_token.surface}"
    return "What", "what"


def _slice_surface(sentence: Sentence, first: int, last: int) -> str:
    base = sentence.char_span[0]
    lo = sentence.tokens[first].char_span[0] - base
    hi = sentence.tokens[last].char_span[1] - base
    return sentence.text[lo:hi]


def answer_phrases(sentence: Sentence) -> list[AnswerPhrase]:
    """Entity spans dressed with their grammatical role and wh phrase."""
    finite = _first_finite_index(sentence)
    if finite is None:
        return []
    phrases = []
    occupied: set[int] = set()
    for span in detect_entities(sentence):
        first, last = span.token_range
        if occupied & set(range(first, last + 1)):
            continue  # consumed by an earlier phrase (e.g. a counted noun)
        remove_first, remove_last = first, last
        if first > 0 and sentence.tokens[first - 1].pos == "IN":
            role = ADJUNCT
            remove_first = first - 1  # the preposition leaves with the phrase
        elif last < finite:
            role = SUBJECT
        else:
            role = OBJECT
        next_token = (
            sentence.tokens[last + 1] if last + 1 < len(sentence.tokens) else None
        )
        wh_word, wh_phrase = wh_word_for(span.kind, next_token)
        if wh_word == "How many":
            remove_last = last + 1  # the counted noun joins the question phrase
        occupied.update(range(remove_first, remove_last + 1))
        phrases.append(
            AnswerPhrase(
                entity=span,
                role=role,
                surface=_slice_surface(sentence, remove_first, remove_last),
                remove_range=(remove_first, remove_last),
                wh_word=wh_word,
                wh_phrase=wh_phrase,
            )
        )
    return phrases


_ES_SIBILANT = ("ches", "shes", "sses", "xes", "zzes", "oes")


def base_verb_form(word: str) -> str:
    """Base form of a finite verb, for do-support.

    Irregular forms come from the shipped table; for regular forms the
    suffix is stripped and candidates are validated against the tag
    lexicon before falling back to plain rules.
    """
    table = irregular_verb_bases()
    if word in table:
        return table[word]
    lexicon = tag_lexicon()

    def known_base(candidate: str) -> bool:
        return lexicon.get(candidate) == "VBP"

    if word.endswith("ies"):
        candidates = [word[:-3] + "y"]
    elif word.endswith("es"):
        candidates = [word[:-1], word[:-2]]
    elif word.endswith("s"):
        candidates = [word[:-1]]
    elif word.endswith("ied"):
        candidates = [word[:-3] + "y"]
    elif word.endswith("ed"):
        undoubled = word[:-3] if len(word) > 3 and word[-3] == word[-4] else None
        candidates = [w for w in (word[:-1], word[:-2], undoubled) if w]
    else:
        return word
    for cand in candidates:
        if known_base(cand):
            return cand
    # fallback rules for verbs outside the lexicon
    if word.endswith("ies"):
        return word[:-3] + "y"
    if word.endswith(_ES_SIBILANT):
        return word[:-2]
    if word.endswith("ied"):
        return word[:-3] + "y"
    if word.endswith("ed"):
        stripped = word[:-2]
        return stripped + "e" if stripped.endswith(("v", "z", "u")) else stripped
    if word.endswith("s"):
        return word[:-1]
    return word


_SENTENCE_PUNCT = frozenset({".", "!", "?", ";", ":"})


def _surfaces(sentence: Sentence, indices: list[int], lower_initial: bool) -> list[str]:
    """Token surfaces for *indices*; optionally lowercase the original
    sentence-initial word when it is not a proper noun."""
    out = []
    for i in indices:
        tok = sentence.tokens[i]
        surface = tok.surface
        if lower_initial and i == 0 and tok.pos != "NNP":
            surface = surface.lower()
        out.append(surface)
    return out


def transform(sentence: Sentence, phrase: AnswerPhrase, segment_id: int = 0) -> QuestionCandidate:
    """Build one wh-question by removing the answer phrase.

    Subject phrases are replaced in place; object and adjunct phrases
    front the wh word with auxiliary inversion when the first finite
    verb is a modal or copula, and do-support otherwise.
    """
    tokens = sentence.tokens
    finite = _first_finite_index(sentence)
    if finite is None:
        raise UnsupportedStructure("no finite verb")
    rf, rl = phrase.remove_range
    if rf <= finite <= rl:
        raise UnsupportedStructure("answer phrase overlaps the finite verb")

    kept = [i for i in range(len(tokens)) if not rf <= i <= rl]
    # a comma that directly trailed the removed span is stranded
    kept = [i for i in kept if not (tokens[i].surface == "," and i == rl + 1)]
    # drop the original terminator; the question mark is added later
    while kept and tokens[kept[-1]].surface in _SENTENCE_PUNCT:
        kept.pop()

    if phrase.role == SUBJECT:
        before = [i for i in kept if i < rf]
        after = [i for i in kept if i > rl]
        words = (
            _surfaces(sentence, before, lower_initial=False)
            + [phrase.wh_phrase]
            + _surfaces(sentence, after, lower_initial=False)
        )
    else:
        verb = tokens[finite]
        pre = [i for i in kept if i < finite]
        post = [i for i in kept if i > finite]
        if verb.pos == "MD" or verb.pos == "AUX":
            words = (
                [phrase.wh_phrase, verb.surface.lower()]
                + _surfaces(sentence, pre, lower_initial=True)
                + _surfaces(sentence, post, lower_initial=True)
            )
        elif verb.pos in ("VBD", "VBZ", "VBP"):
            do_form = {"VBD": "did", "VBZ": "does", "VBP": "do"}[verb.pos]
            base = (
                verb.surface.lower()
                if verb.pos == "VBP"
                else base_verb_form(verb.surface.lower())
            )
            words = (
                [phrase.wh_phrase, do_form]
                + _surfaces(sentence, pre, lower_initial=True)
                + [base]
                + _surfaces(sentence, post, lower_initial=True)
            )
        else:
            raise UnsupportedStructure(f"cannot invert around {verb.pos}")

    text = postprocess(_join(words))
    return QuestionCandidate(
        question_text=text,
        wh_word=phrase.wh_word,
        model_answer=phrase.surface,
        source_sentence=sentence.char_span,
        source_cue_range=(0, 0),  # filled by generate()
        segment_id=segment_id,
    )


def _join(words: list[str]) -> str:
    """Join surfaces, attaching punctuation to the preceding word."""
    out = ""
    for word in words:
        if out and (word in _SENTENCE_PUNCT or word == ","):
            out += word
        else:
            out = f"{out} {word}" if out else word
    return out


def postprocess(text: str) -> str:
    """Normalize spacing, commas, capitalization and the terminal mark."""
    text = re.sub(r"\s+", " ", text).strip()
    text = re.sub(r"(?:\s|^),(?=\s|$)", "", text)  # stranded commas
    text = re.sub(r",\s*(?=,)", "", text)          # doubled commas
    text = re.sub(r"\s+", " ", text).strip()
    text = text.rstrip(" .!?,;:")
    text = re.sub(r"\s+([.!?,;:])", r"\1", text)
    if text and text[0].isalpha():
        text = text[0].upper() + text[1:]
    return text + "?"


def generate(
    segment_id: int,
    sentences: list[Sentence],
    tt: TimedText,
    keep_vague: bool = True,
) -> tuple[list[QuestionCandidate], GenerationReport]:
    """Candidates for one segment, in sentence order then phrase order.

    Vague-pronoun sentences are kept but flagged by default; with
    *keep_vague* off they are dropped before transformation.
    """
    report = GenerationReport(segment_id=segment_id, sentences=len(sentences))
    candidates: list[QuestionCandidate] = []
    for sent in eligible_sentences(sentences):
        vague = has_vague_subject(sent)
        if vague and not keep_vague:
            continue
        report.eligible += 1
        for phrase in answer_phrases(sent):
            try:
                cand = transform(sent, phrase, segment_id)
            except UnsupportedStructure:
                report.skipped += 1
                continue
            first, last = sent.char_span
            cand.source_cue_range = (
                cue_for_offset(tt, first),
                cue_for_offset(tt, last - 1),
            )
            if vague:
                cand.flags.add(VAGUE_PRONOUN)
            candidates.append(cand)
            report.emitted += 1
    return candidates, report
