"""Subtopic segmentation of transcripts by lexical cohesion.

The flattened transcript is reduced to its stemmed content words,
grouped into fixed-size pseudo-sentences, and scored at every gap by
the cosine similarity of the stem-frequency vectors of the blocks on
either side. Valleys in the smoothed score profile mark topic shifts:
each gap's depth is the climb to its nearest left and right peaks, and
gaps deeper than mean - stddev/2 become segment boundaries (subject to
a minimum separation of 2 gaps). Boundaries map back to cues through
the character offset of the first token after the gap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import textproc
from .textproc.tokens import Token
from .transcript import TimedText, TranscriptDocument, cue_for_offset, flatten


class TooShort(Exception):
    """Fewer than two pseudo-sentences: nothing to segment."""


@dataclass(frozen=True)
class TilingParams:
    pseudo_sentence_size: int = 20  # stems per pseudo-sentence (w)
    block_size: int = 10            # pseudo-sentences per comparison block (k)
    smoothing_width: int = 1
    smoothing_rounds: int = 1
    min_separation: int = 2         # chosen gaps must be at least this far apart


@dataclass(frozen=True)
class PseudoSentence:
    stems: tuple[str, ...]
    first_token_offset: int


@dataclass(frozen=True)
class GapScore:
    gap_index: int
    cohesion: float
    smoothed: float
    depth: float


@dataclass(frozen=True)
class Segment:
    segment_id: int
    cue_range: tuple[int, int]  # inclusive cue indices
    char_span: tuple[int, int]
    duration_ms: int


def build_pseudo_sentences(
    tokens: Sequence[Token], w: int = 20
) -> list[PseudoSentence]:
    """Group stemmed content tokens into runs of *w* stems.

    The final partial group is dropped when shorter than w/2 and kept
    otherwise. Raises TooShort when fewer than two groups survive.
    """
    if w < 2:
        raise ValueError("pseudo-sentence size must be >= 2")
    groups: list[PseudoSentence] = []
    for i in range(0, len(tokens), w):
        chunk = tokens[i : i + w]
        groups.append(
            PseudoSentence(
                stems=tuple(t.stem for t in chunk),
                first_token_offset=chunk[0].char_span[0],
            )
        )
    if groups and len(groups[-1].stems) < w / 2:
        groups.pop()
    if len(groups) < 2:
        raise TooShort(f"{len(groups)} pseudo-sentence(s); need at least 2")
    return groups


def _freq(block: Sequence[PseudoSentence]) -> dict[str, int]:
    counts: dict[str, int] = {}
    for ps in block:
        for stem in ps.stems:
            counts[stem] = counts.get(stem, 0) + 1
    return counts


def _cosine(a: dict[str, int], b: dict[str, int]) -> float:
    dot = sum(count * b.get(stem, 0) for stem, count in a.items())
    norm_a = math.sqrt(sum(c * c for c in a.values()))
    norm_b = math.sqrt(sum(c * c for c in b.values()))
    if norm_a == 0.0 or norm_b == 0.0:
        return 0.0
    return dot / (norm_a * norm_b)


def cohesion_scores(ps: Sequence[PseudoSentence], k: int = 10) -> list[float]:
    """Cosine similarity across each gap, using up to *k* pseudo-sentences
    on each side."""
    if len(ps) < 2:
        raise TooShort("need at least 2 pseudo-sentences")
    if k < 1:
        raise ValueError("block size must be >= 1")
    scores = []
    for gap in range(len(ps) - 1):
        left = ps[max(0, gap - k + 1) : gap + 1]
        right = ps[gap + 1 : gap + 1 + k]
        scores.append(_cosine(_freq(left), _freq(right)))
    return scores


def smooth(scores: Sequence[float], width: int = 1, rounds: int = 1) -> list[float]:
    """Mean filter over *width* neighbors each side, truncated at the
    ends; repeated *rounds* times. Width 0 is the identity."""
    if width < 0:
        raise ValueError("width must be >= 0")
    out = list(scores)
    if width == 0:
        return out
    for _ in range(rounds):
        out = [
            float(np.mean(out[max(0, i - width) : i + width + 1]))
            for i in range(len(out))
        ]
    return out


def depth_scores(scores: Sequence[float]) -> list[float]:
    """Valley depth per gap: climb left and right through non-decreasing
    scores (plateaus included) and sum both rises."""
    depths = []
    for g, s in enumerate(scores):
        left = s
        for j in range(g - 1, -1, -1):
            if scores[j] >= left:
                left = scores[j]
            else:
                break
        right = s
        for j in range(g + 1, len(scores)):
            if scores[j] >= right:
                right = scores[j]
            else:
                break
        depths.append((left - s) + (right - s))
    return depths


def _is_valley(gaps: Sequence[GapScore], i: int) -> bool:
    s = gaps[i].smoothed
    left_ok = i == 0 or gaps[i - 1].smoothed >= s
    right_ok = i == len(gaps) - 1 or gaps[i + 1].smoothed >= s
    return left_ok and right_ok


def select_boundaries(gaps: Sequence[GapScore], min_separation: int = 2) -> list[int]:
    """Valley gaps whose depth strictly exceeds mean - stddev/2.

    Only local minima of the smoothed profile qualify: a gap partway
    down a slope can carry a large climb total without being a topic
    shift itself. Candidates are taken deepest first (ties to the
    earlier gap) and near-duplicates closer than *min_separation* are
    suppressed; the result is ascending.
    """
    if not gaps:
        return []
    depths = np.array([g.depth for g in gaps], dtype=float)
    threshold = float(np.mean(depths) - np.std(depths) / 2.0)
    candidates = sorted(
        (g for i, g in enumerate(gaps) if g.depth > threshold and _is_valley(gaps, i)),
        key=lambda g: (-g.depth, g.gap_index),
    )
    chosen: list[int] = []
    for gap in candidates:
        if all(abs(gap.gap_index - c) >= min_separation for c in chosen):
            chosen.append(gap.gap_index)
    return sorted(chosen)


def _content_tokens(tt: TimedText) -> list[Token]:
    tokens = textproc.tokenize(tt.text)
    textproc.add_stems(tokens)
    textproc.remove_stopwords(tokens)
    return [t for t in tokens if not t.is_stopword]


def gap_profile(
    doc: TranscriptDocument, params: TilingParams = TilingParams()
) -> tuple[list[GapScore], list[int]]:
    """Score profile for diagnostics: (gap scores, selected gap indices)."""
    tt = flatten(doc)
    ps = build_pseudo_sentences(_content_tokens(tt), params.pseudo_sentence_size)
    cohesion = cohesion_scores(ps, params.block_size)
    smoothed = smooth(cohesion, params.smoothing_width, params.smoothing_rounds)
    depths = depth_scores(smoothed)
    gaps = [
        GapScore(i, cohesion[i], smoothed[i], depths[i]) for i in range(len(cohesion))
    ]
    return gaps, select_boundaries(gaps, params.min_separation)


def segment_transcript(
    doc: TranscriptDocument, params: TilingParams = TilingParams()
) -> list[Segment]:
    """Split a transcript into contiguous subtopic segments.

    Transcripts too short to form two pseudo-sentences come back as a
    single segment spanning every cue.
    """
    if not doc.cues:
        raise ValueError("empty document")
    tt = flatten(doc)
    boundary_cues: list[int] = []
    try:
        ps = build_pseudo_sentences(_content_tokens(tt), params.pseudo_sentence_size)
        cohesion = cohesion_scores(ps, params.block_size)
        smoothed = smooth(cohesion, params.smoothing_width, params.smoothing_rounds)
        depths = depth_scores(smoothed)
        gaps = [
            GapScore(i, cohesion[i], smoothed[i], depths[i])
            for i in range(len(cohesion))
        ]
        for gap_index in select_boundaries(gaps, params.min_separation):
            offset = ps[gap_index + 1].first_token_offset
            cue = cue_for_offset(tt, offset)
            if cue > 1 and cue not in boundary_cues:
                boundary_cues.append(cue)
    except TooShort:
        pass
    boundary_cues.sort()

    segments: list[Segment] = []
    starts = [1] + boundary_cues
    ends = [c - 1 for c in boundary_cues] + [len(doc.cues)]
    for seg_id, (first, last) in enumerate(zip(starts, ends), start=1):
        cues = doc.cues[first - 1 : last]
        segments.append(
            Segment(
                segment_id=seg_id,
                cue_range=(first, last),
                char_span=(tt.offset_map[first - 1][0], tt.offset_map[last - 1][1]),
                duration_ms=sum(c.end_ms - c.start_ms for c in cues),
            )
        )
    return segments
