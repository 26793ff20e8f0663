"""Subtitle transcripts: the SRT cue model and its canonical file form.

A parsed document is normalized (cues re-indexed 1..N, strictly
increasing start times) and immutable by convention; parsing and
serialization are inverse up to canonical formatting. ``flatten`` turns
a document into one string plus an offset map so any character position
can be traced back to its cue.
"""

from __future__ import annotations

import json
import re
import subprocess
from bisect import bisect_right
from dataclasses import dataclass


class TranscriptError(Exception):
    pass


class MalformedTimestamp(TranscriptError):
    pass


class EmptyDocument(TranscriptError):
    pass


class OverlapRejected(TranscriptError):
    pass


class OutOfRange(TranscriptError):
    pass


class ChunkTooLong(TranscriptError):
    pass


class AdapterFailure(TranscriptError):
    pass


MAX_CHUNK_MS = 60_000  # synchronous speech-to-text limit per audio segment


@dataclass(frozen=True)
class Cue:
    index: int
    start_ms: int
    end_ms: int
    text: str

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"cue index must be positive, got {self.index}")
        if not self.start_ms < self.end_ms:
            raise MalformedTimestamp(
                f"cue {self.index}: start {self.start_ms} must precede end {self.end_ms}"
            )
        if not self.text.strip():
            raise ValueError(f"cue {self.index}: empty text")
        if any(not line.strip() for line in self.text.split("\n")):
            raise ValueError(f"cue {self.index}: blank line inside text")


@dataclass(frozen=True)
class TranscriptDocument:
    cues: tuple[Cue, ...]
    source_id: str = ""

    def __post_init__(self):
        object.__setattr__(self, "cues", tuple(self.cues))
        for prev, cur in zip(self.cues, self.cues[1:]):
            if cur.start_ms <= prev.start_ms:
                raise OverlapRejected(
                    f"cue {cur.index} starts at {cur.start_ms} <= previous start {prev.start_ms}"
                )
        for i, cue in enumerate(self.cues, start=1):
            if cue.index != i:
                raise ValueError(f"cue indices not consecutive at position {i}")

    @property
    def duration_ms(self) -> int:
        return sum(c.end_ms - c.start_ms for c in self.cues)


@dataclass(frozen=True)
class TimedText:
    text: str
    offset_map: tuple[tuple[int, int, int], ...]  # (char_start, char_end, cue_index)


@dataclass(frozen=True)
class SttChunk:
    audio_ref: str
    chunk_start_ms: int
    duration_ms: int


_TS_RE = re.compile(r"^(\d{1,3}):(\d{1,2}):(\d{1,2})[,.](\d{1,3})$")
_ARROW_RE = re.compile(r"\s*-->\s*")
_TAG_RE = re.compile(r"<[^>]*>|\{[^}]*\}")


def _parse_timestamp(raw: str) -> int:
    m = _TS_RE.match(raw.strip())
    if not m:
        raise MalformedTimestamp(f"bad timestamp {raw!r}")
    h, mi, s, ms = (int(g) for g in m.groups())
    if mi >= 60 or s >= 60:
        raise MalformedTimestamp(f"bad timestamp {raw!r}")
    return ((h * 60 + mi) * 60 + s) * 1000 + ms


def _format_timestamp(ms: int) -> str:
    s, ms = divmod(ms, 1000)
    mi, s = divmod(s, 60)
    h, mi = divmod(mi, 60)
    return f"{h:02d}:{mi:02d}:{s:02d},{ms:03d}"


def _normalize(raw_cues: list[tuple[int, int, str]], source_id: str) -> TranscriptDocument:
    """Merge equal-start duplicates, reject backward starts, re-index."""
    merged: list[list] = []
    for start, end, text in raw_cues:
        if merged and start == merged[-1][0]:
            merged[-1][1] = max(merged[-1][1], end)
            merged[-1][2] = f"{merged[-1][2]} {text}"
        elif merged and start < merged[-1][0]:
            raise OverlapRejected(
                f"cue starting at {start} ms precedes previous start {merged[-1][0]} ms"
            )
        else:
            merged.append([start, end, text])
    cues = tuple(
        Cue(index=i, start_ms=s, end_ms=e, text=t)
        for i, (s, e, t) in enumerate(merged, start=1)
    )
    return TranscriptDocument(cues=cues, source_id=source_id)


def parse_srt(raw: str, source_id: str = "") -> TranscriptDocument:
    """Parse SRT text into a normalized document.

    Accepts LF or CRLF line endings and an optional BOM; styling spans
    (``<...>`` and ``{...}``) are stripped. Blocks whose text is empty
    after cleanup are dropped; a document with no parsable cue at all is
    an error.
    """
    text = raw.lstrip("﻿").replace("\r\n", "\n").replace("\r", "\n")
    blocks = [b for b in re.split(r"\n\s*\n", text) if b.strip()]
    raw_cues: list[tuple[int, int, str]] = []
    for block in blocks:
        lines = [ln for ln in block.split("\n") if ln.strip()]
        if not lines:
            continue
        if "-->" not in lines[0]:
            lines = lines[1:]  # leading index line; re-indexed later anyway
        if not lines or "-->" not in lines[0]:
            raise MalformedTimestamp(f"block without timestamp line: {block[:60]!r}")
        parts = _ARROW_RE.split(lines[0])
        if len(parts) != 2:
            raise MalformedTimestamp(f"bad timing line {lines[0]!r}")
        start_ms = _parse_timestamp(parts[0])
        end_ms = _parse_timestamp(parts[1])
        if start_ms >= end_ms:
            raise MalformedTimestamp(
                f"start {parts[0].strip()} not before end {parts[1].strip()}"
            )
        cleaned = [_TAG_RE.sub("", ln).rstrip() for ln in lines[1:]]
        cleaned = [ln for ln in cleaned if ln.strip()]
        if not cleaned:
            continue
        raw_cues.append((start_ms, end_ms, "\n".join(cleaned)))
    if not raw_cues:
        raise EmptyDocument("no parsable cues")
    return _normalize(raw_cues, source_id)


def serialize_srt(doc: TranscriptDocument) -> str:
    """Canonical SRT: 1-based indices, comma timestamps, LF endings,
    one blank line between blocks, trailing newline."""
    blocks = []
    for cue in doc.cues:
        assert cue.text.strip(), "cue text must be non-empty"
        blocks.append(
            f"{cue.index}\n"
            f"{_format_timestamp(cue.start_ms)} --> {_format_timestamp(cue.end_ms)}\n"
            f"{cue.text}"
        )
    return "\n\n".join(blocks) + "\n"


def flatten(doc: TranscriptDocument) -> TimedText:
    """Join cue texts with single spaces; newlines become spaces."""
    pieces = []
    offsets = []
    pos = 0
    for cue in doc.cues:
        body = cue.text.replace("\n", " ")
        pieces.append(body)
        offsets.append((pos, pos + len(body), cue.index))
        pos += len(body) + 1  # separator space
    return TimedText(text=" ".join(pieces), offset_map=tuple(offsets))


def cue_for_offset(tt: TimedText, offset: int) -> int:
    """Cue index owning the character at *offset*; separators resolve to
    the preceding cue."""
    if offset < 0 or offset >= len(tt.text):
        raise OutOfRange(f"offset {offset} outside [0, {len(tt.text)})")
    starts = [entry[0] for entry in tt.offset_map]
    i = bisect_right(starts, offset) - 1
    return tt.offset_map[i][2]


def transcribe_chunks(chunks, adapter, source_id: str = "") -> TranscriptDocument:
    """Run the adapter per chunk and fold results into one document.

    The adapter contract is ``recognize(audio_ref) -> [(start_ms, end_ms,
    text), ...]`` with times relative to the chunk start. Phrase times
    are shifted by each chunk's offset; chunks must respect the
    60-second synchronous limit.
    """
    chunks = list(chunks)
    if not chunks:
        raise EmptyDocument("no chunks to transcribe")
    raw_cues: list[tuple[int, int, str]] = []
    for chunk in chunks:
        if chunk.duration_ms > MAX_CHUNK_MS:
            raise ChunkTooLong(
                f"chunk {chunk.audio_ref!r} is {chunk.duration_ms} ms (limit {MAX_CHUNK_MS})"
            )
        try:
            phrases = adapter.recognize(chunk.audio_ref)
        except Exception as exc:
            raise AdapterFailure(f"chunk {chunk.audio_ref!r}: {exc}") from exc
        for rel_start, rel_end, text in phrases:
            raw_cues.append(
                (chunk.chunk_start_ms + rel_start, chunk.chunk_start_ms + rel_end, text)
            )
    if not raw_cues:
        raise EmptyDocument("adapter returned no phrases")
    return _normalize(raw_cues, source_id)


class FixtureSttAdapter:
    """Replays phrases from a sidecar JSON fixture.

    The fixture is an array of ``{"audio_ref": ..., "phrases":
    [{"start_ms": ..., "end_ms": ..., "text": ...}, ...]}`` entries.
    """

    def __init__(self, fixture_path):
        with open(fixture_path, encoding="utf-8") as fh:
            entries = json.load(fh)
        self._phrases = {
            e["audio_ref"]: [(p["start_ms"], p["end_ms"], p["text"]) for p in e["phrases"]]
            for e in entries
        }

    def recognize(self, audio_ref: str):
        if audio_ref not in self._phrases:
            raise KeyError(f"no fixture entry for {audio_ref!r}")
        return self._phrases[audio_ref]


class CommandSttAdapter:
    """Invokes an external recognizer: ``command <audio_ref>`` must print
    a JSON array of ``{"start_ms", "end_ms", "text"}`` objects."""

    def __init__(self, command: list[str]):
        self.command = list(command)

    def recognize(self, audio_ref: str):
        proc = subprocess.run(
            self.command + [audio_ref], capture_output=True, text=True, check=True
        )
        phrases = json.loads(proc.stdout)
        return [(p["start_ms"], p["end_ms"], p["text"]) for p in phrases]
