"""Walk a lecture transcript through subtopic segmentation.

Shows the cohesion/depth profile behind the chosen boundaries, the
same numbers `lecturequiz segment --dump-scores` writes to CSV.
"""

from pathlib import Path

from lecturequiz.tiling import gap_profile, segment_transcript
from lecturequiz.transcript import parse_srt

SRT = Path(__file__).resolve().parents[1] / "tests" / "data" / "ml_lecture_01.srt"


def fmt(ms):
    return f"{ms // 60000:02d}:{ms % 60000 // 1000:02d}"


doc = parse_srt(SRT.read_text(encoding="utf-8"), source_id=SRT.stem)
print(f"{len(doc.cues)} cues, {fmt(doc.cues[-1].end_ms)} of video\n")

segments = segment_transcript(doc)
print("segments:")
for seg in segments:
    first, last = seg.cue_range
    start, end = doc.cues[first - 1].start_ms, doc.cues[last - 1].end_ms
    preview = doc.cues[first - 1].text[:60]
    print(f"  #{seg.segment_id}  {fmt(start)}-{fmt(end)}  cues {first}-{last}  «{preview}…»")

gaps, selected = gap_profile(doc)
print("\ngap profile (* = boundary):")
for gap in gaps:
    bar = "#" * int(gap.smoothed * 40)
    mark = " *" if gap.gap_index in selected else ""
    print(f"  gap {gap.gap_index:2d}  cohesion={gap.smoothed:5.3f}  depth={gap.depth:5.3f}  {bar}{mark}")
