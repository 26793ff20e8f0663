"""Build a question bank in memory and look inside it.

The same steps `lecturequiz generate` runs, with the intermediate
objects visible: segments, candidates per segment, link outcomes,
features and scores.
"""

from pathlib import Path

from lecturequiz.cli import PipelineConfig, build_bank

DATA = Path(__file__).resolve().parents[1] / "tests" / "data"

bank, tally = build_bank(
    DATA / "ml_lecture_01.srt",
    PipelineConfig(),
    DATA / "ml_lecture_01.detections.json",
)

print(f"bank for {bank.source_id!r}: {len(bank.questions)} questions "
      f"in {len(bank.segments)} segments")
print(f"link outcomes: {tally}\n")

for seg in bank.segments:
    questions = [q for q in bank.questions if q.segment_id == seg.segment_id]
    print(f"segment {seg.segment_id} ({seg.duration_ms // 1000}s, {len(questions)} questions)")
    best = sorted(questions, key=lambda q: -q.score)[:3]
    for q in best:
        tag = "IMG" if q.link_outcome == "LINKED" else "   "
        print(f"  [{tag}] {q.score:+.2f}  {q.question_text}")
        print(f"         answer: {q.model_answer}")
    print()

linked = [q for q in bank.questions if q.link_outcome == "LINKED"]
print("image-linked questions:")
for q in linked:
    print(f"  {q.question_id}  @{q.image_link.timestamp_ms / 1000:.0f}s "
          f"({q.image_link.label}, conf {q.image_link.confidence})  {q.question_text}")
