"""Command-line entry point.

    lecturequiz generate --srt lecture.srt --detections det.json --out bank.json
    lecturequiz segment  --srt lecture.srt [--dump-scores gaps.csv]
    lecturequiz grade    --bank bank.json --question q0001 --answer "..."
    lecturequiz evaluate --bank bank.json --judgments judged.csv
    lecturequiz serve    --bank bank.json --port 8080 --state ./state

Exit codes: 0 success, 1 input error, 2 configuration error. Human
output goes to stdout, diagnostics to stderr. The same inputs and
configuration always produce a byte-identical bank file.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass, replace
from pathlib import Path

from . import evalmetrics, feedback, imagelink, qgen, rank_assign, service, tiling, wordnet
from .textproc import annotate
from .transcript import TranscriptError, flatten, parse_srt


class ConfigError(Exception):
    pass


@dataclass(frozen=True)
class PipelineConfig:
    tiling_pseudo_sentence_size: int = 20
    tiling_block_size: int = 10
    tiling_smoothing_width: int = 1
    tiling_smoothing_rounds: int = 1
    qgen_keep_vague: bool = True
    link_pad_ms: int = 2000
    link_min_confidence: float = 0.5
    rank_weights: tuple[float, ...] = rank_assign.DEFAULT_WEIGHTS
    rank_score_threshold: float = 0.0
    feedback_high: float = 0.75
    feedback_medium: float = 0.45
    total_questions: int | None = None
    selection_quiz_id: str = ""

    def tiling_params(self) -> tiling.TilingParams:
        return tiling.TilingParams(
            pseudo_sentence_size=self.tiling_pseudo_sentence_size,
            block_size=self.tiling_block_size,
            smoothing_width=self.tiling_smoothing_width,
            smoothing_rounds=self.tiling_smoothing_rounds,
        )

    def thresholds(self) -> feedback.GradeThresholds:
        return feedback.GradeThresholds(
            high=self.feedback_high, medium=self.feedback_medium
        )

    def snapshot(self) -> dict:
        return {
            "tiling.pseudo_sentence_size": self.tiling_pseudo_sentence_size,
            "tiling.block_size": self.tiling_block_size,
            "tiling.smoothing_width": self.tiling_smoothing_width,
            "tiling.smoothing_rounds": self.tiling_smoothing_rounds,
            "qgen.keep_vague": self.qgen_keep_vague,
            "link.pad_ms": self.link_pad_ms,
            "link.min_confidence": self.link_min_confidence,
            "rank.weights": list(self.rank_weights),
            "rank.score_threshold": self.rank_score_threshold,
            "feedback.high": self.feedback_high,
            "feedback.medium": self.feedback_medium,
            "total_questions": self.total_questions,
            "selection.quiz_id": self.selection_quiz_id,
        }


def _parse_bool(raw: str, key: str) -> bool:
    if raw.lower() in ("true", "1", "yes"):
        return True
    if raw.lower() in ("false", "0", "no"):
        return False
    raise ConfigError(f"{key}: expected true/false, got {raw!r}")


def _int_in(raw: str, key: str, lo: int, hi: int) -> int:
    try:
        value = int(raw)
    except ValueError as exc:
        raise ConfigError(f"{key}: not an integer: {raw!r}") from exc
    if not lo <= value <= hi:
        raise ConfigError(f"{key}: {value} outside [{lo}, {hi}]")
    return value


def _float_in(raw: str, key: str, lo: float, hi: float) -> float:
    try:
        value = float(raw)
    except ValueError as exc:
        raise ConfigError(f"{key}: not a number: {raw!r}") from exc
    if not lo <= value <= hi:
        raise ConfigError(f"{key}: {value} outside [{lo}, {hi}]")
    return value


def parse_config(path) -> PipelineConfig:
    """Flat key=value file; blank lines and #-comments ignored; unknown
    keys are rejected."""
    config = PipelineConfig()
    updates = {}
    for lineno, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key=value, got {line!r}")
        key, _, raw = line.partition("=")
        key, raw = key.strip(), raw.strip()
        if key == "tiling.pseudo_sentence_size":
            updates["tiling_pseudo_sentence_size"] = _int_in(raw, key, 2, 500)
        elif key == "tiling.block_size":
            updates["tiling_block_size"] = _int_in(raw, key, 1, 100)
        elif key == "tiling.smoothing_width":
            updates["tiling_smoothing_width"] = _int_in(raw, key, 0, 10)
        elif key == "tiling.smoothing_rounds":
            updates["tiling_smoothing_rounds"] = _int_in(raw, key, 0, 10)
        elif key == "qgen.keep_vague":
            updates["qgen_keep_vague"] = _parse_bool(raw, key)
        elif key == "link.pad_ms":
            updates["link_pad_ms"] = _int_in(raw, key, 0, 3_600_000)
        elif key == "link.min_confidence":
            updates["link_min_confidence"] = _float_in(raw, key, 0.0, 1.0)
        elif key == "rank.weights":
            parts = [p.strip() for p in raw.split(",")]
            if len(parts) != len(rank_assign.FEATURE_NAMES):
                raise ConfigError(
                    f"{key}: expected {len(rank_assign.FEATURE_NAMES)} weights"
                )
            try:
                updates["rank_weights"] = tuple(float(p) for p in parts)
            except ValueError as exc:
                raise ConfigError(f"{key}: bad weight in {raw!r}") from exc
        elif key == "rank.score_threshold":
            updates["rank_score_threshold"] = _float_in(raw, key, -100.0, 100.0)
        elif key == "feedback.high":
            updates["feedback_high"] = _float_in(raw, key, 0.0, 1.0)
        elif key == "feedback.medium":
            updates["feedback_medium"] = _float_in(raw, key, 0.0, 1.0)
        elif key == "total_questions":
            updates["total_questions"] = _int_in(raw, key, 0, 10_000)
        elif key == "selection.quiz_id":
            updates["selection_quiz_id"] = raw
        else:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
    config = replace(config, **updates)
    if not config.feedback_medium < config.feedback_high:
        raise ConfigError("feedback.medium must be below feedback.high")
    return config


def build_bank(
    srt_path, config: PipelineConfig, detections_path=None
) -> tuple[rank_assign.QuestionBank, dict]:
    """Full pipeline: parse, segment, generate, link, score."""
    raw = Path(srt_path).read_text(encoding="utf-8")
    doc = parse_srt(raw, source_id=Path(srt_path).stem)
    segments = tiling.segment_transcript(doc, config.tiling_params())
    tt = flatten(doc)
    sentences = annotate(tt)

    questions = []
    reports = []
    for segment in segments:
        lo, hi = segment.char_span
        segment_sentences = [s for s in sentences if lo <= s.char_span[0] <= hi]
        cands, report = qgen.generate(
            segment.segment_id, segment_sentences, tt, keep_vague=config.qgen_keep_vague
        )
        questions.extend(cands)
        reports.append(report)

    detections = (
        imagelink.parse_detections(detections_path) if detections_path else None
    )
    tally = imagelink.apply_links(
        questions,
        detections,
        doc,
        min_confidence=config.link_min_confidence,
        pad_ms=config.link_pad_ms,
    )
    questions = [q for q in questions if q.link_outcome != imagelink.DISCARDED]
    for n, q in enumerate(questions, start=1):
        q.question_id = f"q{n:04d}"
        q.features = rank_assign.extract_features(q)
        rank_assign.score(q, config.rank_weights)

    bank = rank_assign.QuestionBank(
        source_id=doc.source_id,
        video_duration_ms=doc.cues[-1].end_ms,
        segments=segments,
        questions=questions,
        config=config.snapshot(),
        generation_report=reports,
    )
    return bank, tally


def _fmt_ms(ms: int) -> str:
    s = ms // 1000
    return f"{s // 60:02d}:{s % 60:02d}"


def cmd_generate(args) -> int:
    config = parse_config(args.config) if args.config else PipelineConfig()
    if args.total is not None:
        config = replace(config, total_questions=args.total)
    bank, tally = build_bank(args.srt, config, args.detections)
    rank_assign.save_bank(bank, args.out)
    generated = sum(r.emitted for r in bank.generation_report)
    print(f"source:    {bank.source_id}")
    print(f"segments:  {len(bank.segments)}")
    print(f"generated: {generated}")
    print(f"linked:    {tally[imagelink.LINKED]}")
    print(f"discarded: {tally[imagelink.DISCARDED]}")
    print(f"kept:      {len(bank.questions)}")
    print(f"bank:      {args.out}")
    return 0


def cmd_segment(args) -> int:
    config = parse_config(args.config) if args.config else PipelineConfig()
    raw = Path(args.srt).read_text(encoding="utf-8")
    doc = parse_srt(raw, source_id=Path(args.srt).stem)
    segments = tiling.segment_transcript(doc, config.tiling_params())
    print(f"{'id':>4}  {'start':>7}  {'end':>7}  {'cues':>9}  duration")
    for seg in segments:
        first, last = seg.cue_range
        start = doc.cues[first - 1].start_ms
        end = doc.cues[last - 1].end_ms
        print(
            f"{seg.segment_id:>4}  {_fmt_ms(start):>7}  {_fmt_ms(end):>7}  "
            f"{first:>4}-{last:<4}  {_fmt_ms(seg.duration_ms)}"
        )
    if args.dump_scores:
        try:
            gaps, selected = tiling.gap_profile(doc, config.tiling_params())
        except tiling.TooShort:
            gaps, selected = [], []
        with open(args.dump_scores, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["gap_index", "cohesion", "smoothed", "depth", "selected"])
            for gap in gaps:
                writer.writerow(
                    [
                        gap.gap_index,
                        f"{gap.cohesion:.6f}",
                        f"{gap.smoothed:.6f}",
                        f"{gap.depth:.6f}",
                        int(gap.gap_index in selected),
                    ]
                )
        print(f"scores:    {args.dump_scores}", file=sys.stderr)
    return 0


def cmd_grade(args) -> int:
    bank = rank_assign.load_bank(args.bank)
    try:
        question = bank.question_by_id(args.question)
    except KeyError:
        print(f"error: unknown question id {args.question!r}", file=sys.stderr)
        return 1
    thresholds = feedback.GradeThresholds(
        high=bank.config.get("feedback.high", 0.75),
        medium=bank.config.get("feedback.medium", 0.45),
    )
    graph = wordnet.load_wordnet(wordnet.resolve_wordnet_dir(args.wordnet))
    result = feedback.grade(args.answer, question.model_answer, graph, thresholds)
    print(f"question:   {question.question_text}")
    print(f"similarity: {result.similarity:.4f}")
    print(f"grade:      {result.grade}")
    if result.per_word:
        print(f"{'answer word':<20} {'best model word':<20} similarity")
        for word, match, sim in result.per_word:
            print(f"{word:<20} {match or '-':<20} {sim:.4f}")
    return 0


def cmd_evaluate(args) -> int:
    bank = rank_assign.load_bank(args.bank)
    judgments = evalmetrics.parse_judgments(args.judgments)
    rep = evalmetrics.report(bank, judgments)

    def fmt(value):
        return "n/a" if value is None else f"{value:.4f}"

    print(f"generated: {rep.generated}")
    print(f"kept:      {rep.generated - rep.discarded}")
    print(f"linked:    {rep.linked}")
    print(f"discarded: {rep.discarded}")
    print(f"unlinked:  {rep.unlinked}")
    print(f"correct_timestamp_accuracy: {fmt(rep.correct_timestamp_accuracy)}")
    print(f"relevant_accuracy:          {fmt(rep.relevant_accuracy)}")
    if rep.unjudged_linked:
        print(f"unjudged linked questions:  {', '.join(rep.unjudged_linked)}")
    return 0


def cmd_serve(args) -> int:
    bank = rank_assign.load_bank(args.bank)
    thresholds = feedback.GradeThresholds(
        high=bank.config.get("feedback.high", 0.75),
        medium=bank.config.get("feedback.medium", 0.45),
    )
    graph = wordnet.load_wordnet(wordnet.resolve_wordnet_dir(args.wordnet))
    frames_dir = args.frames or (Path(args.bank).parent / "frames")
    svc = service.QuizService(
        bank,
        graph,
        state_dir=args.state,
        thresholds=thresholds,
        frames_dir=frames_dir,
        total_questions=args.total,
    )
    try:
        server = service.make_server(svc, args.port, host=args.host)
    except OSError as exc:
        print(f"error: cannot bind port {args.port}: {exc}", file=sys.stderr)
        return 1
    print(f"serving bank {bank.source_id!r} on {args.host}:{server.server_address[1]}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        print("shutting down", file=sys.stderr)
    finally:
        server.server_close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lecturequiz",
        description="Generate, serve and grade quiz questions from lecture subtitles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="build a question bank from an SRT file")
    p.add_argument("--srt", required=True)
    p.add_argument("--detections")
    p.add_argument("--config")
    p.add_argument("--total", type=int)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("segment", help="show subtopic segments")
    p.add_argument("--srt", required=True)
    p.add_argument("--config")
    p.add_argument("--dump-scores")
    p.set_defaults(func=cmd_segment)

    p = sub.add_parser("grade", help="grade one answer against the model answer")
    p.add_argument("--bank", required=True)
    p.add_argument("--question", required=True)
    p.add_argument("--answer", required=True)
    p.add_argument("--wordnet")
    p.set_defaults(func=cmd_grade)

    p = sub.add_parser("evaluate", help="intrinsic metrics from a judgments CSV")
    p.add_argument("--bank", required=True)
    p.add_argument("--judgments", required=True)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("serve", help="run the quiz HTTP service")
    p.add_argument("--bank", required=True)
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--state", required=True)
    p.add_argument("--frames")
    p.add_argument("--wordnet")
    p.add_argument("--total", type=int)
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (TranscriptError, imagelink.DetectionError, wordnet.WordNetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (evalmetrics.ValidationError, evalmetrics.UnknownQuestionId) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
