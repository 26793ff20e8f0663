import json
import sys

import pytest

from lecturequiz import imagelink, qgen
from lecturequiz.imagelink import (
    DISCARDED,
    LINKED,
    UNLINKED,
    CommandFrameExtractor,
    DetectionRecord,
    DetectionSet,
    SchemaError,
    SourceMismatch,
    UnknownLabel,
    extract_frame,
    label_in_question,
    link,
    parse_detections,
    source_time_range,
)
from lecturequiz.transcript import Cue, TranscriptDocument

LABELS = ("equation", "graph", "neural network")


def question(text, answer="", cue_range=(1, 1)):
    return qgen.QuestionCandidate(
        question_text=text,
        wh_word="What",
        model_answer=answer,
        source_sentence=(0, 10),
        source_cue_range=cue_range,
        segment_id=1,
    )


def detection_set(records, source_id="doc"):
    return DetectionSet(source_id=source_id, class_labels=LABELS, records=tuple(records))


def record(ts, label="equation", conf=0.9):
    return DetectionRecord(timestamp_ms=ts, label=label, confidence=conf, bbox=(0.1, 0.1, 0.5, 0.5))


@pytest.fixture()
def doc():
    return TranscriptDocument(
        cues=(Cue(1, 10_000, 14_000, "first"), Cue(2, 20_000, 24_000, "second")),
        source_id="doc",
    )


class TestParseDetections:
    def test_fixture_file(self, detections_path):
        det = parse_detections(detections_path)
        assert det.source_id == "ml_lecture_01"
        assert det.class_labels == LABELS
        assert len(det.records) == 4
        assert [r.timestamp_ms for r in det.records] == sorted(
            r.timestamp_ms for r in det.records
        )

    def test_single_record(self, tmp_path):
        path = tmp_path / "d.json"
        path.write_text(json.dumps({
            "source_id": "x", "class_labels": ["equation"],
            "records": [{"timestamp_ms": 278000, "label": "equation",
                          "confidence": 0.91, "bbox": [0.1, 0.1, 0.4, 0.4]}],
        }))
        det = parse_detections(path)
        assert len(det.records) == 1 and det.records[0].confidence == 0.91

    def test_confidence_out_of_range(self, tmp_path):
        path = tmp_path / "d.json"
        path.write_text(json.dumps({
            "source_id": "x", "class_labels": ["equation"],
            "records": [{"timestamp_ms": 1, "label": "equation",
                          "confidence": 1.2, "bbox": [0, 0, 1, 1]}],
        }))
        with pytest.raises(SchemaError):
            parse_detections(path)

    def test_empty_records_valid(self, tmp_path):
        path = tmp_path / "d.json"
        path.write_text(json.dumps({"source_id": "x", "class_labels": ["equation"], "records": []}))
        assert parse_detections(path).records == ()

    def test_unknown_label(self, tmp_path):
        path = tmp_path / "d.json"
        path.write_text(json.dumps({
            "source_id": "x", "class_labels": ["equation"],
            "records": [{"timestamp_ms": 1, "label": "banana",
                          "confidence": 0.5, "bbox": [0, 0, 1, 1]}],
        }))
        with pytest.raises(UnknownLabel):
            parse_detections(path)

    def test_unsorted_sorted_with_warning(self, tmp_path, caplog):
        path = tmp_path / "d.json"
        path.write_text(json.dumps({
            "source_id": "x", "class_labels": ["equation"],
            "records": [
                {"timestamp_ms": 900, "label": "equation", "confidence": 0.5, "bbox": [0, 0, 1, 1]},
                {"timestamp_ms": 100, "label": "equation", "confidence": 0.5, "bbox": [0, 0, 1, 1]},
            ],
        }))
        with caplog.at_level("WARNING"):
            det = parse_detections(path)
        assert [r.timestamp_ms for r in det.records] == [100, 900]
        assert any("unsorted" in r.message for r in caplog.records)

    def test_bad_bbox(self, tmp_path):
        path = tmp_path / "d.json"
        path.write_text(json.dumps({
            "source_id": "x", "class_labels": ["equation"],
            "records": [{"timestamp_ms": 1, "label": "equation",
                          "confidence": 0.5, "bbox": [0.8, 0.8, 0.5, 0.5]}],
        }))
        with pytest.raises(SchemaError):
            parse_detections(path)


class TestLabelInQuestion:
    def test_paper_example(self):
        q = question("What does this equation signify?")
        assert label_in_question(q, LABELS) == "equation"

    def test_no_label(self):
        assert label_in_question(question("Who discovered radium?"), LABELS) is None

    def test_stem_match(self):
        assert label_in_question(question("What do these graphs show?"), LABELS) == "graph"

    def test_multi_word_phrase(self):
        q = question("What does a neural network stack?")
        assert label_in_question(q, LABELS) == "neural network"
        assert label_in_question(question("What does the network stack?"), LABELS) is None

    def test_match_in_model_answer(self):
        q = question("What does the slide show?", answer="a neural network diagram")
        assert label_in_question(q, LABELS) == "neural network"

    def test_label_list_order_wins(self):
        q = question("What does the equation on the graph mean?")
        assert label_in_question(q, LABELS) == "equation"

    def test_case_insensitive(self):
        assert label_in_question(question("EQUATION basics?"), LABELS) == "equation"


class TestTimeRange:
    def test_padded(self, doc):
        q = question("x", cue_range=(1, 1))
        assert source_time_range(q, doc, pad_ms=2000) == (8_000, 16_000)

    def test_floor_at_zero(self):
        doc = TranscriptDocument(cues=(Cue(1, 500, 1500, "early"),), source_id="doc")
        q = question("x", cue_range=(1, 1))
        assert source_time_range(q, doc, pad_ms=2000) == (0, 3_500)

    def test_zero_pad_identity(self, doc):
        q = question("x", cue_range=(1, 2))
        assert source_time_range(q, doc, pad_ms=0) == (10_000, 24_000)


class TestLink:
    def test_linked(self, doc):
        q = question("What does this equation signify?")
        det = detection_set([record(12_000, conf=0.91)])
        outcome = link(q, det, doc)
        assert outcome.status == LINKED
        assert outcome.link.timestamp_ms == 12_000
        assert outcome.link.confidence == 0.91

    def test_discarded_when_out_of_range(self, doc):
        q = question("What does this equation signify?")
        det = detection_set([record(50_000)])
        assert link(q, det, doc).status == DISCARDED

    def test_unlinked_without_label(self, doc):
        q = question("Who discovered radium?")
        det = detection_set([record(12_000)])
        assert link(q, det, doc).status == UNLINKED

    def test_low_confidence_discarded(self, doc):
        q = question("What does this equation signify?")
        det = detection_set([record(12_000, conf=0.3)])
        assert link(q, det, doc, min_confidence=0.5).status == DISCARDED

    def test_highest_confidence_then_earliest(self, doc):
        q = question("What does this equation signify?")
        det = detection_set([record(11_000, conf=0.8), record(12_000, conf=0.9),
                             record(13_000, conf=0.9)])
        outcome = link(q, det, doc)
        assert (outcome.link.timestamp_ms, outcome.link.confidence) == (12_000, 0.9)

    def test_source_mismatch(self, doc):
        q = question("What does this equation signify?")
        det = detection_set([record(12_000)], source_id="other")
        with pytest.raises(SourceMismatch):
            link(q, det, doc)

    def test_linked_timestamp_inside_range(self, doc):
        q = question("What does this equation signify?")
        det = detection_set([record(12_000)])
        outcome = link(q, det, doc)
        lo, hi = source_time_range(q, doc)
        assert lo <= outcome.link.timestamp_ms <= hi

    def test_pad_monotonicity(self, doc):
        q = question("What does this equation signify?")
        det = detection_set([record(17_000)])
        small = link(q, det, doc, pad_ms=1000).status
        big = link(q, det, doc, pad_ms=5000).status
        assert (small, big) in ((DISCARDED, LINKED), (LINKED, LINKED), (DISCARDED, DISCARDED))
        assert not (small == LINKED and big == DISCARDED)

    def test_empty_detections_trichotomy(self, doc):
        det = detection_set([])
        labeled = question("What does this equation signify?")
        unlabeled = question("Who discovered radium?")
        assert link(labeled, det, doc).status == DISCARDED
        assert link(unlabeled, det, doc).status == UNLINKED


class TestExtractFrame:
    def test_stub_extractor(self, tmp_path):
        out = tmp_path / "frame.png"
        script = "import sys,pathlib; pathlib.Path(sys.argv[3]).write_bytes(b'PNG')"
        extractor = CommandFrameExtractor([sys.executable, "-c", script])
        ref = extract_frame("video.mp4", 1234, extractor, str(out))
        assert ref == str(out) and out.read_bytes() == b"PNG"

    def test_no_extractor(self):
        assert extract_frame("video.mp4", 1234, None, "unused.png") == ""

    def test_extractor_failure_keeps_link(self, tmp_path, caplog):
        extractor = CommandFrameExtractor([sys.executable, "-c", "import sys; sys.exit(3)"])
        with caplog.at_level("WARNING"):
            ref = extract_frame("video.mp4", 99, extractor, str(tmp_path / "f.png"))
        assert ref == ""
        assert any("extraction failed" in r.message for r in caplog.records)
