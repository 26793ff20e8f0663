import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # synthdocs / qg_fixture helpers

from lecturequiz import wordnet
from lecturequiz.transcript import parse_srt

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope="session")
def lecture_path() -> Path:
    return DATA / "ml_lecture_01.srt"


@pytest.fixture(scope="session")
def detections_path() -> Path:
    return DATA / "ml_lecture_01.detections.json"


@pytest.fixture(scope="session")
def lecture_doc(lecture_path):
    return parse_srt(lecture_path.read_text(encoding="utf-8"), source_id="ml_lecture_01")


@pytest.fixture(scope="session")
def srt_corpus() -> list[Path]:
    files = sorted((DATA / "srt_corpus").glob("*.srt")) + [DATA / "ml_lecture_01.srt"]
    assert len(files) >= 10
    return files


@pytest.fixture(scope="session")
def graph():
    return wordnet.load_wordnet(wordnet.default_wordnet_dir())
