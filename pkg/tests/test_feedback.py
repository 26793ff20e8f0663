import pytest
from hypothesis import given, settings, strategies as st

from lecturequiz import feedback as fb
from lecturequiz import wordnet as wn


class TestLoadWordnet:
    def test_fixture_loads(self, graph):
        nouns = sum(1 for pos, _ in graph.synsets if pos == wn.NOUN)
        verbs = sum(1 for pos, _ in graph.synsets if pos == wn.VERB)
        assert (nouns, verbs) == (33, 13)
        assert graph.synsets_for("car", wn.NOUN)

    def test_missing_files(self, tmp_path):
        with pytest.raises(wn.MissingFiles):
            wn.load_wordnet(tmp_path)

    def test_corrupt_offset(self, tmp_path):
        src = wn.default_wordnet_dir()
        for name in ("index.noun", "index.verb", "data.verb"):
            (tmp_path / name).write_text((src / name).read_text())
        data = (src / "data.noun").read_text().splitlines(keepends=True)
        for i, line in enumerate(data):
            if not line.startswith("  "):
                data[i] = "99999999" + line[8:]
                break
        (tmp_path / "data.noun").write_text("".join(data))
        with pytest.raises(wn.ParseError, match="offset"):
            wn.load_wordnet(tmp_path)

    def test_resolve_order(self, tmp_path, monkeypatch):
        monkeypatch.delenv("WORDNET_DIR", raising=False)
        assert wn.resolve_wordnet_dir(None) == wn.default_wordnet_dir()
        monkeypatch.setenv("WORDNET_DIR", str(tmp_path))
        assert wn.resolve_wordnet_dir(None) == tmp_path
        assert wn.resolve_wordnet_dir("/explicit/path").name == "path"


class TestWordSimilarity:
    def test_identity(self, graph):
        assert wn.word_similarity("loss", "loss", graph) == 1.0

    def test_same_synset(self, graph):
        assert wn.word_similarity("car", "automobile", graph) == 1.0

    def test_disconnected_trees(self, graph):
        assert wn.word_similarity("car", "banana", graph) == 0.0

    def test_stem_equality_shortcut(self, graph):
        assert wn.word_similarity("losses", "loss", graph) == 1.0

    def test_unknown_word(self, graph):
        assert wn.word_similarity("zyzzyva", "car", graph) == 0.0

    def test_hand_traced_wu_palmer(self, graph):
        # depths: car=9, bicycle=9, lcs wheeled_vehicle=8 -> 16/18
        assert wn.word_similarity("car", "bicycle", graph) == pytest.approx(16 / 18)

    def test_non_increasing_toward_root(self, graph):
        chain = ["bicycle", "computer", "structure", "gradient"]
        sims = [wn.word_similarity("car", other, graph) for other in chain]
        assert sims == sorted(sims, reverse=True)
        assert all(s > 0 for s in sims)  # all share the entity root

    def test_verb_graph(self, graph):
        assert wn.word_similarity("minimize", "decrease", graph) == pytest.approx(0.8)


FIXTURE_WORDS = [
    "car", "auto", "bicycle", "computer", "banana", "apple", "vegetable",
    "cost", "price", "loss", "error", "function", "gradient", "weight",
    "algorithm", "model", "network", "structure", "minimize", "decrease",
    "increase", "calculate", "compute", "train", "teach", "travel", "unknownword",
]


class TestTextSimilarity:
    def test_identical_texts(self, graph):
        assert fb.text_similarity("the cost function", "the cost function", graph) == 1.0

    def test_stopwords_only(self, graph):
        assert fb.text_similarity("the of", "cost function value", graph) == 0.0

    def test_hand_computed_directional_average(self, graph):
        # A = [cost, function]; B = [cost, function, value];
        # dir(A->B) = 1, dir(B->A) = (1+1+0)/3; average = 5/6
        sim = fb.text_similarity("the cost function", "cost function value", graph)
        assert sim == pytest.approx(5 / 6)

    def test_symmetry_examples(self, graph):
        a, b = "the price of a car", "an automobile cost"
        assert fb.text_similarity(a, b, graph) == pytest.approx(fb.text_similarity(b, a, graph))

    def test_idf_weighting(self, graph):
        idf = {"cost": 10.0, "value": 0.0001}
        weighted = fb.text_similarity("cost value", "price", graph, idf=idf)
        assert weighted == pytest.approx((10.0 / 10.0001 + 1.0) / 2, abs=1e-4)

    @settings(max_examples=60, deadline=None)
    @given(
        left=st.lists(st.sampled_from(FIXTURE_WORDS), min_size=1, max_size=6),
        right=st.lists(st.sampled_from(FIXTURE_WORDS), min_size=1, max_size=6),
    )
    def test_symmetry_and_bounds_property(self, graph, left, right):
        a, b = " ".join(left), " ".join(right)
        sim = fb.text_similarity(a, b, graph)
        assert 0.0 <= sim <= 1.0
        assert sim == pytest.approx(fb.text_similarity(b, a, graph))

    @settings(max_examples=40, deadline=None)
    @given(words=st.lists(st.sampled_from(FIXTURE_WORDS), min_size=1, max_size=6))
    def test_self_similarity_property(self, graph, words):
        text = " ".join(words)
        assert fb.text_similarity(text, text, graph) == pytest.approx(1.0)


class TestGrade:
    def test_exact_match_high(self, graph):
        assert fb.grade("gradient descent", "gradient descent", graph).grade == fb.HIGH

    def test_empty_answer_low(self, graph):
        result = fb.grade("", "gradient descent", graph)
        assert result.grade == fb.LOW and result.similarity == 0.0

    def test_threshold_boundaries_inclusive(self):
        thresholds = fb.GradeThresholds()
        assert fb.grade_from_similarity(0.75, thresholds) == fb.HIGH
        assert fb.grade_from_similarity(0.7499999, thresholds) == fb.MEDIUM
        assert fb.grade_from_similarity(0.45, thresholds) == fb.MEDIUM
        assert fb.grade_from_similarity(0.4499999, thresholds) == fb.LOW
        assert fb.grade_from_similarity(0.0, thresholds) == fb.LOW
        assert fb.grade_from_similarity(1.0, thresholds) == fb.HIGH

    def test_bad_thresholds(self):
        with pytest.raises(fb.BadThresholds):
            fb.GradeThresholds(high=0.4, medium=0.5)
        with pytest.raises(fb.BadThresholds):
            fb.GradeThresholds(high=1.2, medium=0.5)
        with pytest.raises(fb.BadThresholds):
            fb.GradeThresholds(high=0.8, medium=0.0)

    def test_per_word_explanation(self, graph):
        result = fb.grade("the price function", "the cost function", graph)
        assert result.per_word == (("price", "cost", 1.0), ("function", "function", 1.0))

    def test_synonym_scores_high(self, graph):
        result = fb.grade("an automobile", "the car", graph)
        assert result.grade == fb.HIGH

    def test_idf_table_loader(self, tmp_path):
        path = tmp_path / "idf.tsv"
        path.write_text("cost\t3.5\nfunction\t1.25\n")
        assert fb.load_idf_table(path) == {"cost": 3.5, "function": 1.25}
