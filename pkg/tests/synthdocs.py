"""Synthetic transcript builders shared by tiling and acceptance tests."""

from __future__ import annotations

import random

from lecturequiz.transcript import Cue, TranscriptDocument

COOKING = """onion garlic butter flour sugar dough yeast oven skillet simmer boil
roast bake whisk saucepan broth pepper basil oregano vinegar sauce pasta tomato
carrot""".split()

NETWORKING = """router packet switch firewall gateway subnet latency bandwidth
protocol ethernet fiber modem socket buffer header payload checksum routing
congestion throughput topology node handshake port""".split()


def two_topic_doc(seed: int, words_per_topic: int = 550) -> tuple[TranscriptDocument, int]:
    """A transcript whose vocabulary flips mid-way.

    Returns (document, junction) where junction is the number of content
    words before the topic switch; every generated word is a content
    word, so the true junction pseudo-sentence is junction // w.
    """
    rng = random.Random(seed)

    def topic(vocab: list[str], n_words: int) -> tuple[list[str], int]:
        sents, count = [], 0
        while count < n_words:
            k = rng.randrange(6, 12)
            words = [vocab[rng.randrange(len(vocab))] for _ in range(k)]
            sents.append(" ".join(words).capitalize() + ".")
            count += k
        return sents, count

    first, n_first = topic(COOKING, words_per_topic)
    second, _ = topic(NETWORKING, words_per_topic)
    cues = []
    t = 0
    for sentence in first + second:
        cues.append(Cue(index=len(cues) + 1, start_ms=t, end_ms=t + 2500, text=sentence))
        t += 3000
    doc = TranscriptDocument(cues=tuple(cues), source_id=f"synthetic-{seed}")
    return doc, n_first


def tiny_doc(n_words: int = 30) -> TranscriptDocument:
    words = [COOKING[i % len(COOKING)] for i in range(n_words)]
    text = " ".join(words).capitalize() + "."
    return TranscriptDocument(
        cues=(Cue(index=1, start_ms=0, end_ms=5000, text=text),),
        source_id="tiny",
    )
