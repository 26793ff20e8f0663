"""Loader and similarity over WordNet 3.x flat database files.

Only the noun and verb hypernym graphs are consumed (index.noun,
data.noun, index.verb, data.verb). Synset depth counts nodes from the
root (root depth 1, longest path in case of multiple inheritance), and
word similarity is Wu-Palmer maximized over all synset pairs of both
parts of speech:

    sim = 2 * depth(lcs) / (depth(a) + depth(b))

A miniature fixture database ships with the package and is the default
when neither the WORDNET_DIR environment variable nor an explicit path
is given.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .textproc.porter import stem


class WordNetError(Exception):
    pass


class MissingFiles(WordNetError):
    pass


class ParseError(WordNetError):
    pass


NOUN = "n"
VERB = "v"

_FILES = {NOUN: ("index.noun", "data.noun"), VERB: ("index.verb", "data.verb")}
_HYPERNYM_SYMBOLS = {"@", "@i"}


@dataclass(frozen=True)
class Synset:
    pos: str
    offset: int
    lemmas: tuple[str, ...]
    hypernyms: tuple[int, ...]


class WordNetGraph:
    def __init__(self, synsets: dict, lemma_index: dict):
        self.synsets = synsets          # (pos, offset) -> Synset
        self.lemma_index = lemma_index  # (lemma, pos) -> tuple of offsets
        self._depths: dict[tuple[str, int], int] = {}

    def synsets_for(self, lemma: str, pos: str) -> tuple[int, ...]:
        return self.lemma_index.get((lemma.lower().replace(" ", "_"), pos), ())

    def depth(self, pos: str, offset: int) -> int:
        """Nodes on the longest root path, root itself counting 1."""
        key = (pos, offset)
        if key in self._depths:
            return self._depths[key]
        depth = self._walk_depth(pos, offset, set())
        return depth

    def _walk_depth(self, pos: str, offset: int, on_stack: set) -> int:
        key = (pos, offset)
        if key in self._depths:
            return self._depths[key]
        if key in on_stack:
            raise WordNetError(f"hypernym cycle through {pos}{offset:08d}")
        synset = self.synsets[key]
        if not synset.hypernyms:
            depth = 1
        else:
            on_stack.add(key)
            depth = 1 + max(
                self._walk_depth(pos, h, on_stack) for h in synset.hypernyms
            )
            on_stack.discard(key)
        self._depths[key] = depth
        return depth

    def ancestors(self, pos: str, offset: int) -> dict[int, int]:
        """All hypernym ancestors (self included) with their depths."""
        seen: dict[int, int] = {}
        stack = [offset]
        while stack:
            cur = stack.pop()
            if cur in seen:
                continue
            seen[cur] = self.depth(pos, cur)
            stack.extend(self.synsets[(pos, cur)].hypernyms)
        return seen

    def wu_palmer(self, pos: str, a: int, b: int) -> float:
        anc_a = self.ancestors(pos, a)
        anc_b = self.ancestors(pos, b)
        common = anc_a.keys() & anc_b.keys()
        if not common:
            return 0.0
        lcs_depth = max(anc_a[c] for c in common)
        return 2.0 * lcs_depth / (self.depth(pos, a) + self.depth(pos, b))


def _parse_data(path: Path, pos: str, synsets: dict) -> None:
    byte_pos = 0
    for lineno, raw in enumerate(path.read_bytes().splitlines(keepends=True), start=1):
        line = raw.decode("utf-8")
        if line.startswith("  "):
            byte_pos += len(raw)
            continue
        fields = line.split()
        try:
            declared = int(fields[0])
            w_cnt = int(fields[3], 16)
            lemmas = tuple(fields[4 + 2 * i] for i in range(w_cnt))
            p_base = 4 + 2 * w_cnt
            p_cnt = int(fields[p_base])
            hypernyms = []
            for i in range(p_cnt):
                symbol, target, target_pos, _ = fields[p_base + 1 + 4 * i : p_base + 5 + 4 * i]
                if symbol in _HYPERNYM_SYMBOLS and target_pos == pos:
                    hypernyms.append(int(target))
        except (IndexError, ValueError) as exc:
            raise ParseError(f"{path.name}:{lineno}: malformed data line") from exc
        if declared != byte_pos:
            raise ParseError(
                f"{path.name}:{lineno}: declared offset {declared} != byte offset {byte_pos}"
            )
        synsets[(pos, declared)] = Synset(
            pos=pos, offset=declared, lemmas=lemmas, hypernyms=tuple(hypernyms)
        )
        byte_pos += len(raw)


def _parse_index(path: Path, pos: str, synsets: dict, lemma_index: dict) -> None:
    for lineno, line in enumerate(
        path.read_text(encoding="utf-8").splitlines(), start=1
    ):
        if line.startswith("  ") or not line.strip():
            continue
        fields = line.split()
        try:
            lemma = fields[0]
            synset_cnt = int(fields[2])
            p_cnt = int(fields[3])
            offsets = tuple(int(o) for o in fields[6 + p_cnt : 6 + p_cnt + synset_cnt])
        except (IndexError, ValueError) as exc:
            raise ParseError(f"{path.name}:{lineno}: malformed index line") from exc
        if len(offsets) != synset_cnt:
            raise ParseError(f"{path.name}:{lineno}: offset count mismatch")
        for off in offsets:
            if (pos, off) not in synsets:
                raise ParseError(
                    f"{path.name}:{lineno}: unknown synset offset {off:08d}"
                )
        lemma_index[(lemma, pos)] = offsets


def load_wordnet(directory) -> WordNetGraph:
    root = Path(directory)
    missing = [
        name for pair in _FILES.values() for name in pair if not (root / name).exists()
    ]
    if missing:
        raise MissingFiles(f"{root}: missing {', '.join(sorted(missing))}")
    synsets: dict = {}
    lemma_index: dict = {}
    for pos, (index_name, data_name) in _FILES.items():
        _parse_data(root / data_name, pos, synsets)
    for pos, (index_name, data_name) in _FILES.items():
        _parse_index(root / index_name, pos, synsets, lemma_index)
    for (pos, offset), synset in synsets.items():
        for h in synset.hypernyms:
            if (pos, h) not in synsets:
                raise ParseError(
                    f"data.{ 'noun' if pos == NOUN else 'verb' }: synset {offset:08d} "
                    f"points at unknown hypernym {h:08d}"
                )
    return WordNetGraph(synsets, lemma_index)


def default_wordnet_dir() -> Path:
    return Path(str(resources.files("lecturequiz") / "data" / "wordnet_mini"))


def resolve_wordnet_dir(explicit=None) -> Path:
    """Explicit path, else $WORDNET_DIR, else the packaged fixture."""
    if explicit:
        return Path(explicit)
    env = os.environ.get("WORDNET_DIR")
    if env:
        return Path(env)
    return default_wordnet_dir()


def word_similarity(a: str, b: str, graph: WordNetGraph) -> float:
    """Similarity in [0, 1]: identical surfaces or stems count 1.0, then
    the best Wu-Palmer score over noun and verb synset pairs; unknown or
    unrelated words score 0.0."""
    a = a.lower()
    b = b.lower()
    if a == b or stem(a) == stem(b):
        return 1.0
    best = 0.0
    for pos in (NOUN, VERB):
        offs_a = graph.synsets_for(a, pos)
        offs_b = graph.synsets_for(b, pos)
        for off_a in offs_a:
            for off_b in offs_b:
                best = max(best, graph.wu_palmer(pos, off_a, off_b))
    return best
