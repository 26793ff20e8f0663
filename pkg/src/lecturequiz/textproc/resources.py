"""Loaders for the shipped language tables.

All tables live under ``lecturequiz/textproc/data`` as plain UTF-8 text:

* ``stopwords.txt``       one lowercase word per line
* ``tag_lexicon.tsv``     word TAB tag
* ``given_names.txt``     capitalized given names, one per line
* ``honorifics.txt``      honorific titles (with and without period)
* ``locations.txt``       place names, one per line
* ``abbreviations.txt``   period-bearing abbreviations that never end a sentence
* ``irregular_verbs.tsv`` inflected form TAB base form

Tables are read once and cached; all consumers treat them as immutable.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources


def _read_lines(name: str) -> list[str]:
    ref = resources.files("lecturequiz.textproc") / "data" / name
    text = ref.read_text(encoding="utf-8")
    return [line.strip() for line in text.splitlines() if line.strip()]


@lru_cache(maxsize=None)
def stopwords() -> frozenset[str]:
    return frozenset(_read_lines("stopwords.txt"))


@lru_cache(maxsize=None)
def tag_lexicon() -> dict[str, str]:
    entries = {}
    for line in _read_lines("tag_lexicon.tsv"):
        word, tag = line.split("\t")
        entries[word] = tag
    return entries


@lru_cache(maxsize=None)
def given_names() -> frozenset[str]:
    return frozenset(_read_lines("given_names.txt"))


@lru_cache(maxsize=None)
def honorifics() -> frozenset[str]:
    names = set(_read_lines("honorifics.txt"))
    # match with or without the trailing period
    names |= {n.rstrip(".") for n in names}
    return frozenset(names)


@lru_cache(maxsize=None)
def locations() -> frozenset[str]:
    return frozenset(_read_lines("locations.txt"))


@lru_cache(maxsize=None)
def abbreviations() -> frozenset[str]:
    return frozenset(_read_lines("abbreviations.txt"))


@lru_cache(maxsize=None)
def irregular_verb_bases() -> dict[str, str]:
    table = {}
    for line in _read_lines("irregular_verbs.tsv"):
        form, base = line.split("\t")
        table[form] = base
    return table
