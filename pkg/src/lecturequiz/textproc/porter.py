"""Porter suffix-stripping stemmer.

Implements the classic five-step algorithm over the usual
[C](VC){m}[V] word-shape measure, including the two long-standing
adjustments of the reference C implementation (``bli`` -> ``ble`` and
``logi`` -> ``log`` in step 2). Words of length 1 or 2 are returned
unchanged.

Input must already be lowercased; the stemmer itself never changes
case.
"""

from __future__ import annotations

_VOWELS = "aeiou"


def _is_consonant(word: str, i: int) -> bool:
    ch = word[i]
    if ch in _VOWELS:
        return False
    if ch == "y":
        # y is a consonant at the start of a word, otherwise it takes
        # the opposite class of the preceding letter ("sky" -> k,y = C,V).
        return True if i == 0 else not _is_consonant(word, i - 1)
    return True


def _measure(stem: str) -> int:
    """Number of VC runs in the [C](VC){m}[V] decomposition of *stem*."""
    m = 0
    for i in range(len(stem) - 1):
        if not _is_consonant(stem, i) and _is_consonant(stem, i + 1):
            m += 1
    return m


def _has_vowel(stem: str) -> bool:
    return any(not _is_consonant(stem, i) for i in range(len(stem)))


def _ends_double_consonant(word: str) -> bool:
    return (
        len(word) >= 2
        and word[-1] == word[-2]
        and _is_consonant(word, len(word) - 1)
    )


def _ends_cvc(word: str) -> bool:
    # consonant-vowel-consonant where the final consonant is not w, x or y;
    # used to decide whether a final -e must be restored or kept.
    if len(word) < 3:
        return False
    return (
        _is_consonant(word, len(word) - 3)
        and not _is_consonant(word, len(word) - 2)
        and _is_consonant(word, len(word) - 1)
        and word[-1] not in "wxy"
    )


def _replace_if_measure(word: str, suffix: str, repl: str, min_m: int) -> str | None:
    """Replace *suffix* with *repl* when the remaining stem has m > min_m."""
    if not word.endswith(suffix):
        return None
    stem = word[: len(word) - len(suffix)]
    if _measure(stem) > min_m:
        return stem + repl
    return word  # suffix matched but condition failed: rule consumed, no change


def _step1a(word: str) -> str:
    if word.endswith("sses"):
        return word[:-2]
    if word.endswith("ies"):
        return word[:-2]
    if word.endswith("ss"):
        return word
    if word.endswith("s"):
        return word[:-1]
    return word


def _step1b(word: str) -> str:
    if word.endswith("eed"):
        stem = word[:-3]
        return word[:-1] if _measure(stem) > 0 else word
    if word.endswith("ed"):
        stem = word[:-2]
    elif word.endswith("ing"):
        stem = word[:-3]
    else:
        return word
    if not _has_vowel(stem):
        return word
    word = stem
    if word.endswith(("at", "bl", "iz")):
        return word + "e"
    if _ends_double_consonant(word) and word[-1] not in "lsz":
        return word[:-1]
    if _measure(word) == 1 and _ends_cvc(word):
        return word + "e"
    return word


def _step1c(word: str) -> str:
    if word.endswith("y") and _has_vowel(word[:-1]):
        return word[:-1] + "i"
    return word


# (suffix, replacement) rule groups keyed by a discriminating letter; the
# first matching suffix in a group consumes the step.
_STEP2_RULES = {
    "a": [("ational", "ate"), ("tional", "tion")],
    "c": [("enci", "ence"), ("anci", "ance")],
    "e": [("izer", "ize")],
    "l": [("bli", "ble"), ("alli", "al"), ("entli", "ent"), ("eli", "e"), ("ousli", "ous")],
    "o": [("ization", "ize"), ("ation", "ate"), ("ator", "ate")],
    "s": [("alism", "al"), ("iveness", "ive"), ("fulness", "ful"), ("ousness", "ous")],
    "t": [("aliti", "al"), ("iviti", "ive"), ("biliti", "ble")],
    "g": [("logi", "log")],
}

_STEP3_RULES = {
    "e": [("icate", "ic"), ("ative", ""), ("alize", "al")],
    "i": [("iciti", "ic")],
    "l": [("ical", "ic"), ("ful", "")],
    "s": [("ness", "")],
}

_STEP4_SUFFIXES = {
    "a": ["al"],
    "c": ["ance", "ence"],
    "e": ["er"],
    "i": ["ic"],
    "l": ["able", "ible"],
    "n": ["ant", "ement", "ment", "ent"],
    "o": ["ion", "ou"],
    "s": ["ism"],
    "t": ["ate", "iti"],
    "u": ["ous"],
    "v": ["ive"],
    "z": ["ize"],
}


def _step2(word: str) -> str:
    if len(word) < 2:
        return word
    for suffix, repl in _STEP2_RULES.get(word[-2], ()):
        result = _replace_if_measure(word, suffix, repl, 0)
        if result is not None:
            return result
    return word


def _step3(word: str) -> str:
    for suffix, repl in _STEP3_RULES.get(word[-1], ()):
        result = _replace_if_measure(word, suffix, repl, 0)
        if result is not None:
            return result
    return word


def _step4(word: str) -> str:
    if len(word) < 2:
        return word
    for suffix in _STEP4_SUFFIXES.get(word[-2], ()):
        if not word.endswith(suffix):
            continue
        stem = word[: len(word) - len(suffix)]
        if suffix == "ion" and (not stem or stem[-1] not in "st"):
            continue
        if _measure(stem) > 1:
            return stem
        return word
    return word


def _step5a(word: str) -> str:
    if word.endswith("e"):
        stem = word[:-1]
        m = _measure(stem)
        if m > 1 or (m == 1 and not _ends_cvc(stem)):
            return stem
    return word


def _step5b(word: str) -> str:
    if word.endswith("l") and _ends_double_consonant(word) and _measure(word) > 1:
        return word[:-1]
    return word


def stem(word: str) -> str:
    """Stem a lowercase word; short words (<= 2 letters) pass through."""
    if len(word) <= 2:
        return word
    word = _step1a(word)
    word = _step1b(word)
    word = _step1c(word)
    word = _step2(word)
    word = _step3(word)
    word = _step4(word)
    word = _step5a(word)
    word = _step5b(word)
    return word
