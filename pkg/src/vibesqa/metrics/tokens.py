"""Token normalization and the word-recall metric.

The normalization pipeline runs, in order: lowercase, punctuation strip,
whitespace tokenization, stopword removal, lemmatization, unit/numeric
canonicalization, deduplication. The lemmatizer is a deterministic
suffix-rule engine with a small exceptions table; it favors reproducible
output over linguistic coverage, and its behavior is frozen by golden
tests.
"""

from __future__ import annotations

import re
from functools import lru_cache
from importlib import resources

_WORD_RE = re.compile(r"\d+\.\d+|\w+")
_NUMERIC_RE = re.compile(r"^\d+(?:\.\d+)?$")
_VOWELS = "aeiou"

# Irregular forms the suffix rules would mangle.
_LEMMA_EXCEPTIONS = {
    "analyses": "analysis",
    "axes": "axis",
    "data": "data",
    "hertz": "hertz",
    "indices": "index",
    "radii": "radius",
    "series": "series",
    "vertices": "vertex",
}

# Unit spellings folded to one canonical token after lemmatization.
_UNIT_ALIASES = {
    "hertz": "hz",
    "rad": "radian",
    "rads": "radian",
    "sec": "second",
    "secs": "second",
    "v": "volt",
}


@lru_cache(maxsize=None)
def stopwords(list_id: str = "english-v1") -> frozenset[str]:
    """Load the versioned stopword list shipped with the package."""
    if list_id != "english-v1":
        raise ValueError(f"unknown stopword list {list_id!r}")
    text = (
        resources.files("vibesqa.metrics")
        .joinpath("data/stopwords_en_v1.txt")
        .read_text(encoding="utf-8")
    )
    words = [line.strip() for line in text.splitlines()]
    return frozenset(w for w in words if w and not w.startswith("#"))


def tokenize(text: str) -> list[str]:
    """Lowercase, strip punctuation, and split into word/number tokens.

    Decimal points inside numbers survive ("50.14" is one token); all other
    punctuation separates tokens.
    """
    return _WORD_RE.findall(text.lower())


def _undouble(stem: str) -> str:
    # Final doubled consonant collapses, except ll/ss/zz ("roll", "press").
    if (
        len(stem) >= 2
        and stem[-1] == stem[-2]
        and stem[-1] not in _VOWELS
        and stem[-1] not in "lsz"
    ):
        return stem[:-1]
    return stem


def _ends_cvc(stem: str) -> bool:
    if len(stem) < 3:
        return False
    c1, v, c2 = stem[-3], stem[-2], stem[-1]
    return c1 not in _VOWELS and v in _VOWELS and c2 not in _VOWELS and c2 not in "wxy"


def _fix_stripped_stem(stem: str) -> str:
    if stem.endswith(("at", "bl", "iz")):
        return stem + "e"
    undoubled = _undouble(stem)
    if undoubled != stem:
        return undoubled
    if _ends_cvc(stem) and len(stem) <= 4:
        return stem + "e"
    return stem


def lemmatize(word: str) -> str:
    """Deterministic suffix-rule lemmatization of one lowercase token."""
    if word in _LEMMA_EXCEPTIONS:
        return _LEMMA_EXCEPTIONS[word]
    if len(word) <= 3:
        return word
    if word.endswith("ies") and len(word) > 4:
        return word[:-3] + "y"
    if word.endswith("sses"):
        return word[:-2]
    if word.endswith(("xes", "ches", "shes", "zes")):
        return word[:-2]
    if word.endswith("ing") and len(word) > 5:
        return _fix_stripped_stem(word[:-3])
    if word.endswith("ed") and len(word) > 4:
        return _fix_stripped_stem(word[:-2])
    if word.endswith("s") and not word.endswith(("ss", "us", "is")):
        return word[:-1]
    return word


def canonicalize_token(token: str) -> str:
    """Fold unit aliases and normalize numeric spellings ("50.0" -> "50")."""
    if token in _UNIT_ALIASES:
        return _UNIT_ALIASES[token]
    if _NUMERIC_RE.match(token):
        return f"{float(token):g}"
    return token


def normalize_tokens(text: str, stopword_list_id: str = "english-v1") -> set[str]:
    """Full normalization pipeline producing the unique-token set of a text."""
    drop = stopwords(stopword_list_id)
    out: set[str] = set()
    for token in tokenize(text):
        if token in drop:
            continue
        out.add(canonicalize_token(lemmatize(token)))
    return out


def word_recall(ref_tokens: set[str], pred_tokens: set[str]) -> float:
    """Percentage of reference tokens covered by the prediction.

    An empty reference set scores 100 by definition.
    """
    if not ref_tokens:
        return 100.0
    return 100.0 * len(ref_tokens & pred_tokens) / len(ref_tokens)
