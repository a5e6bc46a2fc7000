"""Weighted synonym vocabulary for answer scoring.

Maps each signal-type label to an ordered list of acceptable answer
strings, each weighted in (0, 1] by technical precision. The default
content ships as editable JSON; pass a path to override per run. Lookups
normalize the query (lowercase, collapsed whitespace, stripped terminal
punctuation), so "Combined Harmonic Signal." finds its entry.
"""

from __future__ import annotations

import json
import re
from importlib import resources
from pathlib import Path

_TERMINAL_PUNCT_RE = re.compile(r"[\s.!?;:,]+$")


def normalize_text(text: str) -> str:
    """Lowercase, collapse whitespace, strip terminal punctuation."""
    collapsed = " ".join(text.lower().split())
    return _TERMINAL_PUNCT_RE.sub("", collapsed)


class SynonymVocabulary:
    """Immutable label -> [(synonym, weight), ...] mapping."""

    def __init__(self, labels: dict[str, list[tuple[str, float]]]) -> None:
        if not labels:
            raise ValueError("vocabulary must define at least one label")
        table: dict[str, tuple[tuple[str, float], ...]] = {}
        display: dict[str, str] = {}
        for label, entries in labels.items():
            if not entries:
                raise ValueError(f"label {label!r} has an empty synonym list")
            for synonym, weight in entries:
                if not 0.0 < weight <= 1.0:
                    raise ValueError(
                        f"weight for {synonym!r} under {label!r} must be in (0, 1], "
                        f"got {weight}"
                    )
            key = normalize_text(label)
            table[key] = tuple((str(s), float(w)) for s, w in entries)
            display[key] = label
        self._table = table
        self._display = display

    @classmethod
    def load(cls, path: str | Path | None = None) -> "SynonymVocabulary":
        """Load from a JSON file, or the packaged default when no path given."""
        if path is None:
            text = (
                resources.files("vibesqa.reward")
                .joinpath("data/vocabulary.json")
                .read_text(encoding="utf-8")
            )
        else:
            text = Path(path).read_text(encoding="utf-8")
        payload = json.loads(text)
        labels = {
            label: [(entry[0], entry[1]) for entry in entries]
            for label, entries in payload["labels"].items()
        }
        return cls(labels)

    @property
    def labels(self) -> list[str]:
        """Original label spellings, in file order."""
        return list(self._display.values())

    def __contains__(self, label: str) -> bool:
        return normalize_text(label) in self._table

    def lookup(self, label: str) -> tuple[tuple[str, float], ...] | None:
        """Acceptable answers for a label, or None when the label is unknown."""
        return self._table.get(normalize_text(label))
