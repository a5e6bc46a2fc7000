"""Number extraction and the exponential-decay numerical score.

The score compares the number sequences of a reference and a prediction
pairwise by position: relative errors against the reference magnitude are
averaged over the shorter sequence's length and mapped through
exp(-decay_rate * mean_error) into (0, 1]. When either text carries no
numbers the score is undefined and reported as a NAN sentinel (`None`),
never as an error.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

# Signed decimals with optional fraction and exponent. Digits glued to a
# word or to a previous number (version strings, ranges like "50-60") do
# not swallow their neighbors.
_NUMBER_RE = re.compile(
    r"(?<![\w.])[-+]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][-+]?\d+)?(?![A-Za-z_])"
)


@dataclass(frozen=True)
class MetricConfig:
    """Knobs of the rule-based metric suite."""

    decay_rate: float = 1.0       # strength of the error-to-score decay
    epsilon: float = 1e-6         # guard for near-zero reference magnitudes
    bleu_max_order: int = 4
    stopword_list_id: str = "english-v1"
    cider_ngram_weights: tuple[float, ...] = (0.25, 0.25, 0.25, 0.25)

    def __post_init__(self) -> None:
        if self.decay_rate <= 0:
            raise ValueError("decay_rate must be > 0")
        if self.epsilon <= 0:
            raise ValueError("epsilon must be > 0")
        if not 1 <= self.bleu_max_order <= 4:
            raise ValueError("bleu_max_order must be in 1..4")
        if not self.cider_ngram_weights or any(w < 0 for w in self.cider_ngram_weights):
            raise ValueError("cider_ngram_weights must be non-negative and non-empty")


def extract_numbers(text: str) -> list[float]:
    """All numbers in a text, in order of appearance.

    Handles signs, decimals, scientific notation, and bracketed values;
    digits embedded in words are ignored.
    """
    values = []
    for match in _NUMBER_RE.finditer(text):
        value = float(match.group())
        if math.isfinite(value):
            values.append(value)
    return values


def numerical_score(
    ref_numbers: list[float],
    pred_numbers: list[float],
    config: MetricConfig | None = None,
) -> tuple[float | None, float | None]:
    """Mean relative error and its exponential-decay score.

    Returns `(e_mean, s_n)`, both `None` (the NAN sentinel) when either
    sequence is empty.
    """
    config = config if config is not None else MetricConfig()
    if not ref_numbers or not pred_numbers:
        return None, None
    pair_count = min(len(ref_numbers), len(pred_numbers))
    total = 0.0
    for i in range(pair_count):
        ref = ref_numbers[i]
        total += abs(pred_numbers[i] - ref) / max(abs(ref), config.epsilon)
    e_mean = total / pair_count
    return e_mean, math.exp(-config.decay_rate * e_mean)
