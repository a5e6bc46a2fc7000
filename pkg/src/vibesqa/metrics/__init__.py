"""Rule-based evaluation metrics: numerical score, word recall, BLEU,
ROUGE, and corpus-level consensus scoring.

All functions are pure; only :func:`cider` depends on corpus-level
statistics (reference-side IDF), and those are permutation-invariant.
"""

from vibesqa.metrics.cider import ConsensusScorer, cider
from vibesqa.metrics.ngrams import bleu, rouge
from vibesqa.metrics.numbers import MetricConfig, extract_numbers, numerical_score
from vibesqa.metrics.scores import METRIC_FIELDS, MetricScores, score_pair
from vibesqa.metrics.tokens import (
    canonicalize_token,
    lemmatize,
    normalize_tokens,
    stopwords,
    tokenize,
    word_recall,
)

__all__ = [
    "ConsensusScorer",
    "METRIC_FIELDS",
    "MetricConfig",
    "MetricScores",
    "bleu",
    "canonicalize_token",
    "cider",
    "extract_numbers",
    "lemmatize",
    "normalize_tokens",
    "numerical_score",
    "rouge",
    "score_pair",
    "stopwords",
    "tokenize",
    "word_recall",
]
