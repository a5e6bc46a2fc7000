"""Consensus scoring via TF-IDF n-gram cosine similarity.

This is the plain consensus formulation (no length penalty, no count
clipping): per n-gram order the candidate and reference are embedded as
TF-IDF vectors and compared by cosine similarity; orders are combined with
the configured weights and scaled by 10.

The IDF is a corpus-level quantity computed over the reference side of all
pairs, so scoring is a two-phase contract: build the corpus statistics
once, then score items independently (safe to parallelize). Document
frequencies are floored at 1, which makes a single-item corpus degenerate:
every IDF is zero and every score is 0.0 by definition.
"""

from __future__ import annotations

import math
from collections import Counter

from vibesqa.metrics.tokens import tokenize


def _ngram_counts(tokens: list[str], order: int) -> Counter:
    return Counter(
        tuple(tokens[i : i + order]) for i in range(len(tokens) - order + 1)
    )


class ConsensusScorer:
    """Two-phase consensus scorer: corpus IDF build, then per-item scoring."""

    def __init__(
        self,
        references: list[str],
        ngram_weights: tuple[float, ...] = (0.25, 0.25, 0.25, 0.25),
    ) -> None:
        if not references:
            raise ValueError("consensus scoring needs a non-empty reference corpus")
        self._weights = ngram_weights
        self._orders = range(1, len(ngram_weights) + 1)
        self._num_docs = len(references)
        self._doc_freq: list[Counter] = [Counter() for _ in self._orders]
        for reference in references:
            tokens = tokenize(reference)
            for index, order in enumerate(self._orders):
                for gram in set(_ngram_counts(tokens, order)):
                    self._doc_freq[index][gram] += 1

    def _tfidf(self, counts: Counter, order_index: int) -> dict:
        doc_freq = self._doc_freq[order_index]
        return {
            gram: count * math.log(self._num_docs / max(doc_freq[gram], 1))
            for gram, count in counts.items()
        }

    @staticmethod
    def _cosine(a: dict, b: dict) -> float:
        norm_a = math.sqrt(sum(v * v for v in a.values()))
        norm_b = math.sqrt(sum(v * v for v in b.values()))
        if norm_a == 0.0 or norm_b == 0.0:
            return 0.0
        dot = sum(value * b[gram] for gram, value in a.items() if gram in b)
        return dot / (norm_a * norm_b)

    def score(self, reference: str, prediction: str) -> float:
        ref_tokens = tokenize(reference)
        pred_tokens = tokenize(prediction)
        total = 0.0
        for index, order in enumerate(self._orders):
            ref_vector = self._tfidf(_ngram_counts(ref_tokens, order), index)
            pred_vector = self._tfidf(_ngram_counts(pred_tokens, order), index)
            total += self._weights[index] * self._cosine(pred_vector, ref_vector)
        return 10.0 * total


def cider(
    pairs: list[tuple[str, str]],
    ngram_weights: tuple[float, ...] = (0.25, 0.25, 0.25, 0.25),
) -> list[float]:
    """Per-item consensus scores for a corpus of (reference, prediction) pairs.

    The IDF depends only on the multiset of references, so scores are
    invariant under corpus reordering.
    """
    scorer = ConsensusScorer([ref for ref, _ in pairs], ngram_weights)
    return [scorer.score(ref, pred) for ref, pred in pairs]
