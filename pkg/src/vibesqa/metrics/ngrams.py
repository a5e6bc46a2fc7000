"""BLEU and ROUGE over a single reference.

Both metrics share the light tokenization of :func:`vibesqa.metrics.tokens.tokenize`
(lowercase, punctuation strip, whitespace split) and keep duplicates and
stopwords, since they operate on token sequences rather than vocabulary
sets.

BLEU-N uses uniform 1/N weights over modified n-gram precisions with
add-epsilon smoothing (a zero clipped count contributes epsilon instead),
multiplied by the standard brevity penalty. ROUGE-1/2 are F1 scores over
n-gram multiset overlap; ROUGE-L is the F1 built from the longest common
subsequence length against both sequence lengths.
"""

from __future__ import annotations

import math
from collections import Counter

from vibesqa.metrics.tokens import tokenize

SMOOTHING_EPSILON = 1e-9


def _ngram_counts(tokens: list[str], order: int) -> Counter:
    return Counter(
        tuple(tokens[i : i + order]) for i in range(len(tokens) - order + 1)
    )


def _clipped_overlap(ref_counts: Counter, pred_counts: Counter) -> int:
    return sum(min(count, ref_counts[gram]) for gram, count in pred_counts.items())


def bleu(reference: str, prediction: str, max_order: int = 4) -> float:
    """Cumulative BLEU-N of a prediction against a single reference."""
    if not 1 <= max_order <= 4:
        raise ValueError("max_order must be in 1..4")
    ref_tokens = tokenize(reference)
    pred_tokens = tokenize(prediction)
    if not pred_tokens:
        return 0.0

    log_precision_sum = 0.0
    for order in range(1, max_order + 1):
        pred_counts = _ngram_counts(pred_tokens, order)
        total = sum(pred_counts.values())
        if total == 0:
            # Prediction too short to form this order at all.
            precision = SMOOTHING_EPSILON
        else:
            matched = _clipped_overlap(_ngram_counts(ref_tokens, order), pred_counts)
            precision = matched / total if matched > 0 else SMOOTHING_EPSILON / total
        log_precision_sum += math.log(precision) / max_order

    if len(pred_tokens) > len(ref_tokens):
        brevity_penalty = 1.0
    else:
        brevity_penalty = math.exp(1.0 - len(ref_tokens) / len(pred_tokens))
    return brevity_penalty * math.exp(log_precision_sum)


def _f1(numerator: int, ref_total: int, pred_total: int) -> float:
    if numerator == 0 or ref_total == 0 or pred_total == 0:
        return 0.0
    recall = numerator / ref_total
    precision = numerator / pred_total
    return 2.0 * precision * recall / (precision + recall)


def _lcs_length(a: list[str], b: list[str]) -> int:
    if not a or not b:
        return 0
    previous = [0] * (len(b) + 1)
    for token_a in a:
        current = [0] * (len(b) + 1)
        for j, token_b in enumerate(b, start=1):
            if token_a == token_b:
                current[j] = previous[j - 1] + 1
            else:
                current[j] = max(previous[j], current[j - 1])
        previous = current
    return previous[-1]


def rouge(reference: str, prediction: str) -> tuple[float, float, float]:
    """ROUGE-1, ROUGE-2, and ROUGE-L F1 scores; empty inputs yield 0."""
    ref_tokens = tokenize(reference)
    pred_tokens = tokenize(prediction)

    scores = []
    for order in (1, 2):
        ref_counts = _ngram_counts(ref_tokens, order)
        pred_counts = _ngram_counts(pred_tokens, order)
        overlap = _clipped_overlap(ref_counts, pred_counts)
        scores.append(
            _f1(overlap, sum(ref_counts.values()), sum(pred_counts.values()))
        )

    lcs = _lcs_length(ref_tokens, pred_tokens)
    scores.append(_f1(lcs, len(ref_tokens), len(pred_tokens)))
    return scores[0], scores[1], scores[2]
