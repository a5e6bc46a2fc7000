"""Per-sample metric bundle."""

from __future__ import annotations

from dataclasses import dataclass

from vibesqa.metrics.ngrams import bleu, rouge
from vibesqa.metrics.numbers import MetricConfig, extract_numbers, numerical_score
from vibesqa.metrics.tokens import normalize_tokens, word_recall

# Names of the numeric fields, in report order.
METRIC_FIELDS = (
    "s_w",
    "e_mean",
    "s_n",
    "cider",
    "bleu_1",
    "bleu_2",
    "bleu_3",
    "bleu_4",
    "rouge_1",
    "rouge_2",
    "rouge_l",
)


@dataclass
class MetricScores:
    """All rule-based scores of one (reference, prediction) pair.

    `e_mean` and `s_n` are `None` (the NAN sentinel) when either text has
    no numbers; `cider` is `None` until corpus-level scoring fills it in.
    """

    s_w: float
    e_mean: float | None
    s_n: float | None
    bleu_1: float
    bleu_2: float
    bleu_3: float
    bleu_4: float
    rouge_1: float
    rouge_2: float
    rouge_l: float
    cider: float | None = None

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in METRIC_FIELDS}


def score_pair(reference: str, prediction: str, config: MetricConfig | None = None) -> MetricScores:
    """Compute every per-sample metric (consensus excluded) for one pair."""
    config = config if config is not None else MetricConfig()
    e_mean, s_n = numerical_score(
        extract_numbers(reference), extract_numbers(prediction), config
    )
    bleus = [
        bleu(reference, prediction, order)
        for order in range(1, config.bleu_max_order + 1)
    ]
    bleus += [0.0] * (4 - len(bleus))
    rouge_1, rouge_2, rouge_l = rouge(reference, prediction)
    return MetricScores(
        s_w=word_recall(
            normalize_tokens(reference, config.stopword_list_id),
            normalize_tokens(prediction, config.stopword_list_id),
        ),
        e_mean=e_mean,
        s_n=s_n,
        bleu_1=bleus[0],
        bleu_2=bleus[1],
        bleu_3=bleus[2],
        bleu_4=bleus[3],
        rouge_1=rouge_1,
        rouge_2=rouge_2,
        rouge_l=rouge_l,
    )
