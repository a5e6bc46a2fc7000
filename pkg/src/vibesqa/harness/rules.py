"""Rule-based scoring of evaluation samples.

Per-sample metrics are pure, so scoring parallelizes across a process pool
with an order-preserving reduction: results are identical for any worker
count. Consensus scores need corpus-level reference statistics and are
attached in a second, single-threaded pass.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from vibesqa.harness.samples import EvalSample
from vibesqa.metrics import ConsensusScorer, MetricConfig, MetricScores, score_pair


def _score_one(payload: tuple[str, str, MetricConfig]) -> MetricScores:
    gold, prediction, config = payload
    return score_pair(gold, prediction, config)


def calculate_rule_based(
    samples: list[EvalSample],
    config: MetricConfig | None = None,
    workers: int = 1,
) -> list[MetricScores]:
    """All rule-based metric scores, one bundle per sample, in input order."""
    config = config if config is not None else MetricConfig()
    if workers < 1:
        raise ValueError("workers must be >= 1")

    payloads = [(s.gold_answer, s.prediction, config) for s in samples]
    if workers == 1 or len(samples) < 2:
        scores = [_score_one(p) for p in payloads]
    else:
        chunksize = max(1, len(payloads) // (workers * 4))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            scores = list(pool.map(_score_one, payloads, chunksize=chunksize))

    if samples:
        scorer = ConsensusScorer(
            [s.gold_answer for s in samples], config.cider_ngram_weights
        )
        for sample, bundle in zip(samples, scores):
            bundle.cider = scorer.score(sample.gold_answer, sample.prediction)
    return scores
