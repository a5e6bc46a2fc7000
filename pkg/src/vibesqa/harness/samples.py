"""Evaluation samples: joining gold QA pairs with model predictions.

Predictions are keyed by (record_id, question_index), so the join result
is independent of prediction-file ordering. A gold pair without a
prediction becomes an empty-prediction sample and is counted as a warning
rather than an error.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from vibesqa.sqa.dataset import read_dataset


@dataclass(frozen=True)
class EvalSample:
    """One scoring unit: a question, the model's prediction, the gold answer."""

    sample_id: str
    record_id: str
    question_index: int
    signal_category: str
    question: str
    prediction: str
    gold_answer: str

    def __post_init__(self) -> None:
        from vibesqa.sqa.templates import CATEGORIES

        if self.signal_category not in CATEGORIES:
            raise ValueError(f"unknown signal category {self.signal_category!r}")
        if not self.question or not self.gold_answer:
            raise ValueError("question and gold answer must be non-empty")


def read_predictions(path: str | Path) -> dict[tuple[str, int], str]:
    """Read a predictions JSONL file into a (record_id, question_index) map.

    Each line must be an object with `record_id`, `question_index`, and
    `prediction`. Duplicate keys and malformed lines are errors.
    """
    predictions: dict[tuple[str, int], str] = {}
    with Path(path).open("r", encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                payload = json.loads(line)
                key = (str(payload["record_id"]), int(payload["question_index"]))
                prediction = str(payload["prediction"])
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                raise ValueError(f"{path}:{line_number}: malformed prediction row: {exc}") from exc
            if key in predictions:
                raise ValueError(f"{path}:{line_number}: duplicate prediction key {key}")
            predictions[key] = prediction
    return predictions


def load_predictions(
    dataset_path: str | Path, predictions_path: str | Path
) -> tuple[list[EvalSample], dict[str, int]]:
    """One sample per gold QA pair, in dataset order.

    Returns the samples plus warning counts: `missing` gold pairs without a
    prediction (scored against an empty string) and `extra` prediction keys
    that match no gold pair.
    """
    records = read_dataset(dataset_path)
    predictions = read_predictions(predictions_path)

    samples = []
    matched = 0
    missing = 0
    for record in records:
        for question_index, pair in enumerate(record.qa):
            key = (record.record_id, question_index)
            if key in predictions:
                prediction = predictions[key]
                matched += 1
            else:
                prediction = ""
                missing += 1
            samples.append(
                EvalSample(
                    sample_id=f"{record.record_id}:{question_index}",
                    record_id=record.record_id,
                    question_index=question_index,
                    signal_category=record.signal_category,
                    question=pair.question,
                    prediction=prediction,
                    gold_answer=pair.answer,
                )
            )
    return samples, {"missing": missing, "extra": len(predictions) - matched}
