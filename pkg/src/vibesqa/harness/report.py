"""Report serialization: per-sample JSONL, aggregate JSON, CSV summary,
and optional plot images.

All floats are rounded to six decimals (round-half-even) and JSON keys are
sorted, so identical inputs produce byte-identical files regardless of
worker count or sample order. Undefined numerical scores serialize as JSON
`null` and as the string "NAN" in CSV cells.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import numpy as np
from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from vibesqa.harness.grouping import AggregateReport, GroupStats
from vibesqa.harness.referee import RefereeResult
from vibesqa.harness.samples import EvalSample
from vibesqa.metrics import METRIC_FIELDS, MetricScores

CSV_COLUMNS = (
    "label",
    "sample_count",
    "word_recall_pct",
    "mean_relative_error",
    "numerical_score",
    "numerical_valid_count",
    "cider",
    "bleu_1",
    "bleu_2",
    "bleu_3",
    "bleu_4",
    "rouge_1",
    "rouge_2",
    "rouge_l",
)

_CSV_FIELD_MAP = {
    "word_recall_pct": "s_w",
    "mean_relative_error": "e_mean",
    "numerical_score": "s_n",
    "cider": "cider",
    "bleu_1": "bleu_1",
    "bleu_2": "bleu_2",
    "bleu_3": "bleu_3",
    "bleu_4": "bleu_4",
    "rouge_1": "rouge_1",
    "rouge_2": "rouge_2",
    "rouge_l": "rouge_l",
}


def _round6(value: float | None) -> float | None:
    return None if value is None else round(float(value), 6)


def _round_scores(scores: dict) -> dict:
    return {key: _round6(value) for key, value in scores.items()}


def per_sample_rows(samples: list[EvalSample], scores: list[MetricScores]) -> list[dict]:
    rows = []
    for sample, bundle in zip(samples, scores):
        rows.append(
            {
                "sample_id": sample.sample_id,
                "record_id": sample.record_id,
                "question_index": sample.question_index,
                "signal_category": sample.signal_category,
                "question": sample.question,
                "prediction": sample.prediction,
                "gold_answer": sample.gold_answer,
                "scores": _round_scores(bundle.as_dict()),
            }
        )
    return rows


def _stats_payload(stats: GroupStats) -> dict:
    payload = stats.as_dict()
    payload["scores"] = _round_scores(payload["scores"])
    return payload


def aggregate_payload(aggregate: AggregateReport) -> dict:
    return {
        "groups": [
            {"signal_category": category, "question": question}
            | _stats_payload(stats)
            for (category, question), stats in aggregate.groups.items()
        ],
        "categories": [
            {"signal_category": category} | _stats_payload(stats)
            for category, stats in aggregate.categories.items()
        ],
        "overall": _stats_payload(aggregate.overall),
    }


def aggregate_referee(
    samples: list[EvalSample], results: list[RefereeResult]
) -> dict:
    """Macro-averaged judge scores: per category, then overall."""
    if len(samples) != len(results):
        raise ValueError("samples and referee results must have equal length")
    status_counts = {"ok": 0, "error": 0, "skipped": 0}
    by_category: dict[str, list[RefereeResult]] = {}
    for sample, result in zip(samples, results):
        status_counts[result.status] += 1
        by_category.setdefault(sample.signal_category, []).append(result)

    categories = {}
    for category in sorted(by_category):
        scored = [r for r in by_category[category] if r.status == "ok"]
        categories[category] = {
            "ok_count": len(scored),
            "similarity": _round6(
                float(np.mean([r.similarity for r in scored])) if scored else None
            ),
            "parameter_accuracy": _round6(
                float(np.mean([r.parameter_accuracy for r in scored])) if scored else None
            ),
        }

    defined_sim = [c["similarity"] for c in categories.values() if c["similarity"] is not None]
    defined_par = [
        c["parameter_accuracy"]
        for c in categories.values()
        if c["parameter_accuracy"] is not None
    ]
    return {
        "status_counts": status_counts,
        "categories": categories,
        "overall": {
            "similarity": _round6(float(np.mean(defined_sim)) if defined_sim else None),
            "parameter_accuracy": _round6(float(np.mean(defined_par)) if defined_par else None),
        },
    }


def _csv_cell(value: float | None) -> str:
    return "NAN" if value is None else f"{value:.6f}"


def csv_summary_row(label: str, overall: dict) -> list[str]:
    """One CSV row from an overall stats payload (as found in summary.json)."""
    row = [label, str(overall["sample_count"])]
    for column in CSV_COLUMNS[2:]:
        if column == "numerical_valid_count":
            row.append(str(overall["s_n_valid_count"]))
        else:
            row.append(_csv_cell(overall["scores"][_CSV_FIELD_MAP[column]]))
    return row


def write_csv_summary(path: Path, rows: list[list[str]]) -> None:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    writer.writerows(rows)
    path.write_text(buffer.getvalue(), encoding="utf-8")


def _category_bar_plot(categories: dict[str, dict], path: Path) -> None:
    names = list(categories)
    recalls = [categories[c]["scores"]["s_w"] or 0.0 for c in names]
    ciders = [categories[c]["scores"]["cider"] or 0.0 for c in names]

    figure = Figure(figsize=(8, 3.5), dpi=110)
    FigureCanvasAgg(figure)
    for index, (title, values) in enumerate(
        (("Word recall (%)", recalls), ("Consensus score", ciders)), start=1
    ):
        axes = figure.add_subplot(1, 2, index)
        axes.bar(range(len(names)), values, color="#4878d0")
        axes.set_xticks(range(len(names)))
        axes.set_xticklabels(names, rotation=60, fontsize=6)
        axes.set_title(title, fontsize=8)
        axes.tick_params(labelsize=6)
    figure.tight_layout()
    figure.savefig(path, format="png")


def _metric_heatmap(categories: dict[str, dict], path: Path) -> None:
    fields = ("bleu_1", "bleu_2", "bleu_3", "bleu_4", "rouge_1", "rouge_2", "rouge_l")
    names = list(categories)
    grid = np.array(
        [[categories[c]["scores"][f] or 0.0 for f in fields] for c in names]
    )

    figure = Figure(figsize=(6, 4), dpi=110)
    FigureCanvasAgg(figure)
    axes = figure.add_subplot(1, 1, 1)
    image = axes.imshow(grid, aspect="auto", cmap="viridis", vmin=0.0, vmax=1.0)
    axes.set_xticks(range(len(fields)))
    axes.set_xticklabels(fields, rotation=45, fontsize=6)
    axes.set_yticks(range(len(names)))
    axes.set_yticklabels(names, fontsize=6)
    figure.colorbar(image, ax=axes)
    figure.tight_layout()
    figure.savefig(path, format="png")


def emit_report(
    samples: list[EvalSample],
    scores: list[MetricScores],
    aggregate: AggregateReport,
    out_dir: str | Path,
    label: str = "run",
    referee_results: list[RefereeResult] | None = None,
    warnings: dict[str, int] | None = None,
    plots: bool = False,
) -> dict[str, Path]:
    """Write the full report for one evaluation run; returns written paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    per_sample_path = out_dir / "per_sample.jsonl"
    with per_sample_path.open("w", encoding="utf-8") as handle:
        for row in per_sample_rows(samples, scores):
            handle.write(json.dumps(row, sort_keys=True) + "\n")

    referee_rows_path = None
    if referee_results is None:
        referee_section: dict = {"status": "skipped"}
    else:
        referee_section = {"status": "ok"} | aggregate_referee(samples, referee_results)
        referee_rows_path = out_dir / "referee.jsonl"
        with referee_rows_path.open("w", encoding="utf-8") as handle:
            for sample, result in zip(samples, referee_results):
                handle.write(
                    json.dumps(
                        {
                            "sample_id": sample.sample_id,
                            "signal_category": sample.signal_category,
                            "question": sample.question,
                            "status": result.status,
                            "similarity": result.similarity,
                            "parameter_accuracy": result.parameter_accuracy,
                            "explanation": result.explanation,
                            "error": result.error,
                        },
                        sort_keys=True,
                    )
                    + "\n"
                )

    summary = {
        "label": label,
        "sample_count": len(samples),
        "warnings": warnings or {"missing": 0, "extra": 0},
        "referee": referee_section,
        **aggregate_payload(aggregate),
    }
    summary_path = out_dir / "summary.json"
    summary_path.write_text(
        json.dumps(summary, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )

    csv_path = out_dir / "summary.csv"
    write_csv_summary(csv_path, [csv_summary_row(label, summary["overall"])])

    written = {
        "per_sample": per_sample_path,
        "summary": summary_path,
        "csv": csv_path,
    }
    if referee_rows_path is not None:
        written["referee"] = referee_rows_path
    if plots:
        categories = {c["signal_category"]: c for c in summary["categories"]}
        bar_path = out_dir / "category_scores.png"
        heatmap_path = out_dir / "overlap_heatmap.png"
        _category_bar_plot(categories, bar_path)
        _metric_heatmap(categories, heatmap_path)
        written["category_scores"] = bar_path
        written["overlap_heatmap"] = heatmap_path
    return written
