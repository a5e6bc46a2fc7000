import json

import pytest

from vibesqa.harness import (
    EvalSample,
    RefereeResult,
    aggregate_referee,
    calculate_rule_based,
    csv_summary_row,
    emit_report,
    group_and_average,
)


def _samples():
    rows = [
        ("SH", "What is the type of this signal?", "This is a simple harmonic signal.",
         "This is a simple harmonic signal."),
        ("SH", "What is the amplitude of this signal?", "The amplitude is 0.29.",
         "The amplitude is 0.31."),
        ("AM", "What is the type of this signal?", "This is an amplitude modulated signal.",
         "An amplitude modulated signal."),
        ("AM", "What is the carrier frequency of this signal?", "The carrier is 100 Hz.",
         "The carrier is 90 Hz."),
    ]
    samples = []
    for index, (category, question, gold, prediction) in enumerate(rows):
        samples.append(
            EvalSample(
                sample_id=f"{category}-{index:05d}:0",
                record_id=f"{category}-{index:05d}",
                question_index=0,
                signal_category=category,
                question=question,
                prediction=prediction,
                gold_answer=gold,
            )
        )
    return samples


@pytest.fixture()
def scored():
    samples = _samples()
    scores = calculate_rule_based(samples)
    aggregate = group_and_average(samples, scores)
    return samples, scores, aggregate


class TestEmitReport:
    def test_written_twice_is_byte_identical(self, tmp_path, scored):
        samples, scores, aggregate = scored
        first = emit_report(samples, scores, aggregate, tmp_path / "a", label="m1")
        second = emit_report(samples, scores, aggregate, tmp_path / "b", label="m1")
        for key in ("per_sample", "summary", "csv"):
            assert first[key].read_bytes() == second[key].read_bytes()

    def test_summary_structure(self, tmp_path, scored):
        samples, scores, aggregate = scored
        written = emit_report(samples, scores, aggregate, tmp_path, label="m1")
        summary = json.loads(written["summary"].read_text())
        assert summary["label"] == "m1"
        assert summary["sample_count"] == 4
        assert summary["referee"] == {"status": "skipped"}
        assert {c["signal_category"] for c in summary["categories"]} == {"SH", "AM"}
        assert len(summary["groups"]) == 4
        overall = summary["overall"]
        assert overall["sample_count"] == 4
        # Macro identity directly from the report payload.
        for field, value in overall["scores"].items():
            defined = [
                c["scores"][field]
                for c in summary["categories"]
                if c["scores"][field] is not None
            ]
            if value is not None:
                assert value == pytest.approx(sum(defined) / len(defined), abs=1e-6)

    def test_per_sample_rows_in_dataset_order(self, tmp_path, scored):
        samples, scores, aggregate = scored
        written = emit_report(samples, scores, aggregate, tmp_path)
        lines = [json.loads(l) for l in written["per_sample"].read_text().splitlines()]
        assert [row["sample_id"] for row in lines] == [s.sample_id for s in samples]
        assert all("scores" in row for row in lines)

    def test_csv_has_header_and_one_row(self, tmp_path, scored):
        samples, scores, aggregate = scored
        written = emit_report(samples, scores, aggregate, tmp_path, label="stage-1")
        lines = written["csv"].read_text().splitlines()
        assert len(lines) == 2
        header = lines[0].split(",")
        assert header[0] == "label"
        assert "word_recall_pct" in header
        assert "bleu_4" in header
        row = lines[1].split(",")
        assert row[0] == "stage-1"

    def test_nan_cells_render_as_nan_string(self):
        overall = {
            "sample_count": 2,
            "s_n_valid_count": 0,
            "scores": {
                "s_w": 50.0, "e_mean": None, "s_n": None, "cider": 1.0,
                "bleu_1": 0.1, "bleu_2": 0.1, "bleu_3": 0.1, "bleu_4": 0.1,
                "rouge_1": 0.2, "rouge_2": 0.2, "rouge_l": 0.2,
            },
        }
        row = csv_summary_row("x", overall)
        assert "NAN" in row
        assert row[row.index("NAN")] == "NAN"

    def test_plots_written_when_requested(self, tmp_path, scored):
        samples, scores, aggregate = scored
        written = emit_report(samples, scores, aggregate, tmp_path, plots=True)
        assert written["category_scores"].exists()
        assert written["overlap_heatmap"].exists()
        assert written["category_scores"].read_bytes()[:4] == b"\x89PNG"

    def test_referee_section_and_isolation(self, tmp_path, scored):
        samples, scores, aggregate = scored
        results = [
            RefereeResult(status="ok", similarity=8.0, parameter_accuracy=7.0),
            RefereeResult(status="ok", similarity=6.0, parameter_accuracy=5.0),
            RefereeResult(status="error", error="boom"),
            RefereeResult(status="ok", similarity=4.0, parameter_accuracy=3.0),
        ]
        with_referee = emit_report(
            samples, scores, aggregate, tmp_path / "with", referee_results=results
        )
        without = emit_report(samples, scores, aggregate, tmp_path / "without")
        # Referee isolation: rule-based artifacts identical either way.
        assert (tmp_path / "with/per_sample.jsonl").read_bytes() == (
            tmp_path / "without/per_sample.jsonl"
        ).read_bytes()
        assert with_referee["csv"].read_bytes() == without["csv"].read_bytes()
        summary = json.loads(with_referee["summary"].read_text())
        referee = summary["referee"]
        assert referee["status_counts"] == {"ok": 3, "error": 1, "skipped": 0}
        assert referee["categories"]["SH"]["similarity"] == pytest.approx(7.0)
        assert referee["categories"]["AM"]["similarity"] == pytest.approx(4.0)
        assert referee["overall"]["similarity"] == pytest.approx(5.5)
        # Per-sample judge rows sit beside the rule-based rows.
        referee_rows = [
            json.loads(l) for l in with_referee["referee"].read_text().splitlines()
        ]
        assert [row["sample_id"] for row in referee_rows] == [s.sample_id for s in samples]
        assert referee_rows[2]["status"] == "error"
        assert "referee" not in without


class TestAggregateReferee:
    def test_macro_average_and_counts(self):
        samples = _samples()
        results = [
            RefereeResult(status="ok", similarity=10.0, parameter_accuracy=9.0),
            RefereeResult(status="skipped"),
            RefereeResult(status="ok", similarity=2.0, parameter_accuracy=1.0),
            RefereeResult(status="ok", similarity=4.0, parameter_accuracy=5.0),
        ]
        section = aggregate_referee(samples, results)
        assert section["status_counts"]["ok"] == 3
        assert section["categories"]["SH"]["similarity"] == 10.0
        assert section["categories"]["AM"]["similarity"] == 3.0
        assert section["overall"]["similarity"] == 6.5

    def test_all_skipped_gives_null_overall(self):
        samples = _samples()
        results = [RefereeResult(status="skipped") for _ in samples]
        section = aggregate_referee(samples, results)
        assert section["overall"]["similarity"] is None
        assert section["status_counts"]["skipped"] == 4
