"""Command-line interface.

Subcommands:
  generate   synthesize signals and write an SQA instruction dataset
  evaluate   score model predictions with the rule-based metric suite
  referee    score model predictions with an external judge model
  reward     score raw completions against the synonym vocabulary
  report     merge evaluation runs and judge results into one report
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from vibesqa.config import load_config


def _add_config_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, default=None, help="global JSON config file")


def _cmd_generate(args: argparse.Namespace) -> int:
    from vibesqa.sqa import CATEGORIES, GenerateSettings, generate_dataset

    config = load_config(args.config)
    families = tuple(f.strip() for f in args.families.split(",")) if args.families else CATEGORIES
    settings = GenerateSettings(
        families=families,
        per_family=args.per_family,
        eval_per_family=args.eval_per_family,
        seed=args.seed,
        sampling=config.sampling,
        ranges=config.ranges,
        plot_style=config.plot,
        thu_dir=args.thu_dir,
        thu_segment_samples=args.thu_segment_samples,
        render_images=not args.no_images,
        paraphrase_questions=args.paraphrase_questions,
    )
    manifest = generate_dataset(args.out, settings)
    total = {split: sum(counts.values()) for split, counts in manifest.split_counts.items()}
    print(f"wrote dataset to {args.out}: " + ", ".join(f"{k}={v}" for k, v in total.items()))
    return 0


def _cmd_evaluate(args: argparse.Namespace) -> int:
    from vibesqa.harness import (
        calculate_rule_based,
        emit_report,
        group_and_average,
        load_predictions,
    )

    config = load_config(args.config)
    samples, warnings = load_predictions(args.dataset, args.predictions)
    if warnings["missing"]:
        print(f"warning: {warnings['missing']} gold pairs had no prediction", file=sys.stderr)
    if warnings["extra"]:
        print(f"warning: {warnings['extra']} predictions matched no gold pair", file=sys.stderr)
    scores = calculate_rule_based(samples, config.metric, workers=args.workers)
    aggregate = group_and_average(samples, scores)
    written = emit_report(
        samples,
        scores,
        aggregate,
        args.out,
        label=args.label,
        warnings=warnings,
        plots=args.plots,
    )
    print(f"wrote rule-based report to {written['summary'].parent}")
    return 0


def _cmd_referee(args: argparse.Namespace) -> int:
    from vibesqa.harness import load_predictions, score_with_referee

    config = load_config(args.config)
    samples, _warnings = load_predictions(args.dataset, args.predictions)
    results = score_with_referee(samples, config.referee)
    out_path = Path(args.out)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    with out_path.open("w", encoding="utf-8") as handle:
        for sample, result in zip(samples, results):
            row = {
                "sample_id": sample.sample_id,
                "signal_category": sample.signal_category,
                "question": sample.question,
                "status": result.status,
                "similarity": result.similarity,
                "parameter_accuracy": result.parameter_accuracy,
                "explanation": result.explanation,
                "error": result.error,
            }
            handle.write(json.dumps(row, sort_keys=True) + "\n")
    counts = {status: sum(1 for r in results if r.status == status) for status in ("ok", "error", "skipped")}
    print(f"wrote judge results to {out_path}: " + ", ".join(f"{k}={v}" for k, v in counts.items()))
    return 0


def _read_jsonl_column(path: Path, *keys: str) -> list[str]:
    values = []
    with path.open("r", encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            payload = json.loads(line)
            if isinstance(payload, str):
                values.append(payload)
                continue
            for key in keys:
                if key in payload:
                    values.append(str(payload[key]))
                    break
            else:
                raise ValueError(f"{path}:{line_number}: expected one of {keys} in row")
    return values


def _cmd_reward(args: argparse.Namespace) -> int:
    from vibesqa.reward import (
        RewardConfig,
        SynonymVocabulary,
        extract_answer,
        find_best_match,
        reward_batch,
        summarize_rewards,
    )

    config = load_config(args.config)
    vocab_path = args.vocab or config.vocabulary_path
    vocabulary = SynonymVocabulary.load(vocab_path)
    beta = args.beta_exact if args.beta_exact is not None else config.reward.beta_exact
    reward_config = RewardConfig(beta_exact=beta)

    completions = _read_jsonl_column(Path(args.completions), "completion", "text", "raw")
    golds = _read_jsonl_column(Path(args.gold), "label", "answer", "gold")
    scores = reward_batch(completions, golds, vocabulary, reward_config)

    out_path = Path(args.out)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    with out_path.open("w", encoding="utf-8") as handle:
        for index, (completion, gold, score) in enumerate(zip(completions, golds, scores)):
            row = {"index": index, "reward": round(score, 6)}
            acceptable = vocabulary.lookup(gold)
            if acceptable is not None:
                best_score, best_synonym, best_weight = find_best_match(
                    extract_answer(completion), acceptable
                )
                row["best_match"] = best_synonym
                row["fuzzy_score"] = round(best_score, 6)
                row["weight"] = best_weight
            else:
                row["best_match"] = None
                row["fuzzy_score"] = None
                row["weight"] = None
            handle.write(json.dumps(row, sort_keys=True) + "\n")

    summary = summarize_rewards(scores)
    if summary["count"]:
        print(
            f"scored {summary['count']} completions: "
            f"mean={summary['mean']:.6f} std={summary['std']:.6f}"
        )
    else:
        print("scored 0 completions")
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    from vibesqa.harness import csv_summary_row, write_csv_summary

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    runs = []
    for run_dir in args.run:
        summary_path = Path(run_dir) / "summary.json"
        runs.append(json.loads(summary_path.read_text(encoding="utf-8")))

    merged: dict = {"runs": [{"label": r["label"], "overall": r["overall"]} for r in runs]}

    if args.referee is not None:
        by_status = {"ok": 0, "error": 0, "skipped": 0}
        by_category: dict[str, list[dict]] = {}
        with Path(args.referee).open("r", encoding="utf-8") as handle:
            for line in handle:
                line = line.strip()
                if not line:
                    continue
                row = json.loads(line)
                by_status[row["status"]] += 1
                if row["status"] == "ok":
                    by_category.setdefault(row["signal_category"], []).append(row)
        categories = {
            category: {
                "ok_count": len(rows),
                "similarity": round(sum(r["similarity"] for r in rows) / len(rows), 6),
                "parameter_accuracy": round(
                    sum(r["parameter_accuracy"] for r in rows) / len(rows), 6
                ),
            }
            for category, rows in sorted(by_category.items())
        }
        overall = None
        if categories:
            overall = {
                "similarity": round(
                    sum(c["similarity"] for c in categories.values()) / len(categories), 6
                ),
                "parameter_accuracy": round(
                    sum(c["parameter_accuracy"] for c in categories.values())
                    / len(categories),
                    6,
                ),
            }
        merged["referee"] = {
            "status_counts": by_status,
            "categories": categories,
            "overall": overall,
        }
    else:
        merged["referee"] = {"status": "skipped"}

    (out_dir / "report.json").write_text(
        json.dumps(merged, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    write_csv_summary(
        out_dir / "report.csv",
        [csv_summary_row(r["label"], r["overall"]) for r in runs],
    )
    print(f"wrote merged report to {out_dir}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vibesqa",
        description="Vibration-signal SQA dataset generation and evaluation toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate an SQA dataset with signal images")
    gen.add_argument("--out", type=Path, required=True, help="output dataset directory")
    gen.add_argument(
        "--families",
        default="",
        help="comma-separated category names (default: all twelve)",
    )
    gen.add_argument("--per-family", type=int, default=200, help="training records per category")
    gen.add_argument("--eval-per-family", type=int, default=20, help="eval records per category")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--thu-dir", type=Path, default=None, help="directory of real recordings")
    gen.add_argument("--thu-segment-samples", type=int, default=4096)
    gen.add_argument(
        "--no-images",
        action="store_true",
        help="skip PNG rendering (records still reference image paths)",
    )
    gen.add_argument(
        "--paraphrase-questions",
        action="store_true",
        help="randomly vary question phrasing (answers unchanged)",
    )
    _add_config_flag(gen)
    gen.set_defaults(func=_cmd_generate)

    ev = sub.add_parser("evaluate", help="run the rule-based metric suite")
    ev.add_argument("--dataset", type=Path, required=True, help="gold dataset JSONL")
    ev.add_argument("--predictions", type=Path, required=True, help="predictions JSONL")
    ev.add_argument("--out", type=Path, required=True, help="report output directory")
    ev.add_argument("--label", default="run", help="run label used in reports")
    ev.add_argument("--workers", type=int, default=1, help="parallel scoring workers")
    ev.add_argument("--plots", action="store_true", help="also render report plots")
    _add_config_flag(ev)
    ev.set_defaults(func=_cmd_evaluate)

    ref = sub.add_parser("referee", help="score predictions with an external judge model")
    ref.add_argument("--dataset", type=Path, required=True)
    ref.add_argument("--predictions", type=Path, required=True)
    ref.add_argument("--out", type=Path, required=True, help="judge results JSONL path")
    _add_config_flag(ref)
    ref.set_defaults(func=_cmd_referee)

    rew = sub.add_parser("reward", help="score completions against the synonym vocabulary")
    rew.add_argument("--completions", type=Path, required=True, help="completions JSONL")
    rew.add_argument("--gold", type=Path, required=True, help="gold labels JSONL")
    rew.add_argument("--out", type=Path, required=True, help="per-row scores JSONL path")
    rew.add_argument("--vocab", type=Path, default=None, help="vocabulary JSON override")
    rew.add_argument("--beta-exact", type=float, default=None, help="exact-match bonus")
    _add_config_flag(rew)
    rew.set_defaults(func=_cmd_reward)

    rep = sub.add_parser("report", help="merge evaluation runs and judge results")
    rep.add_argument(
        "--run",
        type=Path,
        action="append",
        required=True,
        help="evaluation output directory (repeatable)",
    )
    rep.add_argument("--referee", type=Path, default=None, help="judge results JSONL")
    rep.add_argument("--out", type=Path, required=True)
    rep.set_defaults(func=_cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
