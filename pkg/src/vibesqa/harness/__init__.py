"""Evaluation orchestration: sample loading, rule-based scoring, hierarchical
aggregation, judge-model scoring, and report emission.
"""

from vibesqa.harness.grouping import AggregateReport, GroupStats, group_and_average
from vibesqa.harness.referee import (
    DEFAULT_PROMPT_TEMPLATE,
    RefereeConfig,
    RefereeParseError,
    RefereeResult,
    build_prompt,
    http_transport,
    parse_referee_reply,
    score_with_referee,
)
from vibesqa.harness.report import (
    CSV_COLUMNS,
    aggregate_payload,
    aggregate_referee,
    csv_summary_row,
    emit_report,
    per_sample_rows,
    write_csv_summary,
)
from vibesqa.harness.rules import calculate_rule_based
from vibesqa.harness.samples import EvalSample, load_predictions, read_predictions

__all__ = [
    "AggregateReport",
    "CSV_COLUMNS",
    "DEFAULT_PROMPT_TEMPLATE",
    "EvalSample",
    "GroupStats",
    "RefereeConfig",
    "RefereeParseError",
    "RefereeResult",
    "aggregate_payload",
    "aggregate_referee",
    "build_prompt",
    "calculate_rule_based",
    "csv_summary_row",
    "emit_report",
    "group_and_average",
    "http_transport",
    "load_predictions",
    "parse_referee_reply",
    "per_sample_rows",
    "read_predictions",
    "score_with_referee",
    "write_csv_summary",
]
