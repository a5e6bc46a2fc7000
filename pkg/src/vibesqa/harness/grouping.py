"""Hierarchical aggregation of per-sample scores.

Three levels: samples average into (signal category, question) groups,
groups average into categories, and category means average -- unweighted --
into the overall row, so small categories count as much as large ones.
Undefined numerical scores (the NAN sentinel) are skipped at every level
and the number of valid samples is carried alongside.
"""

from __future__ import annotations

from dataclasses import dataclass
from statistics import fmean

from vibesqa.harness.samples import EvalSample
from vibesqa.metrics import METRIC_FIELDS, MetricScores


@dataclass(frozen=True)
class GroupStats:
    sample_count: int
    s_n_valid_count: int
    scores: dict[str, float | None]

    def as_dict(self) -> dict:
        return {
            "sample_count": self.sample_count,
            "s_n_valid_count": self.s_n_valid_count,
            "scores": dict(self.scores),
        }


@dataclass(frozen=True)
class AggregateReport:
    groups: dict[tuple[str, str], GroupStats]
    categories: dict[str, GroupStats]
    overall: GroupStats


def _mean_or_none(values: list[float | None]) -> float | None:
    defined = [v for v in values if v is not None]
    return fmean(defined) if defined else None


def _aggregate(score_dicts: list[dict], counts: list[int], valid_counts: list[int]) -> GroupStats:
    return GroupStats(
        sample_count=sum(counts),
        s_n_valid_count=sum(valid_counts),
        scores={
            field: _mean_or_none([d[field] for d in score_dicts])
            for field in METRIC_FIELDS
        },
    )


def group_and_average(
    samples: list[EvalSample], scores: list[MetricScores]
) -> AggregateReport:
    """Aggregate per-sample scores into group, category, and overall rows."""
    if len(samples) != len(scores):
        raise ValueError("samples and scores must have equal length")

    by_group: dict[tuple[str, str], list[MetricScores]] = {}
    for sample, bundle in zip(samples, scores):
        by_group.setdefault((sample.signal_category, sample.question), []).append(bundle)

    groups: dict[tuple[str, str], GroupStats] = {}
    for key in sorted(by_group):
        bundles = by_group[key]
        groups[key] = _aggregate(
            [b.as_dict() for b in bundles],
            [1] * len(bundles),
            [1 for b in bundles if b.s_n is not None],
        )

    by_category: dict[str, list[GroupStats]] = {}
    for (category, _question), stats in groups.items():
        by_category.setdefault(category, []).append(stats)

    categories: dict[str, GroupStats] = {}
    for category in sorted(by_category):
        stats_list = by_category[category]
        categories[category] = _aggregate(
            [s.scores for s in stats_list],
            [s.sample_count for s in stats_list],
            [s.s_n_valid_count for s in stats_list],
        )

    category_stats = list(categories.values())
    overall = _aggregate(
        [s.scores for s in category_stats],
        [s.sample_count for s in category_stats],
        [s.s_n_valid_count for s in category_stats],
    )
    return AggregateReport(groups=groups, categories=categories, overall=overall)
