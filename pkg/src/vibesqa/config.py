"""Global configuration file handling.

The config file is JSON with optional blocks, each mapping onto one
settings dataclass:

    {
      "sampling": {"sample_rate_hz": 1000.0, "duration_s": 1.0},
      "ranges":   {"seed": 0, "base_freq_hz": [20.0, 80.0], ...,
                   "harmonic_count": [2, 5], "rh_freq_mean_hz": 100.0},
      "plot":     {"width_px": 336, "height_px": 336, "dpi": 96, ...},
      "metric":   {"decay_rate": 1.0, "epsilon": 1e-6, ...},
      "reward":   {"beta_exact": 0.1, "vocabulary": "path/or/null"},
      "referee":  {"endpoint_url": "...", "model": "...",
                   "credential_env": "JUDGE_API_KEY", "timeout_s": 30.0,
                   "max_concurrent": 4, "max_retries": 2}
    }

Missing blocks and missing keys fall back to the dataclass defaults.
Interval-valued range fields are written as two-element [lo, hi] arrays.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from vibesqa.harness.referee import RefereeConfig
from vibesqa.metrics import MetricConfig
from vibesqa.reward import RewardConfig
from vibesqa.waveforms import Interval, ParamRanges, PlotStyle, SamplingConfig

_INTERVAL_FIELDS = (
    "amplitude_v",
    "base_freq_hz",
    "phase_rad",
    "mod_index",
    "carrier_freq_hz",
    "mod_freq_hz",
    "freq_deviation_hz",
    "decay_per_s",
    "impulse_period_s",
    "onset_s",
)
_COUNT_FIELDS = ("harmonic_count", "component_count", "impulse_count")


@dataclass(frozen=True)
class ToolkitConfig:
    sampling: SamplingConfig = field(default_factory=SamplingConfig)
    ranges: ParamRanges = field(default_factory=ParamRanges)
    plot: PlotStyle = field(default_factory=PlotStyle)
    metric: MetricConfig = field(default_factory=MetricConfig)
    reward: RewardConfig = field(default_factory=RewardConfig)
    referee: RefereeConfig = field(default_factory=RefereeConfig)
    vocabulary_path: str | None = None


def _build_ranges(block: dict) -> ParamRanges:
    kwargs: dict = {}
    for key, value in block.items():
        if key in _INTERVAL_FIELDS:
            lo, hi = value
            kwargs[key] = Interval(float(lo), float(hi))
        elif key in _COUNT_FIELDS:
            lo, hi = value
            kwargs[key] = (int(lo), int(hi))
        else:
            kwargs[key] = value
    return ParamRanges(**kwargs)


def load_config(path: str | Path | None = None) -> ToolkitConfig:
    """Load a config file; `None` yields all defaults."""
    if path is None:
        return ToolkitConfig()
    payload = json.loads(Path(path).read_text(encoding="utf-8"))

    reward_block = dict(payload.get("reward", {}))
    vocabulary_path = reward_block.pop("vocabulary", None)

    cider_weights = None
    metric_block = dict(payload.get("metric", {}))
    if "cider_ngram_weights" in metric_block:
        cider_weights = tuple(float(w) for w in metric_block.pop("cider_ngram_weights"))
    metric = MetricConfig(
        **metric_block,
        **({"cider_ngram_weights": cider_weights} if cider_weights else {}),
    )

    return ToolkitConfig(
        sampling=SamplingConfig(**payload.get("sampling", {})),
        ranges=_build_ranges(payload.get("ranges", {})),
        plot=PlotStyle(**payload.get("plot", {})),
        metric=metric,
        reward=RewardConfig(**reward_block),
        referee=RefereeConfig(**payload.get("referee", {})),
        vocabulary_path=vocabulary_path,
    )
