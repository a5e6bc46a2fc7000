"""End-to-end dataset generation: specs -> waveforms -> images -> records.

Every record draws from its own generator seeded by (seed, category index,
record index), so generation is reproducible record-by-record and could be
parallelized per record without changing output.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from vibesqa.sqa.dataset import DatasetManifest, split_dataset, write_dataset
from vibesqa.sqa.records import SqaRecord, build_sqa
from vibesqa.sqa.templates import CATEGORIES, paraphrase_questions
from vibesqa.waveforms import (
    ParamRanges,
    PlotStyle,
    RealSignalInfo,
    SamplingConfig,
    compute_spectrum,
    load_real_segment,
    render_plot,
    sample_random_spec,
    synthesize,
)


@dataclass(frozen=True)
class GenerateSettings:
    families: tuple[str, ...] = CATEGORIES
    per_family: int = 200
    eval_per_family: int = 20
    seed: int = 0
    sampling: SamplingConfig = field(default_factory=SamplingConfig)
    ranges: ParamRanges = field(default_factory=ParamRanges)
    plot_style: PlotStyle = field(default_factory=PlotStyle)
    thu_dir: Path | None = None
    thu_segment_samples: int = 4096
    render_images: bool = True
    paraphrase_questions: bool = False

    def __post_init__(self) -> None:
        for family in self.families:
            if family not in CATEGORIES:
                raise ValueError(f"unknown signal category {family!r}")
        if self.per_family < 0 or self.eval_per_family < 0:
            raise ValueError("per-family counts must be >= 0")
        if "THU" in self.families and (self.per_family + self.eval_per_family) > 0:
            if self.thu_dir is None:
                raise ValueError(
                    "generating the THU category requires --thu-dir with real recordings"
                )
        if self.thu_segment_samples < 2:
            raise ValueError("thu_segment_samples must be >= 2")


def _list_recordings(thu_dir: Path) -> list[Path]:
    files = sorted(
        p for p in thu_dir.iterdir() if p.is_file() and p.suffix not in (".json",)
    )
    if not files:
        raise ValueError(f"no raw recordings found in {thu_dir}")
    return files


def _thu_record(
    settings: GenerateSettings,
    recordings: list[Path],
    index: int,
    rng: np.random.Generator,
    record_id: str,
    image_path: str,
    out_dir: Path,
) -> SqaRecord:
    path = recordings[index % len(recordings)]
    total_samples = path.stat().st_size // 4
    if total_samples < settings.thu_segment_samples:
        raise ValueError(
            f"{path} holds {total_samples} samples; "
            f"{settings.thu_segment_samples} required per segment"
        )
    max_offset = total_samples - settings.thu_segment_samples
    offset = int(rng.integers(0, max_offset + 1)) if max_offset > 0 else 0
    waveform = load_real_segment(path, offset=offset, length=settings.thu_segment_samples)
    spectrum = compute_spectrum(waveform)
    if settings.render_images:
        image_bytes = render_plot(waveform, settings.plot_style)
        (out_dir / image_path).write_bytes(image_bytes)
    info = RealSignalInfo.from_metadata(waveform.metadata)
    return build_sqa(info, waveform, spectrum, record_id, image_path)


def generate_dataset(out_dir: str | Path, settings: GenerateSettings) -> DatasetManifest:
    """Generate, split, and write a dataset; returns the written manifest."""
    out_dir = Path(out_dir)
    (out_dir / "images").mkdir(parents=True, exist_ok=True)

    recordings: list[Path] = []
    if "THU" in settings.families and settings.thu_dir is not None:
        recordings = _list_recordings(Path(settings.thu_dir))

    total_per_family = settings.per_family + settings.eval_per_family
    records: list[SqaRecord] = []
    for family in settings.families:
        family_index = CATEGORIES.index(family)
        for index in range(total_per_family):
            rng = np.random.default_rng((settings.seed, family_index, index))
            record_id = f"{family}-{index:05d}"
            image_path = f"images/{record_id}.png"
            if family == "THU":
                record = _thu_record(
                    settings, recordings, index, rng, record_id, image_path, out_dir
                )
            else:
                spec = sample_random_spec(family, settings.ranges, rng)
                waveform = synthesize(spec, settings.sampling)
                spectrum = compute_spectrum(waveform)
                if settings.render_images:
                    image_bytes = render_plot(waveform, settings.plot_style)
                    (out_dir / image_path).write_bytes(image_bytes)
                record = build_sqa(spec, waveform, spectrum, record_id, image_path)
            if settings.paraphrase_questions:
                record = replace(
                    record, qa=tuple(paraphrase_questions(record.qa, rng))
                )
            records.append(record)

    manifest, splits = split_dataset(
        records,
        {"train": settings.per_family, "eval": settings.eval_per_family},
        settings.seed,
    )
    write_dataset(splits, manifest, out_dir)
    return manifest
