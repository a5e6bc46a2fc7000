"""Dataset splitting and JSONL serialization.

Each split becomes one JSON-lines file; a manifest records per-category
counts, the seed, and format/toolkit versions. Record construction is
parallelizable, but each split file has a single writer.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from vibesqa.sqa.records import QaPair, SqaRecord

DATASET_FORMAT_VERSION = 1
SPECTRUM_SCALING_NOTE = (
    "single-sided amplitude: |X[0]|/N at DC, 2|X[k]|/N interior, |X[N/2]|/N at Nyquist"
)


@dataclass(frozen=True)
class DatasetManifest:
    """Shape and provenance of one written dataset."""

    format_version: int
    toolkit_version: str
    seed: int
    categories: tuple[str, ...]
    split_counts: dict[str, dict[str, int]]  # split -> category -> count
    spectrum_scaling: str = SPECTRUM_SCALING_NOTE

    def __post_init__(self) -> None:
        from vibesqa.sqa.templates import CATEGORIES

        for split, by_category in self.split_counts.items():
            for category, count in by_category.items():
                if category not in CATEGORIES:
                    raise ValueError(f"unknown category {category!r} in split {split!r}")
                if count < 0:
                    raise ValueError(f"negative count for {category!r} in split {split!r}")


def split_dataset(
    records: list[SqaRecord],
    counts: dict[str, int],
    seed: int = 0,
) -> tuple[DatasetManifest, dict[str, list[SqaRecord]]]:
    """Partition records per category into the requested splits.

    `counts` maps split name to the per-category record count (e.g.
    `{"train": 200, "eval": 20}`). Records of each category are shuffled
    deterministically under `seed` and dealt into the splits in order;
    partitions are disjoint by construction. Raises when any category has
    too few records.
    """
    from vibesqa import __version__
    from vibesqa.sqa.templates import CATEGORIES

    by_category: dict[str, list[SqaRecord]] = {}
    for record in records:
        by_category.setdefault(record.signal_category, []).append(record)

    needed = sum(counts.values())
    splits: dict[str, list[SqaRecord]] = {name: [] for name in counts}
    split_counts: dict[str, dict[str, int]] = {name: {} for name in counts}

    for category in sorted(by_category, key=CATEGORIES.index):
        pool = by_category[category]
        if len(pool) < needed:
            raise ValueError(
                f"category {category!r} has {len(pool)} records; "
                f"{needed} required by the requested split sizes"
            )
        rng = np.random.default_rng((seed, CATEGORIES.index(category)))
        order = rng.permutation(len(pool))
        cursor = 0
        for name, count in counts.items():
            for index in order[cursor : cursor + count]:
                splits[name].append(pool[int(index)])
            split_counts[name][category] = count
            cursor += count

    for name in splits:
        splits[name].sort(key=lambda r: r.record_id)

    manifest = DatasetManifest(
        format_version=DATASET_FORMAT_VERSION,
        toolkit_version=__version__,
        seed=seed,
        categories=tuple(sorted(by_category, key=CATEGORIES.index)),
        split_counts=split_counts,
    )
    return manifest, splits


def _conversation(record: SqaRecord) -> list[dict]:
    turns = []
    for index, pair in enumerate(record.qa):
        content = f"<image>\n{pair.question}" if index == 0 else pair.question
        turns.append({"role": "user", "content": content})
        turns.append({"role": "assistant", "content": pair.answer})
    return turns


def record_to_json(record: SqaRecord) -> dict:
    return {
        "record_id": record.record_id,
        "image": record.image_path,
        "signal_category": record.signal_category,
        "type_label": record.type_label,
        "ground_truth": record.ground_truth,
        "qa": [asdict(pair) for pair in record.qa],
        "conversation": _conversation(record),
    }


def record_from_json(payload: dict) -> SqaRecord:
    return SqaRecord(
        record_id=payload["record_id"],
        image_path=payload["image"],
        signal_category=payload["signal_category"],
        type_label=payload["type_label"],
        ground_truth=payload["ground_truth"],
        qa=tuple(
            QaPair(question=p["question"], answer=p["answer"], kind=p["kind"])
            for p in payload["qa"]
        ),
    )


def write_dataset(
    splits: dict[str, list[SqaRecord]],
    manifest: DatasetManifest,
    out_dir: str | Path,
) -> Path:
    """Write one JSONL file per split plus `manifest.json`; returns the manifest path."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    seen_ids: set[str] = set()
    for name, records in splits.items():
        for record in records:
            if record.record_id in seen_ids:
                raise ValueError(f"duplicate record_id {record.record_id!r}")
            seen_ids.add(record.record_id)
        path = out_dir / f"{name}.jsonl"
        with path.open("w", encoding="utf-8") as handle:
            for record in records:
                handle.write(json.dumps(record_to_json(record), sort_keys=True) + "\n")

    manifest_path = out_dir / "manifest.json"
    manifest_path.write_text(
        json.dumps(asdict(manifest), indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    return manifest_path


def read_dataset(path: str | Path) -> list[SqaRecord]:
    """Read one split file back into records."""
    records = []
    with Path(path).open("r", encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                payload = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ValueError(f"{path}:{line_number}: malformed JSON: {exc}") from exc
            records.append(record_from_json(payload))
    return records


def read_manifest(out_dir: str | Path) -> DatasetManifest:
    payload = json.loads((Path(out_dir) / "manifest.json").read_text(encoding="utf-8"))
    return DatasetManifest(
        format_version=payload["format_version"],
        toolkit_version=payload["toolkit_version"],
        seed=payload["seed"],
        categories=tuple(payload["categories"]),
        split_counts=payload["split_counts"],
        spectrum_scaling=payload["spectrum_scaling"],
    )
