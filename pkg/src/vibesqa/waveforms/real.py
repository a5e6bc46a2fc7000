"""Access to real bearing-vibration recordings.

Interchange format: a raw little-endian float32 sample stream plus a JSON
sidecar (same stem, `.json` extension) declaring at minimum `sample_rate_hz`
and `label`. Optional sidecar keys: `channel`, `shaft_freq_hz`,
`fault_freq_hz`. Labels name one of four bearing health conditions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from vibesqa.waveforms.specs import SamplingConfig
from vibesqa.waveforms.synth import Waveform

HEALTH_CONDITIONS = (
    "normal",
    "inner race fault",
    "ball fault",
    "outer race fault",
)

# Short condition names used in question/answer text.
CONDITION_DISPLAY_NAMES = {
    "normal": "health",
    "inner race fault": "inner fault",
    "ball fault": "roller fault",
    "outer race fault": "outer fault",
}

_LABEL_ALIASES = {
    "normal": "normal",
    "health": "normal",
    "healthy": "normal",
    "inner race fault": "inner race fault",
    "inner fault": "inner race fault",
    "ball fault": "ball fault",
    "roller fault": "ball fault",
    "outer race fault": "outer race fault",
    "outer fault": "outer race fault",
}


def canonical_condition(label: str) -> str:
    """Map a label string to one of the four canonical health conditions."""
    key = " ".join(label.lower().split())
    try:
        return _LABEL_ALIASES[key]
    except KeyError:
        raise ValueError(
            f"unknown health-condition label {label!r}; expected one of "
            f"{sorted(set(_LABEL_ALIASES))}"
        ) from None


@dataclass(frozen=True)
class RealSignalInfo:
    """Ground-truth metadata of one real-recording segment."""

    condition: str
    shaft_freq_hz: float | None = None
    fault_freq_hz: float | None = None

    family = "THU"

    def __post_init__(self) -> None:
        if self.condition not in HEALTH_CONDITIONS:
            raise ValueError(f"condition must be canonical, got {self.condition!r}")

    @property
    def display_name(self) -> str:
        return CONDITION_DISPLAY_NAMES[self.condition]

    @classmethod
    def from_metadata(cls, metadata: dict) -> "RealSignalInfo":
        return cls(
            condition=canonical_condition(metadata["label"]),
            shaft_freq_hz=metadata.get("shaft_freq_hz"),
            fault_freq_hz=metadata.get("fault_freq_hz"),
        )


def _sidecar_path(data_path: Path) -> Path:
    return data_path.with_suffix(".json")


def write_real_segment(
    data_path: str | Path,
    samples: np.ndarray,
    sample_rate_hz: float,
    label: str,
    channel: int = 0,
    **extra_header,
) -> None:
    """Write a raw float32 stream and its JSON sidecar (test and tooling aid)."""
    data_path = Path(data_path)
    canonical_condition(label)
    np.asarray(samples, dtype="<f4").tofile(data_path)
    header = {
        "sample_rate_hz": sample_rate_hz,
        "label": label,
        "channel": channel,
        **extra_header,
    }
    _sidecar_path(data_path).write_text(json.dumps(header, indent=2))


def load_real_segment(
    path: str | Path,
    offset: int = 0,
    length: int | None = None,
    meta: dict | None = None,
) -> Waveform:
    """Load `length` samples starting at sample index `offset`.

    The returned waveform carries the file's declared sample rate, the
    canonical health-condition label, and any extra sidecar or caller
    metadata. `length=None` reads through the end of the file.
    """
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"no such recording: {path}")
    sidecar = _sidecar_path(path)
    if not sidecar.is_file():
        raise FileNotFoundError(f"missing sidecar header: {sidecar}")

    try:
        header = json.loads(sidecar.read_text())
        sample_rate_hz = float(header["sample_rate_hz"])
        raw_label = header["label"]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed sidecar header {sidecar}: {exc}") from exc
    condition = canonical_condition(raw_label)

    total_bytes = path.stat().st_size
    if total_bytes % 4 != 0:
        raise ValueError(f"truncated recording {path}: size {total_bytes} not a multiple of 4")
    total_samples = total_bytes // 4
    if length is None:
        length = total_samples - offset
    if length <= 0:
        raise ValueError(f"segment length must be > 0, got {length}")
    if offset < 0:
        raise ValueError(f"offset must be >= 0, got {offset}")
    if offset + length > total_samples:
        raise ValueError(
            f"segment [{offset}, {offset + length}) exceeds file of {total_samples} samples"
        )

    with path.open("rb") as handle:
        handle.seek(offset * 4)
        samples = np.fromfile(handle, dtype="<f4", count=length)
    if samples.shape[0] != length:
        raise ValueError(f"truncated recording {path}: expected {length} samples")

    metadata = {
        key: header[key]
        for key in ("channel", "shaft_freq_hz", "fault_freq_hz")
        if key in header
    }
    metadata["label"] = condition
    metadata["source"] = str(path)
    metadata["offset"] = offset
    if meta:
        metadata.update(meta)

    sampling = SamplingConfig(
        sample_rate_hz=sample_rate_hz, duration_s=length / sample_rate_hz
    )
    return Waveform(
        samples=samples.astype(np.float64),
        sampling=sampling,
        spec_id="THU",
        metadata=metadata,
    )
