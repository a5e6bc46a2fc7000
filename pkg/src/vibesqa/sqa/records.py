"""SQA record construction.

One record bundles a rendered signal image with its ordered question/answer
pairs and the ground truth they were rendered from, so every numeric token
in an answer stays recomputable from the stored record.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from vibesqa.waveforms import (
    RealSignalInfo,
    Spectrum,
    Waveform,
    ground_truth_dict,
    peak_frequency,
)

QA_KINDS = ("signal_type", "parameter", "spectral", "diagnostic", "conclusion")

MIN_QA_PAIRS = 5
MAX_QA_PAIRS = 9


@dataclass(frozen=True)
class QaPair:
    question: str
    answer: str
    kind: str

    def __post_init__(self) -> None:
        if not self.question:
            raise ValueError("question must be non-empty")
        if not self.answer:
            raise ValueError("answer must be non-empty")
        if self.kind not in QA_KINDS:
            raise ValueError(f"kind must be one of {QA_KINDS}, got {self.kind!r}")


@dataclass(frozen=True)
class SqaRecord:
    record_id: str
    image_path: str
    signal_category: str
    type_label: str
    ground_truth: dict
    qa: tuple[QaPair, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        from vibesqa.sqa.templates import CATEGORIES  # avoid import cycle

        object.__setattr__(self, "qa", tuple(self.qa))
        if self.signal_category not in CATEGORIES:
            raise ValueError(
                f"signal_category must be one of {CATEGORIES}, got {self.signal_category!r}"
            )
        if not MIN_QA_PAIRS <= len(self.qa) <= MAX_QA_PAIRS:
            raise ValueError(
                f"record {self.record_id!r} has {len(self.qa)} QA pairs; "
                f"expected {MIN_QA_PAIRS}..{MAX_QA_PAIRS}"
            )
        if self.qa[0].kind != "signal_type":
            raise ValueError("the first QA pair must ask for the signal type")


def build_sqa(
    source,
    waveform: Waveform,
    spectrum: Spectrum,
    record_id: str,
    image_path: str,
) -> SqaRecord:
    """Build one SQA record from a signal source and its derived data.

    `source` is one of the synthetic spec classes from
    :mod:`vibesqa.waveforms.specs`, or a :class:`RealSignalInfo` for real
    recordings.
    """
    from vibesqa.sqa.templates import CANONICAL_TYPE_LABELS, build_qa_pairs

    if isinstance(source, RealSignalInfo):
        category = "THU"
        ground_truth = {
            "family": "THU",
            "condition": source.condition,
            "shaft_freq_hz": source.shaft_freq_hz,
            "fault_freq_hz": source.fault_freq_hz,
        }
        qa = build_qa_pairs(source, None)
    else:
        ground_truth = ground_truth_dict(source)  # rejects unknown source types
        category = source.family
        peak = peak_frequency(spectrum)
        ground_truth["peak_freq_hz"] = peak
        qa = build_qa_pairs(source, peak)

    return SqaRecord(
        record_id=record_id,
        image_path=image_path,
        signal_category=category,
        type_label=CANONICAL_TYPE_LABELS[category],
        ground_truth=ground_truth,
        qa=tuple(qa),
    )
