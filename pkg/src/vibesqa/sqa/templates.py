"""Question/answer templates for every signal category.

Question phrasing is fixed so that evaluation stays comparable across
datasets; answers are rendered from ground truth only. The first pair of
every group asks for the signal type, and its answer names the category's
canonical label (the head entry of the synonym vocabulary). Paraphrase
augmentation of the questions is available behind an explicit flag and
never touches answers.
"""

from __future__ import annotations

import numpy as np

from vibesqa.sqa.formatting import format_listing, format_quantity
from vibesqa.sqa.records import QaPair
from vibesqa.waveforms import (
    AmFmCoupled,
    AmplitudeModulated,
    CombinedHarmonic,
    FrequencyModulated,
    MultiHarmonic,
    MultiPeriodicImpulse,
    MultiTransient,
    RandomHarmonic,
    RealSignalInfo,
    SimpleHarmonic,
    SinglePeriodicImpulse,
    SingleTransient,
)

CATEGORIES = ("AM", "FM", "AMFM", "SH", "MH", "RH", "CH", "ST", "MT", "SP", "MP", "THU")

CANONICAL_TYPE_LABELS = {
    "AM": "Amplitude Modulated Signal",
    "FM": "Frequency Modulated Signal",
    "AMFM": "FM-AM Coupled Signal",
    "SH": "Simple Harmonic Signal",
    "MH": "Multiple Harmonic Signal",
    "RH": "Random Harmonic Signal",
    "CH": "Combined Harmonic Signal",
    "ST": "Single Transient Impulse Harmonic Signal",
    "MT": "Multiple Transient Impulse Harmonic Signal",
    "SP": "Single Periodic Impulse Harmonic Signal",
    "MP": "Multiple Periodic Impulse Harmonic Signal",
    "THU": "THU Signal",
}

TYPE_QUESTION = "What is the type of this signal?"

# Alternate phrasings for paraphrase augmentation; the canonical wording is
# always a candidate.
QUESTION_VARIANTS = {
    TYPE_QUESTION: (
        "What kind of signal is this?",
        "Which signal type does this image show?",
    ),
    "What is the amplitude of this signal?": (
        "How large is the amplitude of this signal?",
    ),
    "What is the phase of this signal?": (
        "What is the initial phase of this signal?",
    ),
    "What is the base frequency of this signal?": (
        "What base frequency does this signal have?",
    ),
    "What is the period of this signal?": (
        "How long is one period of this signal?",
    ),
    "What is the peak frequency of this signal?": (
        "At which frequency does the spectrum of this signal peak?",
    ),
    "What is the shock interval of this signal?": (
        "How far apart are the impulses of this signal?",
    ),
    "What is the carrier frequency of this signal?": (
        "At what frequency does the carrier of this signal oscillate?",
    ),
    "What is the modulation frequency of this signal?": (
        "At what rate is this signal modulated?",
    ),
    "What is the modulation index of this signal?": (
        "How deep is the amplitude modulation of this signal?",
    ),
    "What is the maximum frequency deviation of this signal?": (
        "How far does the instantaneous frequency of this signal deviate?",
    ),
    "What is the decay coefficient of this signal?": (
        "How quickly does this signal decay?",
    ),
    "What is your conclusion?": (
        "What do you conclude about this signal?",
    ),
}


def paraphrase_questions(pairs, rng: np.random.Generator):
    """Swap each question for a random registered phrasing (answers unchanged)."""
    from vibesqa.sqa.records import QaPair

    out = []
    for pair in pairs:
        candidates = (pair.question, *QUESTION_VARIANTS.get(pair.question, ()))
        choice = candidates[int(rng.integers(0, len(candidates)))]
        out.append(QaPair(question=choice, answer=pair.answer, kind=pair.kind))
    return out


def _spoken_label(label: str) -> str:
    # Lowercase ordinary words, keep acronyms ("FM-AM", "THU") as-is.
    return " ".join(w if w.isupper() else w.lower() for w in label.split())


def _article(phrase: str) -> str:
    return "an" if phrase[:1].lower() in "aeiou" else "a"


def _type_pair(category: str) -> QaPair:
    if category == "THU":
        answer = "This is a THU signal representing a bearing."
    else:
        spoken = _spoken_label(CANONICAL_TYPE_LABELS[category])
        answer = f"This is {_article(spoken)} {spoken}."
    return QaPair(question=TYPE_QUESTION, answer=answer, kind="signal_type")


def _param(question: str, answer: str) -> QaPair:
    return QaPair(question=question, answer=answer, kind="parameter")


def _amplitude_pair(amplitude_v: float) -> QaPair:
    return _param(
        "What is the amplitude of this signal?",
        f"The amplitude of this signal is {format_quantity(amplitude_v, 'volts')}.",
    )


def _phase_pair(phase_rad: float) -> QaPair:
    return _param(
        "What is the phase of this signal?",
        f"The phase of this signal is {format_quantity(phase_rad, 'radians')} radians.",
    )


def _base_freq_pair(freq_hz: float) -> QaPair:
    return _param(
        "What is the base frequency of this signal?",
        f"The base frequency of this signal is {format_quantity(freq_hz, 'hz')} Hz.",
    )


def _period_pair(base_freq_hz: float) -> QaPair:
    return _param(
        "What is the period of this signal?",
        f"The period of this signal is {format_quantity(1.0 / base_freq_hz, 'seconds')} seconds.",
    )


def _carrier_pair(freq_hz: float) -> QaPair:
    return _param(
        "What is the carrier frequency of this signal?",
        f"The carrier frequency of this signal is {format_quantity(freq_hz, 'hz')} Hz.",
    )


def _mod_freq_pair(freq_hz: float) -> QaPair:
    return _param(
        "What is the modulation frequency of this signal?",
        f"The modulation frequency of this signal is {format_quantity(freq_hz, 'hz')} Hz.",
    )


def _mod_index_pair(index: float) -> QaPair:
    return _param(
        "What is the modulation index of this signal?",
        f"The modulation index of this signal is {format_quantity(index, 'unitless')}.",
    )


def _deviation_pair(deviation_hz: float) -> QaPair:
    return _param(
        "What is the maximum frequency deviation of this signal?",
        "The maximum frequency deviation of this signal is "
        f"{format_quantity(deviation_hz, 'hz')} Hz.",
    )


def _decay_pair(decay_per_s: float) -> QaPair:
    return _param(
        "What is the decay coefficient of this signal?",
        f"The decay coefficient of this signal is {format_quantity(decay_per_s, 'unitless')}.",
    )


def _shock_interval_pair(period_s: float) -> QaPair:
    return _param(
        "What is the shock interval of this signal?",
        f"The shock interval of this signal is {format_listing([period_s], 'seconds')} seconds.",
    )


def _count_pair(question: str, count: int, noun: str) -> QaPair:
    return _param(question, f"This signal contains {count} {noun}.")


def _peak_pair(peak_freq_hz: float, tail: str = "") -> QaPair:
    answer = f"The peak frequency of this signal is {format_quantity(peak_freq_hz, 'hz_fixed')}"
    answer += tail + "."
    return QaPair(
        question="What is the peak frequency of this signal?",
        answer=answer,
        kind="spectral",
    )


def _conclusion_pair(text: str) -> QaPair:
    return QaPair(question="What is your conclusion?", answer=text, kind="conclusion")


def _diagnostic(question: str, answer: str) -> QaPair:
    return QaPair(question=question, answer=answer, kind="diagnostic")


def build_qa_pairs(source, peak_freq_hz: float | None) -> list[QaPair]:
    """Ordered question/answer pairs for one signal instance.

    `source` is a synthetic spec or a :class:`RealSignalInfo`; synthetic
    sources additionally need the spectrum's peak frequency.
    """
    if isinstance(source, RealSignalInfo):
        return _thu_pairs(source)
    if peak_freq_hz is None:
        raise ValueError("synthetic categories require a peak frequency")

    if isinstance(source, AmplitudeModulated):
        return [
            _type_pair("AM"),
            _carrier_pair(source.carrier_freq_hz),
            _mod_freq_pair(source.mod_freq_hz),
            _mod_index_pair(source.mod_index),
            _peak_pair(peak_freq_hz, ", which is close to its carrier frequency"),
            _conclusion_pair(
                "The amplitude of the carrier varies periodically at the modulation frequency."
            ),
        ]
    if isinstance(source, FrequencyModulated):
        return [
            _type_pair("FM"),
            _carrier_pair(source.carrier_freq_hz),
            _mod_freq_pair(source.mod_freq_hz),
            _deviation_pair(source.freq_deviation_hz),
            _peak_pair(peak_freq_hz),
            _conclusion_pair(
                "The instantaneous frequency of the carrier varies periodically over time."
            ),
        ]
    if isinstance(source, AmFmCoupled):
        return [
            _type_pair("AMFM"),
            _carrier_pair(source.carrier_freq_hz),
            _mod_freq_pair(source.mod_freq_hz),
            _mod_index_pair(source.mod_index),
            _deviation_pair(source.freq_deviation_hz),
            _peak_pair(peak_freq_hz),
            _conclusion_pair(
                "Both the amplitude and the instantaneous frequency of the carrier "
                "vary periodically."
            ),
        ]
    if isinstance(source, SimpleHarmonic):
        return [
            _type_pair("SH"),
            _amplitude_pair(source.amplitude_v),
            _phase_pair(source.phase_rad),
            _base_freq_pair(source.base_freq_hz),
            _period_pair(source.base_freq_hz),
            _peak_pair(peak_freq_hz, ", which is close to its base frequency"),
            _conclusion_pair("It represents a single sine wave with a constant amplitude."),
        ]
    if isinstance(source, MultiHarmonic):
        return [
            _type_pair("MH"),
            _base_freq_pair(source.base_freq_hz),
            _count_pair(
                "How many harmonic components does this signal contain?",
                len(source.harmonics),
                "harmonic components",
            ),
            _param(
                "What are the amplitudes of the harmonic components?",
                "The amplitudes of the harmonic components are "
                f"{format_listing([h.amplitude_v for h in source.harmonics])}.",
            ),
            _period_pair(source.base_freq_hz),
            _peak_pair(peak_freq_hz),
            _conclusion_pair(
                "It is composed of multiple harmonics at integer multiples of the "
                "base frequency."
            ),
        ]
    if isinstance(source, RandomHarmonic):
        return [
            _type_pair("RH"),
            _count_pair(
                "How many harmonic components does this signal contain?",
                len(source.components),
                "harmonic components",
            ),
            _param(
                "What are the frequencies of the harmonic components?",
                "The frequencies of the harmonic components are "
                f"{format_listing([c.freq_hz for c in source.components])} Hz.",
            ),
            _peak_pair(peak_freq_hz),
            _conclusion_pair("It is composed of multiple sine waves with random frequencies."),
        ]
    if isinstance(source, CombinedHarmonic):
        return [
            _type_pair("CH"),
            _base_freq_pair(source.regular.base_freq_hz),
            _count_pair(
                "How many random harmonic components does this signal contain?",
                len(source.random.components),
                "random harmonic components",
            ),
            _period_pair(source.regular.base_freq_hz),
            _peak_pair(peak_freq_hz),
            _conclusion_pair(
                "It combines a regular harmonic series with random harmonic components."
            ),
        ]
    if isinstance(source, SingleTransient):
        return [
            _type_pair("ST"),
            _amplitude_pair(source.amplitude_v),
            _decay_pair(source.decay_per_s),
            _base_freq_pair(source.base_freq_hz),
            _param(
                "At what time does the impulse begin?",
                f"The impulse begins at {format_quantity(source.onset_s, 'seconds')} seconds.",
            ),
            _peak_pair(peak_freq_hz),
            _conclusion_pair("This signal shows a single transient impulse that decays over time."),
        ]
    if isinstance(source, MultiTransient):
        return [
            _type_pair("MT"),
            _count_pair(
                "How many transient impulses does this signal contain?",
                len(source.components),
                "transient impulses",
            ),
            _param(
                "What are the base frequencies of the impulses?",
                "The base frequencies of the impulses are "
                f"{format_listing([c.base_freq_hz for c in source.components])} Hz.",
            ),
            _param(
                "At what times do the impulses begin?",
                "The impulses begin at "
                f"{format_listing([c.onset_s for c in source.components], 'seconds')} seconds.",
            ),
            _peak_pair(peak_freq_hz),
            _conclusion_pair(
                "This signal contains multiple transient impulses that decay over time."
            ),
        ]
    if isinstance(source, SinglePeriodicImpulse):
        return [
            _type_pair("SP"),
            _amplitude_pair(source.amplitude_v),
            _base_freq_pair(source.base_freq_hz),
            _period_pair(source.base_freq_hz),
            _peak_pair(peak_freq_hz),
            _shock_interval_pair(source.period_s),
            _conclusion_pair("This signal has impulse characteristics and decays over time."),
        ]
    if isinstance(source, MultiPeriodicImpulse):
        return [
            _type_pair("MP"),
            _count_pair(
                "How many impulses does this signal contain?",
                len(source.impulses),
                "impulses",
            ),
            _shock_interval_pair(source.period_s),
            _base_freq_pair(source.base_freq_hz),
            _period_pair(source.base_freq_hz),
            _peak_pair(peak_freq_hz),
            _conclusion_pair(
                "This signal has periodic impulse characteristics and decays over time."
            ),
        ]
    raise ValueError(f"no question templates for source type {type(source).__name__}")


def _thu_pairs(info: RealSignalInfo) -> list[QaPair]:
    pairs = [_type_pair("THU")]
    if info.shaft_freq_hz is not None:
        pairs.append(
            _param(
                "What is the fundamental frequency at which this signal was acquired?",
                "The signal was recorded at a fundamental frequency of "
                f"{format_quantity(info.shaft_freq_hz, 'hz')}Hz.",
            )
        )
    name = info.display_name
    if info.condition == "normal":
        pairs.append(
            _diagnostic(
                "Which characteristic fault frequency was identified in this signal?",
                "No characteristic fault frequency was detected in this signal.",
            )
        )
        pairs.append(
            _diagnostic(
                "How does the identified characteristic frequency correlate with the "
                "diagnosed fault?",
                "The absence of characteristic fault frequencies indicates a healthy bearing.",
            )
        )
    else:
        pairs.append(
            _diagnostic(
                "Which characteristic fault frequency was identified in this signal?",
                "The detected characteristic frequency aligns with the typical fault "
                f"frequencies associated with {name}.",
            )
        )
        pairs.append(
            _diagnostic(
                "How does the identified characteristic frequency correlate with the "
                "diagnosed fault?",
                f"The identified characteristic frequency is indicative of a {name} "
                "fault in the bearing.",
            )
        )
    pairs.append(
        _diagnostic(
            "How does the condition of the bearing influence the signal characteristics?",
            "The condition of the bearing influences the signal, allowing for the "
            "identification of specific faults like inner, outer, or roller faults.",
        )
    )
    if info.condition == "normal":
        pairs.append(_conclusion_pair("The signal characteristics indicate a healthy bearing."))
    else:
        pairs.append(
            _conclusion_pair(f"The presence of a characteristic frequency indicates a {name}.")
        )
    return pairs
