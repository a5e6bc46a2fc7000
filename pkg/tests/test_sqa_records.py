import math

import pytest

from vibesqa.metrics import extract_numbers
from vibesqa.sqa import (
    CANONICAL_TYPE_LABELS,
    CATEGORIES,
    MAX_QA_PAIRS,
    MIN_QA_PAIRS,
    QaPair,
    SqaRecord,
    TYPE_QUESTION,
    build_sqa,
    format_listing,
    format_quantity,
)
from vibesqa.reward import SynonymVocabulary, normalize_text
from vibesqa.waveforms import (
    AmFmCoupled,
    AmplitudeModulated,
    CombinedHarmonic,
    FrequencyModulated,
    Harmonic,
    HarmonicTone,
    Impulse,
    MultiHarmonic,
    MultiPeriodicImpulse,
    MultiTransient,
    RandomHarmonic,
    RealSignalInfo,
    SamplingConfig,
    SimpleHarmonic,
    SinglePeriodicImpulse,
    SingleTransient,
    compute_spectrum,
    synthesize,
)

KHZ = SamplingConfig(1000.0, 1.0)

ALL_SPECS = {
    "AM": AmplitudeModulated(0.5, 100.0, 10.0),
    "FM": FrequencyModulated(5.0, 100.0, 10.0),
    "AMFM": AmFmCoupled(0.5, 5.0, 100.0, 10.0),
    "SH": SimpleHarmonic(0.29, 50.0, 2.0),
    "MH": MultiHarmonic(50.0, (Harmonic(0.95), Harmonic(0.61), Harmonic(0.33))),
    "RH": RandomHarmonic((HarmonicTone(2.0, 80.0), HarmonicTone(0.5, 133.0))),
    "CH": CombinedHarmonic(
        MultiHarmonic(50.0, (Harmonic(1.0), Harmonic(0.4))),
        RandomHarmonic((HarmonicTone(0.3, 97.0), HarmonicTone(0.2, 104.0))),
    ),
    "ST": SingleTransient(0.8, 12.4, 50.0, 0.5, 0.15),
    "MT": MultiTransient(
        (SingleTransient(1.0, 10.0, 40.0, 0.0, 0.05), SingleTransient(0.5, 20.0, 70.0, 0.0, 0.4))
    ),
    "SP": SinglePeriodicImpulse(0.68, 12.0, 0.12, 50.0),
    "MP": MultiPeriodicImpulse(20.0, 0.1, 50.0, (Impulse(1.0), Impulse(0.8), Impulse(0.6))),
}


def _record_for(spec, record_id="X-00000"):
    wave = synthesize(spec, KHZ)
    spectrum = compute_spectrum(wave)
    return build_sqa(spec, wave, spectrum, record_id, f"images/{record_id}.png")


class TestFormatQuantity:
    def test_volts_fixed_two_decimals(self):
        assert format_quantity(0.29, "volts") == "0.29"
        assert format_quantity(0.5, "volts") == "0.50"

    def test_hz_trims_whole_numbers(self):
        assert format_quantity(50.0, "hz") == "50"
        assert format_quantity(50.14, "hz") == "50.14"
        assert format_quantity(50.1, "hz") == "50.1"

    def test_hz_fixed_keeps_decimals(self):
        assert format_quantity(50.0, "hz_fixed") == "50.00"

    def test_seconds_keeps_two_decimals(self):
        assert format_quantity(0.02, "seconds") == "0.02"
        assert format_quantity(0.0, "seconds") == "0.00"

    def test_radians_keeps_at_least_one_decimal(self):
        assert format_quantity(2.0, "radians") == "2.0"
        assert format_quantity(2.24, "radians") == "2.24"
        assert format_quantity(2.5, "radians") == "2.5"

    def test_count_renders_integer(self):
        assert format_quantity(3.0, "count") == "3"

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            format_quantity(math.nan, "volts")
        with pytest.raises(ValueError):
            format_quantity(math.inf, "hz")

    def test_rejects_unknown_unit(self):
        with pytest.raises(ValueError):
            format_quantity(1.0, "furlongs")

    def test_listing(self):
        assert format_listing([0.95, 0.61, 0.33]) == "[0.95, 0.61, 0.33]"
        assert format_listing([0.12], "seconds") == "[0.12]"


class TestRecordShape:
    @pytest.mark.parametrize("family", sorted(ALL_SPECS))
    def test_every_family_builds_a_valid_record(self, family):
        record = _record_for(ALL_SPECS[family])
        assert record.signal_category == family
        assert MIN_QA_PAIRS <= len(record.qa) <= MAX_QA_PAIRS
        assert record.qa[0].kind == "signal_type"
        assert record.qa[0].question == TYPE_QUESTION
        assert record.qa[-1].kind == "conclusion"

    def test_type_answer_names_canonical_label(self):
        vocabulary = SynonymVocabulary.load()
        for family, spec in ALL_SPECS.items():
            record = _record_for(spec)
            label = CANONICAL_TYPE_LABELS[family]
            # Head entry of the vocabulary is the canonical label itself.
            head_synonym, head_weight = vocabulary.lookup(label)[0]
            assert head_weight == 1.0
            assert normalize_text(head_synonym) == normalize_text(label)
            assert normalize_text(label) in normalize_text(record.qa[0].answer)

    def test_record_rejects_wrong_first_kind(self):
        pair = QaPair("q?", "a.", "parameter")
        pairs = tuple([pair] * 5)
        with pytest.raises(ValueError, match="signal type"):
            SqaRecord("r", "i.png", "SH", "Simple Harmonic Signal", {}, pairs)

    def test_record_rejects_bad_category_and_counts(self):
        type_pair = QaPair(TYPE_QUESTION, "This is a simple harmonic signal.", "signal_type")
        filler = QaPair("q?", "a.", "parameter")
        with pytest.raises(ValueError, match="signal_category"):
            SqaRecord("r", "i.png", "ZZ", "x", {}, (type_pair,) + (filler,) * 4)
        with pytest.raises(ValueError, match="QA pairs"):
            SqaRecord("r", "i.png", "SH", "x", {}, (type_pair, filler))
        with pytest.raises(ValueError, match="QA pairs"):
            SqaRecord("r", "i.png", "SH", "x", {}, (type_pair,) + (filler,) * 9)


class TestAnswerContent:
    def test_simple_harmonic_answers(self):
        record = _record_for(ALL_SPECS["SH"])
        answers = [pair.answer for pair in record.qa]
        assert "The amplitude of this signal is 0.29." in answers
        assert "The phase of this signal is 2.0 radians." in answers
        assert "The base frequency of this signal is 50 Hz." in answers
        assert "The period of this signal is 0.02 seconds." in answers

    def test_periodic_impulse_has_shock_interval_and_harmonic_does_not(self):
        sp_questions = [pair.question for pair in _record_for(ALL_SPECS["SP"]).qa]
        sh_questions = [pair.question for pair in _record_for(ALL_SPECS["SH"]).qa]
        shock_question = "What is the shock interval of this signal?"
        assert shock_question in sp_questions
        assert shock_question not in sh_questions
        sp_answers = [pair.answer for pair in _record_for(ALL_SPECS["SP"]).qa]
        assert "The shock interval of this signal is [0.12] seconds." in sp_answers

    def test_peak_frequency_answer_recomputable(self):
        from vibesqa.waveforms import peak_frequency

        for family in ("SH", "AM", "MH", "SP"):
            spec = ALL_SPECS[family]
            wave = synthesize(spec, KHZ)
            spectrum = compute_spectrum(wave)
            record = build_sqa(spec, wave, spectrum, "r", "i.png")
            spectral = [pair for pair in record.qa if pair.kind == "spectral"]
            assert len(spectral) == 1
            expected = f"{peak_frequency(spectrum):.2f}"
            assert expected in spectral[0].answer

    def test_every_answer_number_comes_from_ground_truth(self):
        # Full provenance: numbers in answers are recomputable from the
        # stored ground truth (flattened), up to 2-decimal rendering.
        def flatten(value):
            if isinstance(value, dict):
                for v in value.values():
                    yield from flatten(v)
            elif isinstance(value, (list, tuple)):
                for v in value:
                    yield from flatten(v)
            elif isinstance(value, (int, float)) and value is not None:
                yield float(value)

        for family, spec in ALL_SPECS.items():
            record = _record_for(spec)
            provenance = list(flatten(record.ground_truth))
            # Derived quantities also count: periods, component counts.
            provenance += [1.0 / v for v in provenance if v > 0]
            provenance += [float(len(record.qa))]
            for key in ("harmonics", "components", "impulses"):
                if key in record.ground_truth:
                    provenance.append(float(len(record.ground_truth[key])))
            if family == "CH":
                provenance.append(float(len(record.ground_truth["random"]["components"])))
            for pair in record.qa:
                for number in extract_numbers(pair.answer):
                    assert any(
                        abs(number - candidate) <= 0.005 + 1e-9
                        for candidate in provenance
                    ), f"{family}: {number} in {pair.answer!r} lacks provenance"


class TestRealSignalRecords:
    def _record(self, condition, shaft=10.0, fault=87.3):
        info = RealSignalInfo(condition=condition, shaft_freq_hz=shaft, fault_freq_hz=fault)
        spec = SimpleHarmonic(1.0, 50.0)
        wave = synthesize(spec, KHZ)
        return build_sqa(info, wave, compute_spectrum(wave), "THU-00000", "i.png")

    def test_fault_record_wording(self):
        record = self._record("outer race fault")
        answers = [pair.answer for pair in record.qa]
        assert answers[0] == "This is a THU signal representing a bearing."
        assert "The signal was recorded at a fundamental frequency of 10Hz." in answers
        assert any("associated with outer fault" in a for a in answers)
        assert "The presence of a characteristic frequency indicates a outer fault." in answers
        assert record.signal_category == "THU"
        assert record.type_label == "THU Signal"

    def test_normal_record_wording(self):
        record = self._record("normal")
        answers = [pair.answer for pair in record.qa]
        assert "No characteristic fault frequency was detected in this signal." in answers
        assert "The signal characteristics indicate a healthy bearing." in answers

    def test_missing_shaft_frequency_drops_that_question(self):
        record = self._record("ball fault", shaft=None)
        questions = [pair.question for pair in record.qa]
        assert all("fundamental frequency" not in q for q in questions)
        assert len(record.qa) >= MIN_QA_PAIRS


def test_category_constant_covers_twelve():
    assert len(CATEGORIES) == 12
    assert set(ALL_SPECS) | {"THU"} == set(CATEGORIES)
