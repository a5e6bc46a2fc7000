import math

import numpy as np
import pytest

from vibesqa.waveforms import (
    AmplitudeModulated,
    CombinedHarmonic,
    Harmonic,
    HarmonicTone,
    Impulse,
    Interval,
    MultiHarmonic,
    MultiPeriodicImpulse,
    MultiTransient,
    ParamRanges,
    RandomHarmonic,
    SamplingConfig,
    SimpleHarmonic,
    SinglePeriodicImpulse,
    SingleTransient,
    max_content_freq_hz,
    sample_random_spec,
)
from vibesqa.waveforms.specs import SYNTHETIC_FAMILIES


class TestSamplingConfig:
    def test_defaults(self):
        cfg = SamplingConfig()
        assert cfg.num_samples == 1000
        assert cfg.times()[1] == pytest.approx(0.001)

    def test_num_samples_rounds(self):
        assert SamplingConfig(1000.0, 0.0995).num_samples == 100

    @pytest.mark.parametrize("rate,duration", [(0.0, 1.0), (-5.0, 1.0), (1000.0, 0.0)])
    def test_rejects_non_positive(self, rate, duration):
        with pytest.raises(ValueError):
            SamplingConfig(rate, duration)

    def test_rejects_single_sample_grid(self):
        with pytest.raises(ValueError):
            SamplingConfig(1.0, 1.0)


class TestSpecValidation:
    def test_overmodulation_rejected_by_default(self):
        with pytest.raises(ValueError, match="allow_overmodulation"):
            AmplitudeModulated(mod_index=1.2, carrier_freq_hz=100.0, mod_freq_hz=10.0)
        spec = AmplitudeModulated(
            mod_index=1.2, carrier_freq_hz=100.0, mod_freq_hz=10.0,
            allow_overmodulation=True,
        )
        assert spec.mod_index == 1.2

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            SimpleHarmonic(amplitude_v=math.nan, base_freq_hz=50.0)
        with pytest.raises(ValueError):
            SimpleHarmonic(amplitude_v=1.0, base_freq_hz=50.0, phase_rad=math.inf)

    def test_rejects_non_positive_frequency(self):
        with pytest.raises(ValueError):
            SimpleHarmonic(amplitude_v=1.0, base_freq_hz=0.0)

    def test_rejects_negative_amplitude_and_decay(self):
        with pytest.raises(ValueError):
            SingleTransient(amplitude_v=-1.0, decay_per_s=5.0, base_freq_hz=50.0)
        with pytest.raises(ValueError):
            SingleTransient(amplitude_v=1.0, decay_per_s=-5.0, base_freq_hz=50.0)

    def test_rejects_empty_component_lists(self):
        with pytest.raises(ValueError):
            MultiHarmonic(base_freq_hz=50.0, harmonics=())
        with pytest.raises(ValueError):
            RandomHarmonic(components=())
        with pytest.raises(ValueError):
            MultiTransient(components=())
        with pytest.raises(ValueError):
            MultiPeriodicImpulse(decay_per_s=5.0, period_s=0.1, base_freq_hz=50.0, impulses=())

    def test_period_must_be_positive(self):
        with pytest.raises(ValueError):
            SinglePeriodicImpulse(
                amplitude_v=1.0, decay_per_s=5.0, period_s=0.0, base_freq_hz=50.0
            )


class TestMaxContentFreq:
    def test_modulated_families(self):
        am = AmplitudeModulated(mod_index=0.5, carrier_freq_hz=100.0, mod_freq_hz=10.0)
        assert max_content_freq_hz(am) == 110.0

    def test_harmonic_series_scales_with_order(self):
        mh = MultiHarmonic(
            base_freq_hz=50.0, harmonics=(Harmonic(1.0), Harmonic(0.5), Harmonic(0.2))
        )
        assert max_content_freq_hz(mh) == 150.0

    def test_combined_takes_max_of_parts(self):
        ch = CombinedHarmonic(
            regular=MultiHarmonic(base_freq_hz=50.0, harmonics=(Harmonic(1.0),)),
            random=RandomHarmonic(components=(HarmonicTone(1.0, 130.0),)),
        )
        assert max_content_freq_hz(ch) == 130.0


class TestInterval:
    def test_point_interval_draw(self):
        rng = np.random.default_rng(0)
        assert Interval(50.0, 50.0).draw(rng) == 50.0

    def test_rejects_inverted_bounds(self):
        with pytest.raises(ValueError):
            Interval(2.0, 1.0)


class TestRandomSpecs:
    def test_same_seed_identical(self):
        ranges = ParamRanges(seed=42)
        for family in SYNTHETIC_FAMILIES:
            assert sample_random_spec(family, ranges) == sample_random_spec(family, ranges)

    def test_degenerate_interval_pins_value(self):
        ranges = ParamRanges(base_freq_hz=Interval(50.0, 50.0))
        for seed in range(5):
            spec = sample_random_spec("SH", ranges, np.random.default_rng(seed))
            assert spec.base_freq_hz == 50.0

    def test_unknown_family_rejected(self):
        with pytest.raises(ValueError):
            sample_random_spec("XX", ParamRanges())

    def test_counts_respect_bounds(self):
        ranges = ParamRanges(harmonic_count=(3, 3), component_count=(2, 4))
        rng = np.random.default_rng(1)
        for _ in range(20):
            mh = sample_random_spec("MH", ranges, rng)
            assert len(mh.harmonics) == 3
            rh = sample_random_spec("RH", ranges, rng)
            assert 2 <= len(rh.components) <= 4

    def test_rh_frequencies_follow_normal_law(self):
        # Law-of-large-numbers check on the configured normal draw.
        ranges = ParamRanges(
            rh_freq_mean_hz=100.0, rh_freq_std_hz=10.0, component_count=(1, 1)
        )
        rng = np.random.default_rng(123)
        draws = [
            sample_random_spec("RH", ranges, rng).components[0].freq_hz
            for _ in range(10_000)
        ]
        assert abs(float(np.mean(draws)) - 100.0) < 0.5
        assert all(f > 0 for f in draws)

    def test_invalid_count_bounds_rejected(self):
        with pytest.raises(ValueError):
            ParamRanges(harmonic_count=(0, 3))
        with pytest.raises(ValueError):
            ParamRanges(component_count=(4, 2))

    def test_random_specs_satisfy_invariants(self):
        ranges = ParamRanges()
        rng = np.random.default_rng(9)
        for family in SYNTHETIC_FAMILIES:
            for _ in range(10):
                spec = sample_random_spec(family, ranges, rng)
                # Construction validates; also check the Nyquist headroom of defaults.
                assert max_content_freq_hz(spec) < 500.0
