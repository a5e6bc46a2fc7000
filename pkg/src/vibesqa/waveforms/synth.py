"""Render signal specs to sampled waveforms.

The sample at index n evaluates the family's defining equation at
t = n / sample_rate_hz. Transient and periodic-impulse families gate each
contribution to zero before its firing time, so composite families are
exact elementwise sums of their parts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from vibesqa.waveforms.specs import (
    AmFmCoupled,
    AmplitudeModulated,
    CombinedHarmonic,
    FrequencyModulated,
    MultiHarmonic,
    MultiPeriodicImpulse,
    MultiTransient,
    RandomHarmonic,
    SamplingConfig,
    SignalSpec,
    SimpleHarmonic,
    SinglePeriodicImpulse,
    SingleTransient,
    max_content_freq_hz,
)

_TWO_PI = 2.0 * math.pi


class NyquistError(ValueError):
    """Sampling rate does not exceed twice the spec's frequency content."""


@dataclass(frozen=True)
class Waveform:
    """Sampled signal in volts plus its sampling grid."""

    samples: np.ndarray
    sampling: SamplingConfig
    spec_id: str
    metadata: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        samples = np.asarray(self.samples, dtype=np.float64)
        object.__setattr__(self, "samples", samples)
        if samples.ndim != 1:
            raise ValueError("samples must be one-dimensional")
        if samples.shape[0] != self.sampling.num_samples:
            raise ValueError(
                f"sample count {samples.shape[0]} does not match sampling grid "
                f"({self.sampling.num_samples})"
            )
        if not np.all(np.isfinite(samples)):
            raise ValueError("samples must all be finite")


def _decaying_sine(
    t: np.ndarray,
    amplitude: float,
    decay: float,
    freq_hz: float,
    phase: float,
    onset_s: float,
) -> np.ndarray:
    """Onset-shifted decaying sinusoid, zero before the onset."""
    shifted = t - onset_s
    active = shifted >= 0.0
    out = np.zeros_like(t)
    ts = shifted[active]
    out[active] = amplitude * np.exp(-decay * ts) * np.sin(_TWO_PI * freq_hz * ts + phase)
    return out


def _evaluate(spec: SignalSpec, t: np.ndarray) -> np.ndarray:
    if isinstance(spec, AmplitudeModulated):
        envelope = 1.0 + spec.mod_index * np.cos(_TWO_PI * spec.mod_freq_hz * t)
        return envelope * np.cos(_TWO_PI * spec.carrier_freq_hz * t)
    if isinstance(spec, FrequencyModulated):
        swing = spec.freq_deviation_hz / spec.mod_freq_hz
        return np.cos(
            _TWO_PI * spec.carrier_freq_hz * t
            + swing * np.sin(_TWO_PI * spec.mod_freq_hz * t)
        )
    if isinstance(spec, AmFmCoupled):
        return _evaluate(spec.am_part(), t) + _evaluate(spec.fm_part(), t)
    if isinstance(spec, SimpleHarmonic):
        return spec.amplitude_v * np.sin(_TWO_PI * spec.base_freq_hz * t + spec.phase_rad)
    if isinstance(spec, MultiHarmonic):
        out = np.zeros_like(t)
        for order, harmonic in enumerate(spec.harmonics, start=1):
            out += harmonic.amplitude_v * np.sin(
                _TWO_PI * order * spec.base_freq_hz * t + harmonic.phase_rad
            )
        return out
    if isinstance(spec, RandomHarmonic):
        out = np.zeros_like(t)
        for tone in spec.components:
            out += tone.amplitude_v * np.sin(_TWO_PI * tone.freq_hz * t + tone.phase_rad)
        return out
    if isinstance(spec, CombinedHarmonic):
        return _evaluate(spec.regular, t) + _evaluate(spec.random, t)
    if isinstance(spec, SingleTransient):
        return _decaying_sine(
            t, spec.amplitude_v, spec.decay_per_s, spec.base_freq_hz,
            spec.phase_rad, spec.onset_s,
        )
    if isinstance(spec, MultiTransient):
        out = np.zeros_like(t)
        for component in spec.components:
            out += _evaluate(component, t)
        return out
    if isinstance(spec, SinglePeriodicImpulse):
        return _decaying_sine(
            t, spec.amplitude_v, spec.decay_per_s, spec.base_freq_hz,
            spec.phase_rad, spec.period_s,
        )
    if isinstance(spec, MultiPeriodicImpulse):
        out = np.zeros_like(t)
        for index, impulse in enumerate(spec.impulses, start=1):
            out += _decaying_sine(
                t, impulse.amplitude_v, spec.decay_per_s, spec.base_freq_hz,
                impulse.phase_rad, index * spec.period_s,
            )
        return out
    raise TypeError(f"not a signal spec: {type(spec).__name__}")


def synthesize(spec: SignalSpec, sampling: SamplingConfig | None = None) -> Waveform:
    """Synthesize a waveform from a spec on the given sampling grid.

    Raises :class:`NyquistError` when the sampling rate does not exceed
    twice the spec's largest frequency content.
    """
    sampling = sampling if sampling is not None else SamplingConfig()
    max_freq = max_content_freq_hz(spec)
    if sampling.sample_rate_hz <= 2.0 * max_freq:
        raise NyquistError(
            f"sample rate {sampling.sample_rate_hz} Hz must exceed twice the "
            f"spec's frequency content ({max_freq} Hz)"
        )
    samples = _evaluate(spec, sampling.times())
    return Waveform(samples=samples, sampling=sampling, spec_id=spec.family)
