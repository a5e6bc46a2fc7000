"""Signal synthesis, spectra, plotting, and real-recording access.

Everything in this subpackage is a pure function over immutable inputs, so
batch jobs may call any of it from many workers at once. Randomness enters
only through an explicit seed or `numpy.random.Generator`.
"""

from vibesqa.waveforms.plotting import PlotStyle, render_plot
from vibesqa.waveforms.real import (
    CONDITION_DISPLAY_NAMES,
    HEALTH_CONDITIONS,
    RealSignalInfo,
    load_real_segment,
    write_real_segment,
)
from vibesqa.waveforms.spectrum import (
    NoPeakError,
    Spectrum,
    compute_spectrum,
    peak_frequency,
)
from vibesqa.waveforms.specs import (
    SYNTHETIC_FAMILIES,
    AmFmCoupled,
    AmplitudeModulated,
    CombinedHarmonic,
    FrequencyModulated,
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
    SignalSpec,
    SimpleHarmonic,
    SinglePeriodicImpulse,
    SingleTransient,
    ground_truth_dict,
    max_content_freq_hz,
    sample_random_spec,
)
from vibesqa.waveforms.synth import NyquistError, Waveform, synthesize

__all__ = [
    "AmFmCoupled",
    "AmplitudeModulated",
    "CombinedHarmonic",
    "CONDITION_DISPLAY_NAMES",
    "FrequencyModulated",
    "Harmonic",
    "HarmonicTone",
    "HEALTH_CONDITIONS",
    "Impulse",
    "Interval",
    "MultiHarmonic",
    "MultiPeriodicImpulse",
    "MultiTransient",
    "NoPeakError",
    "NyquistError",
    "ParamRanges",
    "PlotStyle",
    "RandomHarmonic",
    "RealSignalInfo",
    "SamplingConfig",
    "SignalSpec",
    "SimpleHarmonic",
    "SinglePeriodicImpulse",
    "SingleTransient",
    "Spectrum",
    "SYNTHETIC_FAMILIES",
    "Waveform",
    "compute_spectrum",
    "ground_truth_dict",
    "load_real_segment",
    "max_content_freq_hz",
    "peak_frequency",
    "render_plot",
    "sample_random_spec",
    "synthesize",
    "write_real_segment",
]
