"""Parameter descriptions for the eleven synthetic signal families.

Each spec is a frozen dataclass holding the physical parameters of one
signal instance: amplitudes in volts, frequencies in hertz, phases in
radians, decay coefficients in 1/s, and times in seconds. Specs only
describe a signal; rendering to samples happens in :mod:`vibesqa.waveforms.synth`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np

SYNTHETIC_FAMILIES = ("AM", "FM", "AMFM", "SH", "MH", "RH", "CH", "ST", "MT", "SP", "MP")

_TWO_PI = 2.0 * math.pi


def _require_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")


def _require_positive(name: str, value: float) -> None:
    _require_finite(name, value)
    if value <= 0:
        raise ValueError(f"{name} must be > 0, got {value!r}")


def _require_non_negative(name: str, value: float) -> None:
    _require_finite(name, value)
    if value < 0:
        raise ValueError(f"{name} must be >= 0, got {value!r}")


@dataclass(frozen=True)
class SamplingConfig:
    """Uniform sampling grid: `num_samples` points at `sample_rate_hz`."""

    sample_rate_hz: float = 1000.0
    duration_s: float = 1.0

    def __post_init__(self) -> None:
        _require_positive("sample_rate_hz", self.sample_rate_hz)
        _require_positive("duration_s", self.duration_s)
        if self.num_samples < 2:
            raise ValueError("sampling grid must contain at least 2 samples")

    @property
    def num_samples(self) -> int:
        return int(round(self.sample_rate_hz * self.duration_s))

    def times(self) -> np.ndarray:
        """Sample instants t_n = n / sample_rate_hz, in seconds."""
        return np.arange(self.num_samples, dtype=np.float64) / self.sample_rate_hz


@dataclass(frozen=True)
class AmplitudeModulated:
    """Carrier whose envelope oscillates: (1 + m cos(2π f_m t)) cos(2π f_c t)."""

    mod_index: float
    carrier_freq_hz: float
    mod_freq_hz: float
    # Over-modulation (m > 1) distorts the envelope; opt in explicitly.
    allow_overmodulation: bool = False

    family = "AM"

    def __post_init__(self) -> None:
        _require_non_negative("mod_index", self.mod_index)
        _require_positive("carrier_freq_hz", self.carrier_freq_hz)
        _require_positive("mod_freq_hz", self.mod_freq_hz)
        if self.mod_index > 1.0 and not self.allow_overmodulation:
            raise ValueError(
                f"mod_index {self.mod_index} > 1 rejected; pass allow_overmodulation=True"
            )


@dataclass(frozen=True)
class FrequencyModulated:
    """Carrier with oscillating instantaneous frequency, peak deviation Δf."""

    freq_deviation_hz: float
    carrier_freq_hz: float
    mod_freq_hz: float

    family = "FM"

    def __post_init__(self) -> None:
        _require_non_negative("freq_deviation_hz", self.freq_deviation_hz)
        _require_positive("carrier_freq_hz", self.carrier_freq_hz)
        _require_positive("mod_freq_hz", self.mod_freq_hz)


@dataclass(frozen=True)
class AmFmCoupled:
    """Sum of an AM and an FM signal sharing one carrier and one modulation frequency."""

    mod_index: float
    freq_deviation_hz: float
    carrier_freq_hz: float
    mod_freq_hz: float
    allow_overmodulation: bool = False

    family = "AMFM"

    def __post_init__(self) -> None:
        # Reuse the component validations by constructing both parts.
        self.am_part()
        self.fm_part()

    def am_part(self) -> AmplitudeModulated:
        return AmplitudeModulated(
            mod_index=self.mod_index,
            carrier_freq_hz=self.carrier_freq_hz,
            mod_freq_hz=self.mod_freq_hz,
            allow_overmodulation=self.allow_overmodulation,
        )

    def fm_part(self) -> FrequencyModulated:
        return FrequencyModulated(
            freq_deviation_hz=self.freq_deviation_hz,
            carrier_freq_hz=self.carrier_freq_hz,
            mod_freq_hz=self.mod_freq_hz,
        )


@dataclass(frozen=True)
class SimpleHarmonic:
    """Single sinusoid A sin(2π f_b t + φ)."""

    amplitude_v: float
    base_freq_hz: float
    phase_rad: float = 0.0

    family = "SH"

    def __post_init__(self) -> None:
        _require_non_negative("amplitude_v", self.amplitude_v)
        _require_positive("base_freq_hz", self.base_freq_hz)
        _require_finite("phase_rad", self.phase_rad)


@dataclass(frozen=True)
class Harmonic:
    """Amplitude and phase of one order in a harmonic series."""

    amplitude_v: float
    phase_rad: float = 0.0

    def __post_init__(self) -> None:
        _require_non_negative("amplitude_v", self.amplitude_v)
        _require_finite("phase_rad", self.phase_rad)


@dataclass(frozen=True)
class MultiHarmonic:
    """Harmonic series Σ_k A_k sin(2π k f_b t + φ_k), k = 1..K."""

    base_freq_hz: float
    harmonics: tuple[Harmonic, ...]

    family = "MH"

    def __post_init__(self) -> None:
        _require_positive("base_freq_hz", self.base_freq_hz)
        if not self.harmonics:
            raise ValueError("MultiHarmonic requires at least one harmonic")
        object.__setattr__(self, "harmonics", tuple(self.harmonics))


@dataclass(frozen=True)
class HarmonicTone:
    """One sinusoid at an explicit (possibly non-harmonic) frequency."""

    amplitude_v: float
    freq_hz: float
    phase_rad: float = 0.0

    def __post_init__(self) -> None:
        _require_non_negative("amplitude_v", self.amplitude_v)
        _require_positive("freq_hz", self.freq_hz)
        _require_finite("phase_rad", self.phase_rad)


@dataclass(frozen=True)
class RandomHarmonic:
    """Sum of sinusoids whose frequencies were drawn from a normal law."""

    components: tuple[HarmonicTone, ...]

    family = "RH"

    def __post_init__(self) -> None:
        if not self.components:
            raise ValueError("RandomHarmonic requires at least one component")
        object.__setattr__(self, "components", tuple(self.components))


@dataclass(frozen=True)
class CombinedHarmonic:
    """Superposition of one harmonic series and one random-frequency sum.

    Both parts are immutable value objects, so a CombinedHarmonic never
    shares mutable state with any other spec.
    """

    regular: MultiHarmonic
    random: RandomHarmonic

    family = "CH"


@dataclass(frozen=True)
class SingleTransient:
    """One decaying oscillation starting at `onset_s`.

    Decay and phase are both referenced to the onset instant, i.e. the
    response is the onset-shifted copy of A e^{-β t} sin(2π f_b t + φ);
    it is identically zero before the onset.
    """

    amplitude_v: float
    decay_per_s: float
    base_freq_hz: float
    phase_rad: float = 0.0
    onset_s: float = 0.0

    family = "ST"

    def __post_init__(self) -> None:
        _require_non_negative("amplitude_v", self.amplitude_v)
        _require_non_negative("decay_per_s", self.decay_per_s)
        _require_positive("base_freq_hz", self.base_freq_hz)
        _require_finite("phase_rad", self.phase_rad)
        _require_non_negative("onset_s", self.onset_s)


@dataclass(frozen=True)
class MultiTransient:
    """Superposition of independent decaying oscillations."""

    components: tuple[SingleTransient, ...]

    family = "MT"

    def __post_init__(self) -> None:
        if not self.components:
            raise ValueError("MultiTransient requires at least one component")
        object.__setattr__(self, "components", tuple(self.components))


@dataclass(frozen=True)
class SinglePeriodicImpulse:
    """One impulse response of a periodic train, fired at t = T0.

    The contribution is gated to zero for t < T0: without the gate the
    exponential diverges as t falls below the firing time.
    """

    amplitude_v: float
    decay_per_s: float
    period_s: float
    base_freq_hz: float
    phase_rad: float = 0.0

    family = "SP"

    def __post_init__(self) -> None:
        _require_non_negative("amplitude_v", self.amplitude_v)
        _require_non_negative("decay_per_s", self.decay_per_s)
        _require_positive("period_s", self.period_s)
        _require_positive("base_freq_hz", self.base_freq_hz)
        _require_finite("phase_rad", self.phase_rad)


@dataclass(frozen=True)
class Impulse:
    """Amplitude and phase of one impulse in a periodic train."""

    amplitude_v: float
    phase_rad: float = 0.0

    def __post_init__(self) -> None:
        _require_non_negative("amplitude_v", self.amplitude_v)
        _require_finite("phase_rad", self.phase_rad)


@dataclass(frozen=True)
class MultiPeriodicImpulse:
    """Train of decaying impulses fired at t = T0, 2 T0, 3 T0, ...

    The i-th impulse (i = 1..K) contributes
    A_i e^{-β (t - i T0)} sin(2π f_b (t - i T0) + φ_i) for t >= i T0
    and zero before, so the waveform equals the sum of the matching
    single-impulse responses.
    """

    decay_per_s: float
    period_s: float
    base_freq_hz: float
    impulses: tuple[Impulse, ...]

    family = "MP"

    def __post_init__(self) -> None:
        _require_non_negative("decay_per_s", self.decay_per_s)
        _require_positive("period_s", self.period_s)
        _require_positive("base_freq_hz", self.base_freq_hz)
        if not self.impulses:
            raise ValueError("MultiPeriodicImpulse requires at least one impulse")
        object.__setattr__(self, "impulses", tuple(self.impulses))


SignalSpec = Union[
    AmplitudeModulated,
    FrequencyModulated,
    AmFmCoupled,
    SimpleHarmonic,
    MultiHarmonic,
    RandomHarmonic,
    CombinedHarmonic,
    SingleTransient,
    MultiTransient,
    SinglePeriodicImpulse,
    MultiPeriodicImpulse,
]


def max_content_freq_hz(spec: SignalSpec) -> float:
    """Largest oscillation frequency present in the spec, for Nyquist checks.

    Decay-induced spectral broadening is ignored; only deterministic line
    content counts.
    """
    if isinstance(spec, AmplitudeModulated):
        return spec.carrier_freq_hz + spec.mod_freq_hz
    if isinstance(spec, FrequencyModulated):
        return spec.carrier_freq_hz + spec.freq_deviation_hz + spec.mod_freq_hz
    if isinstance(spec, AmFmCoupled):
        return max(
            max_content_freq_hz(spec.am_part()), max_content_freq_hz(spec.fm_part())
        )
    if isinstance(spec, SimpleHarmonic):
        return spec.base_freq_hz
    if isinstance(spec, MultiHarmonic):
        return len(spec.harmonics) * spec.base_freq_hz
    if isinstance(spec, RandomHarmonic):
        return max(c.freq_hz for c in spec.components)
    if isinstance(spec, CombinedHarmonic):
        return max(max_content_freq_hz(spec.regular), max_content_freq_hz(spec.random))
    if isinstance(spec, SingleTransient):
        return spec.base_freq_hz
    if isinstance(spec, MultiTransient):
        return max(c.base_freq_hz for c in spec.components)
    if isinstance(spec, (SinglePeriodicImpulse, MultiPeriodicImpulse)):
        return spec.base_freq_hz
    raise TypeError(f"not a signal spec: {type(spec).__name__}")


@dataclass(frozen=True)
class Interval:
    """Closed interval for a uniform parameter draw. A point interval is legal."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        _require_finite("lo", self.lo)
        _require_finite("hi", self.hi)
        if self.lo > self.hi:
            raise ValueError(f"interval lower bound {self.lo} exceeds upper {self.hi}")

    def draw(self, rng: np.random.Generator) -> float:
        if self.lo == self.hi:
            return float(self.lo)
        return float(rng.uniform(self.lo, self.hi))


@dataclass(frozen=True)
class ParamRanges:
    """Per-family parameter ranges for random spec generation.

    Defaults cover 50 Hz-class content comfortably below the 500 Hz Nyquist
    limit of the default 1 kHz sampling. Random-harmonic frequencies follow
    a normal law (mean `rh_freq_mean_hz`, std `rh_freq_std_hz`) truncated to
    positive values by redrawing.
    """

    seed: int = 0
    amplitude_v: Interval = field(default_factory=lambda: Interval(0.2, 1.0))
    base_freq_hz: Interval = field(default_factory=lambda: Interval(20.0, 80.0))
    phase_rad: Interval = field(default_factory=lambda: Interval(0.0, _TWO_PI))
    mod_index: Interval = field(default_factory=lambda: Interval(0.2, 1.0))
    carrier_freq_hz: Interval = field(default_factory=lambda: Interval(40.0, 120.0))
    mod_freq_hz: Interval = field(default_factory=lambda: Interval(5.0, 15.0))
    freq_deviation_hz: Interval = field(default_factory=lambda: Interval(2.0, 12.0))
    decay_per_s: Interval = field(default_factory=lambda: Interval(4.0, 30.0))
    impulse_period_s: Interval = field(default_factory=lambda: Interval(0.08, 0.2))
    onset_s: Interval = field(default_factory=lambda: Interval(0.0, 0.4))
    harmonic_count: tuple[int, int] = (2, 5)
    component_count: tuple[int, int] = (2, 5)
    impulse_count: tuple[int, int] = (3, 4)
    rh_freq_mean_hz: float = 100.0
    rh_freq_std_hz: float = 10.0

    def __post_init__(self) -> None:
        for name in ("harmonic_count", "component_count", "impulse_count"):
            lo, hi = getattr(self, name)
            if lo < 1 or lo > hi:
                raise ValueError(f"{name} must satisfy 1 <= lo <= hi, got ({lo}, {hi})")
        _require_positive("rh_freq_mean_hz", self.rh_freq_mean_hz)
        _require_non_negative("rh_freq_std_hz", self.rh_freq_std_hz)


def _draw_count(rng: np.random.Generator, bounds: tuple[int, int]) -> int:
    lo, hi = bounds
    return int(rng.integers(lo, hi + 1))


def _draw_positive_normal(rng: np.random.Generator, mean: float, std: float) -> float:
    if std == 0.0:
        return mean
    for _ in range(1000):
        value = float(rng.normal(mean, std))
        if value > 0.0:
            return value
    raise ValueError(
        f"could not draw a positive frequency from N({mean}, {std}^2); "
        "check rh_freq_mean_hz / rh_freq_std_hz"
    )


def sample_random_spec(
    family: str,
    ranges: ParamRanges | None = None,
    rng: np.random.Generator | None = None,
) -> SignalSpec:
    """Draw one random spec of the given family.

    Deterministic for a fixed `(ranges.seed, family)` when `rng` is omitted;
    pass an explicit generator to draw several distinct specs in sequence.
    """
    ranges = ranges if ranges is not None else ParamRanges()
    if rng is None:
        rng = np.random.default_rng(ranges.seed)

    if family == "AM":
        return AmplitudeModulated(
            mod_index=ranges.mod_index.draw(rng),
            carrier_freq_hz=ranges.carrier_freq_hz.draw(rng),
            mod_freq_hz=ranges.mod_freq_hz.draw(rng),
        )
    if family == "FM":
        return FrequencyModulated(
            freq_deviation_hz=ranges.freq_deviation_hz.draw(rng),
            carrier_freq_hz=ranges.carrier_freq_hz.draw(rng),
            mod_freq_hz=ranges.mod_freq_hz.draw(rng),
        )
    if family == "AMFM":
        return AmFmCoupled(
            mod_index=ranges.mod_index.draw(rng),
            freq_deviation_hz=ranges.freq_deviation_hz.draw(rng),
            carrier_freq_hz=ranges.carrier_freq_hz.draw(rng),
            mod_freq_hz=ranges.mod_freq_hz.draw(rng),
        )
    if family == "SH":
        return SimpleHarmonic(
            amplitude_v=ranges.amplitude_v.draw(rng),
            base_freq_hz=ranges.base_freq_hz.draw(rng),
            phase_rad=ranges.phase_rad.draw(rng),
        )
    if family == "MH":
        count = _draw_count(rng, ranges.harmonic_count)
        return MultiHarmonic(
            base_freq_hz=ranges.base_freq_hz.draw(rng),
            harmonics=tuple(
                Harmonic(ranges.amplitude_v.draw(rng), ranges.phase_rad.draw(rng))
                for _ in range(count)
            ),
        )
    if family == "RH":
        count = _draw_count(rng, ranges.component_count)
        return RandomHarmonic(
            components=tuple(
                HarmonicTone(
                    amplitude_v=ranges.amplitude_v.draw(rng),
                    freq_hz=_draw_positive_normal(
                        rng, ranges.rh_freq_mean_hz, ranges.rh_freq_std_hz
                    ),
                    phase_rad=ranges.phase_rad.draw(rng),
                )
                for _ in range(count)
            ),
        )
    if family == "CH":
        regular = sample_random_spec("MH", ranges, rng)
        random_part = sample_random_spec("RH", ranges, rng)
        return CombinedHarmonic(regular=regular, random=random_part)
    if family == "ST":
        return SingleTransient(
            amplitude_v=ranges.amplitude_v.draw(rng),
            decay_per_s=ranges.decay_per_s.draw(rng),
            base_freq_hz=ranges.base_freq_hz.draw(rng),
            phase_rad=ranges.phase_rad.draw(rng),
            onset_s=ranges.onset_s.draw(rng),
        )
    if family == "MT":
        count = _draw_count(rng, ranges.component_count)
        components = [
            SingleTransient(
                amplitude_v=ranges.amplitude_v.draw(rng),
                decay_per_s=ranges.decay_per_s.draw(rng),
                base_freq_hz=ranges.base_freq_hz.draw(rng),
                phase_rad=ranges.phase_rad.draw(rng),
                onset_s=ranges.onset_s.draw(rng),
            )
            for _ in range(count)
        ]
        components.sort(key=lambda c: c.onset_s)
        return MultiTransient(components=tuple(components))
    if family == "SP":
        return SinglePeriodicImpulse(
            amplitude_v=ranges.amplitude_v.draw(rng),
            decay_per_s=ranges.decay_per_s.draw(rng),
            period_s=ranges.impulse_period_s.draw(rng),
            base_freq_hz=ranges.base_freq_hz.draw(rng),
            phase_rad=ranges.phase_rad.draw(rng),
        )
    if family == "MP":
        count = _draw_count(rng, ranges.impulse_count)
        return MultiPeriodicImpulse(
            decay_per_s=ranges.decay_per_s.draw(rng),
            period_s=ranges.impulse_period_s.draw(rng),
            base_freq_hz=ranges.base_freq_hz.draw(rng),
            impulses=tuple(
                Impulse(ranges.amplitude_v.draw(rng), ranges.phase_rad.draw(rng))
                for _ in range(count)
            ),
        )
    raise ValueError(f"unknown synthetic family {family!r}")


def ground_truth_dict(spec: SignalSpec) -> dict:
    """JSON-ready summary of a spec, used as dataset ground truth."""
    if isinstance(spec, AmplitudeModulated):
        return {
            "family": spec.family,
            "mod_index": spec.mod_index,
            "carrier_freq_hz": spec.carrier_freq_hz,
            "mod_freq_hz": spec.mod_freq_hz,
        }
    if isinstance(spec, FrequencyModulated):
        return {
            "family": spec.family,
            "freq_deviation_hz": spec.freq_deviation_hz,
            "carrier_freq_hz": spec.carrier_freq_hz,
            "mod_freq_hz": spec.mod_freq_hz,
        }
    if isinstance(spec, AmFmCoupled):
        return {
            "family": spec.family,
            "mod_index": spec.mod_index,
            "freq_deviation_hz": spec.freq_deviation_hz,
            "carrier_freq_hz": spec.carrier_freq_hz,
            "mod_freq_hz": spec.mod_freq_hz,
        }
    if isinstance(spec, SimpleHarmonic):
        return {
            "family": spec.family,
            "amplitude_v": spec.amplitude_v,
            "base_freq_hz": spec.base_freq_hz,
            "phase_rad": spec.phase_rad,
        }
    if isinstance(spec, MultiHarmonic):
        return {
            "family": spec.family,
            "base_freq_hz": spec.base_freq_hz,
            "harmonics": [
                {"amplitude_v": h.amplitude_v, "phase_rad": h.phase_rad}
                for h in spec.harmonics
            ],
        }
    if isinstance(spec, RandomHarmonic):
        return {
            "family": spec.family,
            "components": [
                {"amplitude_v": c.amplitude_v, "freq_hz": c.freq_hz, "phase_rad": c.phase_rad}
                for c in spec.components
            ],
        }
    if isinstance(spec, CombinedHarmonic):
        return {
            "family": spec.family,
            "regular": ground_truth_dict(spec.regular),
            "random": ground_truth_dict(spec.random),
        }
    if isinstance(spec, SingleTransient):
        return {
            "family": spec.family,
            "amplitude_v": spec.amplitude_v,
            "decay_per_s": spec.decay_per_s,
            "base_freq_hz": spec.base_freq_hz,
            "phase_rad": spec.phase_rad,
            "onset_s": spec.onset_s,
        }
    if isinstance(spec, MultiTransient):
        return {
            "family": spec.family,
            "components": [
                {
                    "amplitude_v": c.amplitude_v,
                    "decay_per_s": c.decay_per_s,
                    "base_freq_hz": c.base_freq_hz,
                    "phase_rad": c.phase_rad,
                    "onset_s": c.onset_s,
                }
                for c in spec.components
            ],
        }
    if isinstance(spec, SinglePeriodicImpulse):
        return {
            "family": spec.family,
            "amplitude_v": spec.amplitude_v,
            "decay_per_s": spec.decay_per_s,
            "period_s": spec.period_s,
            "base_freq_hz": spec.base_freq_hz,
            "phase_rad": spec.phase_rad,
        }
    if isinstance(spec, MultiPeriodicImpulse):
        return {
            "family": spec.family,
            "decay_per_s": spec.decay_per_s,
            "period_s": spec.period_s,
            "base_freq_hz": spec.base_freq_hz,
            "impulses": [
                {"amplitude_v": i.amplitude_v, "phase_rad": i.phase_rad}
                for i in spec.impulses
            ],
        }
    raise TypeError(f"not a signal spec: {type(spec).__name__}")
