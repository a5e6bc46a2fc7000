"""Single-sided amplitude spectra and peak-frequency readout.

Scaling convention: the DC bin carries \\|X[0]\\|/N, interior bins carry
2\\|X[k]\\|/N, and the Nyquist bin (even N) carries \\|X[N/2]\\|/N, so a pure
sinusoid that falls exactly on a bin reads out its amplitude in volts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from vibesqa.waveforms.synth import Waveform


class NoPeakError(ValueError):
    """The spectrum carries no energy, so no peak frequency exists."""


@dataclass(frozen=True)
class Spectrum:
    """Single-sided amplitude spectrum on a uniform frequency grid."""

    bin_freqs: np.ndarray
    magnitudes: np.ndarray
    resolution_hz: float

    def __post_init__(self) -> None:
        freqs = np.asarray(self.bin_freqs, dtype=np.float64)
        mags = np.asarray(self.magnitudes, dtype=np.float64)
        object.__setattr__(self, "bin_freqs", freqs)
        object.__setattr__(self, "magnitudes", mags)
        if freqs.shape != mags.shape:
            raise ValueError("bin_freqs and magnitudes must have equal length")
        if freqs.size == 0:
            raise ValueError("spectrum must contain at least one bin")
        if freqs[0] != 0.0 or np.any(np.diff(freqs) <= 0):
            raise ValueError("bin_freqs must start at 0 and strictly increase")
        if np.any(mags < 0):
            raise ValueError("magnitudes must be non-negative")


def compute_spectrum(waveform: Waveform) -> Spectrum:
    """Amplitude spectrum of a waveform via the real FFT."""
    samples = waveform.samples
    n = samples.shape[0]
    if n < 2:
        raise ValueError("spectrum needs at least 2 samples")
    if not np.all(np.isfinite(samples)):
        raise ValueError("samples must all be finite")

    rate = waveform.sampling.sample_rate_hz
    transform = np.fft.rfft(samples)
    magnitudes = np.abs(transform) / n
    if n % 2 == 0:
        magnitudes[1:-1] *= 2.0
    else:
        magnitudes[1:] *= 2.0
    freqs = np.fft.rfftfreq(n, d=1.0 / rate)
    return Spectrum(bin_freqs=freqs, magnitudes=magnitudes, resolution_hz=rate / n)


def peak_frequency(spectrum: Spectrum, exclude_dc: bool = True) -> float:
    """Frequency of the strongest bin; ties resolve to the lowest frequency.

    Raises :class:`NoPeakError` on an all-zero spectrum.
    """
    mags = spectrum.magnitudes
    freqs = spectrum.bin_freqs
    if exclude_dc:
        mags = mags[1:]
        freqs = freqs[1:]
    if mags.size == 0 or not np.any(mags > 0):
        raise NoPeakError("spectrum has no nonzero bins")
    # argmax returns the first maximum, which is the lowest-frequency winner.
    return float(freqs[int(np.argmax(mags))])
