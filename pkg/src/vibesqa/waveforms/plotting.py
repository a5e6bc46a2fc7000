"""Deterministic time-domain plot rendering.

Rendering uses a non-interactive Agg canvas built per call, so identical
inputs produce byte-identical PNG output and concurrent callers never share
state.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from vibesqa.waveforms.synth import Waveform


@dataclass(frozen=True)
class PlotStyle:
    """Appearance of rendered signal images. Default size is 336x336 px."""

    width_px: int = 336
    height_px: int = 336
    dpi: int = 96
    line_color: str = "#1f77b4"
    line_width: float = 0.8
    show_grid: bool = False
    font_size: float = 6.0

    def __post_init__(self) -> None:
        if self.width_px <= 0 or self.height_px <= 0 or self.dpi <= 0:
            raise ValueError("width_px, height_px, and dpi must be positive")


def render_plot(waveform: Waveform, style: PlotStyle | None = None) -> bytes:
    """Render a waveform (time in seconds vs amplitude in volts) to PNG bytes."""
    if waveform.samples.shape[0] == 0:
        raise ValueError("cannot render a zero-length waveform")
    style = style if style is not None else PlotStyle()

    figure = Figure(
        figsize=(style.width_px / style.dpi, style.height_px / style.dpi),
        dpi=style.dpi,
    )
    FigureCanvasAgg(figure)
    axes = figure.add_subplot(1, 1, 1)
    axes.plot(
        waveform.sampling.times(),
        waveform.samples,
        color=style.line_color,
        linewidth=style.line_width,
    )
    axes.set_xlabel("Time (s)", fontsize=style.font_size)
    axes.set_ylabel("Amplitude (V)", fontsize=style.font_size)
    axes.tick_params(labelsize=style.font_size)
    if style.show_grid:
        axes.grid(True, linewidth=0.3, alpha=0.5)
    figure.tight_layout()

    buffer = io.BytesIO()
    figure.savefig(buffer, format="png", dpi=style.dpi)
    return buffer.getvalue()
