from __future__ import annotations

import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from vibesqa.waveforms import write_real_segment

# Frozen 20-pair (reference, prediction) toy corpus covering identity,
# partial overlap, disjoint vocab, length mismatches, repeats, and numbers.
TOY_CORPUS = [
    ("This is a simple harmonic signal.", "This is a simple harmonic signal."),
    ("The amplitude of this signal is 0.29.", "The amplitude of this signal is 0.31."),
    ("The base frequency of this signal is 50 Hz.", "The base frequency is 50 Hz."),
    ("The period of this signal is 0.02 seconds.", "The period of this signal is 0.14 seconds."),
    (
        "The peak frequency of this signal is 50.14, which is close to its base frequency.",
        "The peak frequency of this signal is 50 Hz.",
    ),
    ("It represents a single sine wave with a constant amplitude.",
     "The signal oscillates periodically with a single frequency."),
    ("This signal has impulse characteristics and decays over time.",
     "This signal decays over time and has impulse characteristics."),
    ("The shock interval of this signal is [0.12] seconds.",
     "The shock interval of this signal is [0.16] seconds."),
    ("This is a multiple periodic impulse harmonic signal.",
     "Multiple periodic impulse signal"),
    ("The condition of the bearing influences the signal characteristics.",
     "totally unrelated answer text"),
    ("one two three four five six seven", "one two three four"),
    ("one two three four", "one two three four five six seven"),
    ("repeat repeat repeat repeat", "repeat repeat"),
    ("alpha beta gamma delta", "epsilon zeta eta theta"),
    ("short", "short"),
    ("a b c d e f g h", "a c e g"),
    ("the quick brown fox jumps over the lazy dog",
     "the quick brown dog jumps over the lazy fox"),
    ("modulation index 0.5 carrier 100 Hz modulation 10 Hz",
     "carrier 100 Hz modulation 10 Hz index 0.5"),
    ("decay coefficient 12.4 with onset at 0.15 seconds",
     "decay coefficient 12.4 with onset at 0.15 seconds"),
    ("no numbers in this reference answer", "but 3 numbers 4 here 5"),
]


@pytest.fixture(scope="session")
def toy_corpus() -> list[tuple[str, str]]:
    return list(TOY_CORPUS)


@pytest.fixture()
def recordings_dir(tmp_path: Path) -> Path:
    """Four small raw recordings (one per bearing condition) with sidecars."""
    rng = np.random.default_rng(7)
    directory = tmp_path / "recordings"
    directory.mkdir()
    conditions = [
        ("normal", None),
        ("inner race fault", 123.4),
        ("ball fault", 95.1),
        ("outer race fault", 87.3),
    ]
    for index, (label, fault_freq) in enumerate(conditions):
        extra = {"shaft_freq_hz": 10.0}
        if fault_freq is not None:
            extra["fault_freq_hz"] = fault_freq
        write_real_segment(
            directory / f"bearing_{index}.f32",
            rng.standard_normal(20000),
            sample_rate_hz=49600.0,
            label=label,
            channel=0,
            **extra,
        )
    return directory
