"""Numeric rendering conventions for answer text.

All quantities render at two decimals; what differs per unit is trailing-
zero handling, chosen to match the answer style of the question templates:
whole-hertz values drop the fraction entirely ("50 Hz"), radians keep at
least one decimal ("2.0 radians"), and seconds/volts stay fixed at two
("0.02 seconds", "0.29").
"""

from __future__ import annotations

import math

UNITS = ("volts", "hz", "hz_fixed", "seconds", "radians", "unitless", "count")


def format_quantity(value: float, unit: str) -> str:
    """Render a number for answer text; returns digits only, no unit word."""
    if unit not in UNITS:
        raise ValueError(f"unknown unit {unit!r}; expected one of {UNITS}")
    if not math.isfinite(value):
        raise ValueError(f"cannot format non-finite value {value!r}")

    if unit == "count":
        return str(int(round(value)))

    text = f"{value:.2f}"
    if unit == "hz":
        return text.rstrip("0").rstrip(".")
    if unit == "radians":
        stripped = text.rstrip("0")
        return stripped + "0" if stripped.endswith(".") else stripped
    # volts, seconds, unitless, hz_fixed: fixed two decimals.
    return text


def format_listing(values: list[float], unit: str = "unitless") -> str:
    """Bracketed value list, e.g. "[0.95, 0.61, 0.33]"."""
    return "[" + ", ".join(format_quantity(v, unit) for v in values) + "]"
