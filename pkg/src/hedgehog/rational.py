"""Exact rational helpers and the "num/den" wire format."""

from __future__ import annotations

from fractions import Fraction
from typing import Union

RationalLike = Union[Fraction, int, str]


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and "num/den" strings to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def parse_fraction(text: str) -> Fraction:
    """Parse the wire format: "num/den" or a bare integer string."""
    if not isinstance(text, str):
        raise ValueError(f"rational must be a string, got {text!r}")
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational {text!r}: {exc}") from exc


def format_fraction(value: Fraction) -> str:
    """Serialize exactly, always as "num/den"."""
    f = as_fraction(value)
    return f"{f.numerator}/{f.denominator}"
