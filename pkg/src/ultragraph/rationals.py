"""Exact rational conversion and formatting.

All distances in this package are `fractions.Fraction` values.  Floats
are rejected everywhere: the library's decisions hinge on exact equality
(for example "does this entry equal the diameter"), which binary
rounding would silently corrupt.  Decimal strings like "1.5" parse
exactly (denominator a power of ten).
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(token: str) -> Fraction:
    """Parse "p/q", an integer, or a decimal string into an exact Fraction."""
    try:
        return Fraction(token.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {token!r}") from exc


def as_rational(value: Fraction | int | str) -> Fraction:
    """Coerce ints, strings, and Fractions to Fraction; refuse floats."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"not a rational number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ValueError(
        f"expected an exact rational (Fraction, int, or string), got {type(value).__name__}: "
        f"{value!r}; floats are rejected to keep arithmetic exact"
    )


def format_rational(value: Fraction) -> str:
    """Render a Fraction as "p" or "p/q"; round trips through parse_rational."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
