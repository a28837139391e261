"""Exact rational parsing and decimal rendering.

Every quantity in this package is a :class:`fractions.Fraction`; binary
floats are rejected at the boundary so no value ever passes through a lossy
conversion. Decimals exist only as rendered strings.
"""

from __future__ import annotations

from fractions import Fraction

RationalLike = "Fraction | int | str"


def parse_rational(value) -> Fraction:
    """Convert an int, Fraction, decimal string or "p/q" string to a Fraction.

    Floats are refused: callers must supply the decimal text (e.g. "0.1")
    so the value is converted exactly.
    """
    if isinstance(value, bool):
        raise TypeError(f"expected a rational value, got bool {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError(
            f"refusing to convert binary float {value!r}; pass a decimal "
            'string such as "0.1" or a ratio such as "1/10"'
        )
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    raise TypeError(f"expected a rational value, got {type(value).__name__}")


def render_decimal(value: Fraction, places: int) -> str:
    """Render a Fraction as a fixed-point decimal string, rounding half to even."""
    if places < 0:
        raise ValueError("places must be non-negative")
    scale = 10**places
    scaled = round(Fraction(value) * scale)  # Fraction.__round__ is half-even
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), scale)
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{places}d}"
