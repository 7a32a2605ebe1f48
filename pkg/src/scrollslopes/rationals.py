"""Exact rational rendering used by every serialized interface.

Rationals travel as strings "p/q" in lowest terms with q > 0, and the
denominator is always written ("20/1", not "20").  Floats never appear
anywhere: the inequalities decided here have margins like
2/(g-4) - 4/(g-2) and would not survive rounding.
"""

from __future__ import annotations

from fractions import Fraction


def format_rational(value: Fraction | int) -> str:
    q = Fraction(value)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" back into an exact rational.

    Accepts only the canonical wire form produced by :func:`format_rational`.
    """
    num, sep, den = text.partition("/")
    if not sep:
        raise ValueError(f"not a rational string: {text!r}")
    return Fraction(int(num), int(den))
