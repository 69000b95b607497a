"""
Exact rational helpers

Slopes are `fractions.Fraction` values: always in lowest terms with a
positive denominator, so structural equality is semantic equality.
"""

from fractions import Fraction
import re

Rational = Fraction

RATIONAL_PATTERN = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")


def format_rational(value: Rational) -> str:
    """Render as "a/b", keeping the denominator even when it is 1"""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Rational:
    """Parse "a/b" or "a"; floats are rejected"""
    match = RATIONAL_PATTERN.match(text)
    if not match:
        raise ValueError(f"Not an exact rational: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2) or 1)
    if denominator == 0:
        raise ValueError(f"Zero denominator in {text!r}")
    return Fraction(numerator, denominator)
