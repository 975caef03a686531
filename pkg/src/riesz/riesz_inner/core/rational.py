"""Module for exact rational scalars.

Scalars are :py:class:`fractions.Fraction` values, which are always stored in
lowest terms with a positive denominator and never round.
"""

import re
from fractions import Fraction
from typing import Final

from .exceptions import NotRationalError, RationalFormatError

type Rat = Fraction
type RationalLike = Fraction | int

_RATIONAL_PATTERN: Final = re.compile(r"-?\d+(/\d+)?")

ZERO: Final = Fraction(0)
ONE: Final = Fraction(1)


def to_rational(value: object) -> Fraction:
    """Return the value as an exact rational.

    Raises:
        NotRationalError: The value is a float, bool, complex or other
            non-integral, non-fractional object.
    """
    if isinstance(value, bool):
        raise NotRationalError(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise NotRationalError(value)


def parse_rational(value: object) -> Fraction:
    """Parse a serialised rational, either "p", "p/q" or a JSON integer.

    Raises:
        RationalFormatError: The text is not of the form "p" or "p/q", or the
            denominator is zero.
        NotRationalError: The value is neither text nor an integer.
    """
    if not isinstance(value, str):
        return to_rational(value)
    if _RATIONAL_PATTERN.fullmatch(value) is None:
        raise RationalFormatError(value)
    try:
        return Fraction(value)
    except ZeroDivisionError as e:
        raise RationalFormatError(value) from e


def format_rational(value: Fraction) -> str:
    """Serialise a rational as "p/q", or "p" when the denominator is 1."""
    return str(value)


def ceil_rational(value: Fraction) -> int:
    """Return the least integer not less than the value."""
    return -((-value.numerator) // value.denominator)


def floor_rational(value: Fraction) -> int:
    """Return the greatest integer not greater than the value."""
    return value.numerator // value.denominator


def sign(value: Fraction) -> int:
    """Return -1, 0 or 1 according to the sign of the value."""
    return (value > 0) - (value < 0)
