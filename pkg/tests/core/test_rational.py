import unittest
from fractions import Fraction

from src.riesz.lattice import (
    NotRationalError,
    RationalFormatError,
    format_rational,
    parse_rational,
    to_rational,
)


class RationalTest(unittest.TestCase):
    """Unit tests for exact scalars."""

    def test_parse_rational(self) -> None:
        for text, expected in [
            ("0", Fraction(0)),
            ("-3", Fraction(-3)),
            ("1/2", Fraction(1, 2)),
            ("6/4", Fraction(3, 2)),
            ("-7/3", Fraction(-7, 3)),
            (5, Fraction(5)),
        ]:
            with self.subTest(text=text):
                self.assertEqual(expected, parse_rational(text))

    def test_exception_raised_when_parsing_malformed_text(self) -> None:
        for text in ["", "1.5", "1/0", "a/b", "1/-2", " 1", "1e3"]:
            with self.subTest(text=text), self.assertRaises(RationalFormatError) as cm:
                _ = parse_rational(text)
            self.assertEqual(text, cm.exception.text)

    def test_exception_raised_when_value_is_not_exact(self) -> None:
        for value in [0.5, True, 1j, None]:
            with self.subTest(value=value), self.assertRaises(NotRationalError) as cm:
                _ = to_rational(value)
            self.assertIs(value, cm.exception.value)

    def test_format_rational(self) -> None:
        for value, expected in [
            (Fraction(0), "0"),
            (Fraction(4, 2), "2"),
            (Fraction(-1, 3), "-1/3"),
        ]:
            with self.subTest(value=value):
                self.assertEqual(expected, format_rational(value))
