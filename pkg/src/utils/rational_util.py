#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Rational number utility class, parses and formats exact parameters
"""

from fractions import Fraction
from typing import Union

Number = Union[int, float, Fraction]


class RationalUtil:
    """Rational number utility class"""

    @staticmethod
    def parse(text) -> Fraction:
        """Parse a rational from "p/q", an integer string or a number

        Args:
            text (str|int|Fraction): Value to parse

        Returns:
            Fraction: Parsed value

        Raises:
            ValueError: If the text is not a rational number
        """
        if isinstance(text, Fraction):
            return text
        if isinstance(text, int):
            return Fraction(text)
        if isinstance(text, float):
            raise ValueError(f"Refusing to parse float {text!r} as an exact rational")
        try:
            return Fraction(str(text).strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Invalid rational '{text}': {e}") from e

    @staticmethod
    def format(value: Fraction) -> str:
        """Format a rational as "p/q" (or "p" for integers)

        Args:
            value (Fraction): Value to format

        Returns:
            str: Formatted value
        """
        value = Fraction(value)
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"

    @staticmethod
    def is_integer(value: Number, tolerance: float = 0.0) -> bool:
        """Check whether a value is an integer, exactly or within tolerance"""
        if isinstance(value, (Fraction, int)):
            return Fraction(value).denominator == 1
        return abs(value - round(value)) <= tolerance
