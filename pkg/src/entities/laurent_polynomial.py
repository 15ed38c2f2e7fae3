#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Laurent Polynomial Entity Class
"""

from fractions import Fraction
from typing import Dict, List, Mapping


class LaurentPolynomial:
    """<<Entity>> Integer Laurent polynomial in t

    Stored as a sparse exponent -> coefficient map without zero terms.
    """

    def __init__(self, coefficients: Mapping[int, int] = None):
        """Initialize polynomial

        Args:
            coefficients (Mapping[int, int], optional): Exponent to coefficient map
        """
        self.__terms = {int(e): int(c) for e, c in (coefficients or {}).items() if int(c) != 0}

    @classmethod
    def from_coefficients(cls, coeffs: List[int], min_exp: int = 0):
        """Create from a dense ascending coefficient list

        Args:
            coeffs (list): Coefficients of t^min_exp, t^(min_exp + 1), ...
            min_exp (int, optional): Exponent of the first coefficient

        Returns:
            LaurentPolynomial: Polynomial
        """
        return cls({min_exp + i: c for i, c in enumerate(coeffs)})

    @classmethod
    def from_ring_element(cls, element):
        """Create from a sympy PolyElement of a univariate integer ring"""
        return cls({monom[0]: int(coeff) for monom, coeff in element.terms()})

    @property
    def terms(self) -> Dict[int, int]:
        return dict(self.__terms)

    @property
    def min_exp(self) -> int:
        return min(self.__terms) if self.__terms else 0

    @property
    def max_exp(self) -> int:
        return max(self.__terms) if self.__terms else 0

    @property
    def coeffs(self) -> List[int]:
        """Dense ascending coefficient list from min_exp to max_exp"""
        if not self.__terms:
            return [0]
        return [self.__terms.get(e, 0) for e in range(self.min_exp, self.max_exp + 1)]

    def normalized(self):
        """Shift to lowest exponent 0 and make the leading coefficient positive

        Returns:
            LaurentPolynomial: Normalized polynomial
        """
        if not self.__terms:
            return LaurentPolynomial()
        shift = self.min_exp
        unit = -1 if self.__terms[self.max_exp] < 0 else 1
        return LaurentPolynomial({e - shift: unit * c for e, c in self.__terms.items()})

    def evaluate(self, value):
        """Evaluate at t = value

        Args:
            value (int|Fraction): Point, must be nonzero when negative exponents occur

        Returns:
            int|Fraction: Value
        """
        total = Fraction(0)
        for e, c in self.__terms.items():
            total += c * Fraction(value) ** e
        return int(total) if total.denominator == 1 else total

    def is_symmetric(self) -> bool:
        """Whether the coefficients read the same in both directions"""
        coeffs = self.coeffs
        return coeffs == coeffs[::-1]

    def to_dict(self) -> dict:
        """Convert to dictionary

        Returns:
            dict: {"coeffs": [...], "min_exp": e}
        """
        return {'coeffs': self.coeffs, 'min_exp': self.min_exp}

    @classmethod
    def from_dict(cls, data: dict):
        return cls.from_coefficients(data.get('coeffs', []), data.get('min_exp', 0))

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.__terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.__terms.items())))

    def __str__(self) -> str:
        if not self.__terms:
            return "0"
        parts = []
        for e in sorted(self.__terms, reverse=True):
            c = self.__terms[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = "t" if e == 1 else f"t^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self})"
