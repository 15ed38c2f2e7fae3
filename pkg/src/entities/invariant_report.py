#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Invariant Report Entity Class
"""

import math
from typing import Optional

from src.entities.laurent_polynomial import LaurentPolynomial


class InvariantReport:
    """<<Entity>> Determinant and Alexander polynomial of a knot"""

    def __init__(self, determinant: int, alexander: LaurentPolynomial):
        """Initialize invariant report

        Args:
            determinant (int): Knot determinant, |Delta(-1)|
            alexander (LaurentPolynomial): Normalized Alexander polynomial
        """
        self.__determinant = int(determinant)
        self.__alexander = alexander

    @property
    def determinant(self) -> int:
        return self.__determinant

    @property
    def alexander(self) -> LaurentPolynomial:
        return self.__alexander

    @property
    def square_root(self) -> Optional[int]:
        """Integer square root of the determinant when it is a perfect square

        Returns:
            int|None: Root, None when the determinant is not a square
        """
        root = math.isqrt(self.__determinant)
        return root if root * root == self.__determinant else None

    @property
    def is_square(self) -> bool:
        return self.square_root is not None

    def to_dict(self) -> dict:
        """Convert to dictionary

        Returns:
            dict: {"det", "alexander", "square_root"}
        """
        return {
            'det': self.__determinant,
            'alexander': self.__alexander.to_dict(),
            'square_root': self.square_root,
        }

    @classmethod
    def from_dict(cls, data: dict):
        return cls(data.get('det'), LaurentPolynomial.from_dict(data.get('alexander', {})))

    def __eq__(self, other):
        if not isinstance(other, InvariantReport):
            return NotImplemented
        return self.__determinant == other.determinant and self.__alexander == other.alexander

    def __str__(self) -> str:
        root = self.square_root
        square = f" = {root}^2" if root is not None else ""
        return f"det = {self.__determinant}{square}, Alexander = {self.__alexander}"
