#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Crossing Entity Class
"""

from fractions import Fraction
from typing import Optional, Tuple

from src.utils.rational_util import RationalUtil


class Crossing:
    """<<Entity>> Crossing Entity Class

    A double point of the projection, met at curve parameters t and t_prime.
    For cylinder and flat torus crossings t is the strand with offset +x_l on
    its chord and k, k_prime, l hold the combinatorial data
    2n*t = k + x_l, 2n*t' = k' - x_l. For cube crossings t < t_prime and the
    combinatorial fields are None.
    """

    def __init__(self, index=None, t=None, t_prime=None, k=None, k_prime=None, l=None,
                 sign=0, over_first=None):
        """Initialize crossing entity

        Args:
            index (int, optional): Crossing number, 1-based, ascending in min(t, t')
            t (Fraction|float, optional): First parameter
            t_prime (Fraction|float, optional): Second parameter
            k (int, optional): Odd integer of the first strand
            k_prime (int, optional): Odd integer of the second strand
            l (int, optional): Layer, 1 <= l <= s - 1
            sign (int, optional): Crossing sign, 0 until resolved
            over_first (bool, optional): Whether the t strand is the over strand
        """
        self.__index = int(index) if index is not None else None
        self.__t = t
        self.__t_prime = t_prime
        self.__k = int(k) if k is not None else None
        self.__k_prime = int(k_prime) if k_prime is not None else None
        self.__l = int(l) if l is not None else None
        self.__sign = int(sign)
        self.__over_first = over_first

    # Accessor methods
    @property
    def index(self) -> int:
        return self.__index

    @property
    def t(self):
        return self.__t

    @property
    def t_prime(self):
        return self.__t_prime

    @property
    def k(self) -> Optional[int]:
        return self.__k

    @property
    def k_prime(self) -> Optional[int]:
        return self.__k_prime

    @property
    def l(self) -> Optional[int]:
        return self.__l

    @property
    def sign(self) -> int:
        """Get crossing sign

        Returns:
            int: +1 or -1, 0 while unresolved
        """
        return self.__sign

    @property
    def over_first(self) -> Optional[bool]:
        return self.__over_first

    @property
    def has_combinatorics(self) -> bool:
        return self.__k is not None and self.__k_prime is not None and self.__l is not None

    @property
    def params(self) -> Tuple:
        """Both parameters, smaller first"""
        return tuple(sorted((self.__t, self.__t_prime)))

    @property
    def over_param(self):
        return self.__t if self.__over_first else self.__t_prime

    @property
    def under_param(self):
        return self.__t_prime if self.__over_first else self.__t

    def exact_sum(self, n: int = None) -> Fraction:
        """Exact value of t + t'

        Args:
            n (int, optional): Number of reflections, needed for float parameters

        Returns:
            Fraction: t + t'
        """
        if self.has_combinatorics and n is not None:
            return Fraction(self.__k + self.__k_prime, 2 * n)
        if isinstance(self.__t, (Fraction, int)) and isinstance(self.__t_prime, (Fraction, int)):
            return Fraction(self.__t) + Fraction(self.__t_prime)
        raise ValueError(f"Crossing {self.__index} has float parameters and no combinatorics")

    def with_index(self, index: int):
        return Crossing(index, self.__t, self.__t_prime, self.__k, self.__k_prime, self.__l,
                        self.__sign, self.__over_first)

    def resolved(self, sign: int, over_first: bool):
        """Copy of this crossing with sign and over strand set"""
        return Crossing(self.__index, self.__t, self.__t_prime, self.__k, self.__k_prime, self.__l,
                        sign, over_first)

    def to_dict(self) -> dict:
        """Convert to dictionary

        Returns:
            dict: Dictionary with JSON-compatible values
        """
        return {
            'index': self.__index,
            't': _param_to_json(self.__t),
            't_prime': _param_to_json(self.__t_prime),
            'k': self.__k,
            'k_prime': self.__k_prime,
            'l': self.__l,
            'sign': self.__sign,
            'over_first': self.__over_first,
        }

    @classmethod
    def from_dict(cls, data: dict):
        return cls(
            index=data.get('index'),
            t=_param_from_json(data.get('t')),
            t_prime=_param_from_json(data.get('t_prime')),
            k=data.get('k'),
            k_prime=data.get('k_prime'),
            l=data.get('l'),
            sign=data.get('sign', 0),
            over_first=data.get('over_first'),
        )

    def __str__(self) -> str:
        over = "?" if self.__over_first is None else ("t" if self.__over_first else "t'")
        return (f"Crossing {self.__index}: t={_param_to_json(self.__t)}, "
                f"t'={_param_to_json(self.__t_prime)}, sign={self.__sign:+d}, over={over}")


def _param_to_json(value):
    if isinstance(value, Fraction):
        return RationalUtil.format(value)
    return value


def _param_from_json(value):
    if isinstance(value, str):
        return RationalUtil.parse(value)
    return value
