#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Billiard Parameters Entity Class
"""

import math
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

from src import config
from src.exceptions import InvalidParametersError
from src.utils.rational_util import RationalUtil


class Geometry(Enum):
    """Billiard table the knot lives in"""
    CYLINDER = "cylinder"
    FLAT_TORUS = "flat-torus"
    CUBE = "cube"


# Family letter used in knot names, Z(s,n,m) and so on
_FAMILY_LETTERS = {
    Geometry.CYLINDER: "Z",
    Geometry.FLAT_TORUS: "T",
    Geometry.CUBE: "R",
}


class Point3(NamedTuple):
    """A point of a billiard curve"""
    x: float
    y: float
    z: float


class BilliardParams:
    """<<Entity>> Billiard Parameters Entity Class

    A beta of 0 stands for the beta -> 0 limit of a cylinder knot, the
    stable diagram Z^st(s, n, m).
    """

    def __init__(self, geometry, s, n, m, phase=None, beta=None):
        """Initialize billiard parameters

        Args:
            geometry (Geometry|str): Billiard table
            s (int): Number of windings (cylinder, flat torus) or x frequency (cube)
            n (int): Number of reflections (cylinder, flat torus) or y frequency (cube)
            m (int): Height frequency
            phase (Fraction|str, optional): Height phase in [0, 1), defaults to 0
            beta (float, optional): Slice angle of the cylinder, defaults to 2*pi
        """
        self.__geometry = geometry if isinstance(geometry, Geometry) else Geometry(geometry)
        self.__s = int(s)
        self.__n = int(n)
        self.__m = int(m)
        self.__phase = RationalUtil.parse(phase) if phase is not None else Fraction(0)
        self.__beta = float(beta) if beta is not None else config.BETA_MAX

    # Accessor methods
    @property
    def geometry(self) -> Geometry:
        """Get billiard table

        Returns:
            Geometry: Billiard table
        """
        return self.__geometry

    @property
    def s(self) -> int:
        return self.__s

    @property
    def n(self) -> int:
        return self.__n

    @property
    def m(self) -> int:
        return self.__m

    @property
    def phase(self) -> Fraction:
        """Get height phase

        Returns:
            Fraction: Phase in [0, 1)
        """
        return self.__phase

    @property
    def beta(self) -> float:
        """Get slice angle (cylinder only)

        Returns:
            float: Slice angle, 0 for the stable limit
        """
        return self.__beta

    @property
    def is_stable_limit(self) -> bool:
        return self.__geometry == Geometry.CYLINDER and self.__beta == 0.0

    @property
    def is_classical(self) -> bool:
        """Whether this is a cylinder knot in the full cylinder (beta = 2*pi)"""
        return (self.__geometry == Geometry.CYLINDER
                and abs(self.__beta - config.BETA_MAX) <= config.BETA_TOLERANCE)

    def validate(self):
        """Check the parameter constraints of the geometry

        Returns:
            BilliardParams: self, for chaining

        Raises:
            InvalidParametersError: If a constraint is violated
        """
        s, n, m = self.__s, self.__n, self.__m
        if s < 1 or n < 1 or m < 1:
            raise InvalidParametersError(f"{self}: s, n and m must be positive")
        if math.gcd(s, n) != 1:
            raise InvalidParametersError(f"{self}: s and n must be coprime")
        if not 0 <= self.__phase < 1:
            raise InvalidParametersError(f"{self}: phase must lie in [0, 1)")

        if self.__geometry == Geometry.FLAT_TORUS:
            if math.gcd(s, m) != 1:
                raise InvalidParametersError(f"{self}: s and m must be coprime in the flat torus")
        elif self.__geometry == Geometry.CUBE:
            if n % 2 == 0:
                raise InvalidParametersError(f"{self}: the y frequency n must be odd")
        elif not self.is_stable_limit:
            if not 0 < self.__beta <= config.BETA_MAX + config.BETA_TOLERANCE:
                raise InvalidParametersError(f"{self}: beta must lie in ]0, 2*pi]")
            # Each chord must subtend less than a half turn; at beta = 2*pi this is n >= 2s + 1
            if s * self.__beta / n >= math.pi - config.BETA_TOLERANCE:
                if self.is_classical:
                    raise InvalidParametersError(f"{self}: a cylinder knot needs n >= 2s + 1")
                raise InvalidParametersError(f"{self}: the slice is too wide for {n} reflections")
        return self

    def with_phase(self, phase):
        """Copy of these parameters with another phase"""
        return BilliardParams(self.__geometry, self.__s, self.__n, self.__m, phase, self.__beta)

    def key(self) -> tuple:
        """Identity of the knot these parameters describe (the phase is not part of it)"""
        return (self.__geometry.value, self.__s, self.__n, self.__m, round(self.__beta, 12))

    def to_dict(self) -> dict:
        """Convert to dictionary

        Returns:
            dict: Dictionary with JSON-compatible values
        """
        return {
            'geometry': self.__geometry.value,
            's': self.__s,
            'n': self.__n,
            'm': self.__m,
            'phase': RationalUtil.format(self.__phase),
            'beta': self.__beta,
        }

    @classmethod
    def from_dict(cls, data: dict):
        """Create parameters from dictionary

        Args:
            data (dict): Dictionary as produced by to_dict

        Returns:
            BilliardParams: Parameters
        """
        return cls(
            geometry=data.get('geometry'),
            s=data.get('s'),
            n=data.get('n'),
            m=data.get('m'),
            phase=data.get('phase'),
            beta=data.get('beta'),
        )

    def __eq__(self, other):
        if not isinstance(other, BilliardParams):
            return NotImplemented
        return self.key() == other.key() and self.__phase == other.phase

    def __hash__(self):
        return hash((self.key(), self.__phase))

    def __str__(self) -> str:
        letter = _FAMILY_LETTERS[self.__geometry]
        name = f"{letter}({self.__s},{self.__n},{self.__m})"
        if self.is_stable_limit:
            return f"{letter}^st({self.__s},{self.__n},{self.__m})"
        if self.__geometry == Geometry.CYLINDER and not self.is_classical:
            return f"{name}[beta={self.__beta:.6g}]"
        return name

    def __repr__(self) -> str:
        return f"BilliardParams({self}, phase={RationalUtil.format(self.__phase)})"
