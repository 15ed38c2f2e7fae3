#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Trajectory service class, evaluates billiard curves in the three tables
"""

import logging
import math
from fractions import Fraction
from typing import Tuple

import numpy as np

from src import config
from src.entities.billiard_params import BilliardParams, Geometry, Point3
from src.exceptions import InvalidParametersError

logger = logging.getLogger(__name__)


class TrajectoryService:
    """Trajectory service class

    Curves are parametrized by t in [0, 1) at constant speed of the
    projection. Every coordinate is a sawtooth g(t) = 2|t - floor(t) - 1/2|,
    the unfolding of a bounce between two walls.
    """

    @staticmethod
    def sawtooth(t):
        """Sawtooth g(t) = 2 |t - floor(t) - 1/2|

        Exact for Fraction and int input, vectorized for numpy arrays.

        Args:
            t (Fraction|int|float|np.ndarray): Argument

        Returns:
            Value in [0, 1], same kind as the input
        """
        if isinstance(t, (Fraction, int)):
            return 2 * abs(Fraction(t) - math.floor(t) - Fraction(1, 2))
        if isinstance(t, np.ndarray):
            return 2.0 * np.abs(t - np.floor(t) - 0.5)
        return 2.0 * abs(t - math.floor(t) - 0.5)

    @staticmethod
    def sawtooth_slope(t) -> int:
        """Derivative of the sawtooth away from its corners, +2 or -2"""
        return 2 if t - math.floor(t) > Fraction(1, 2) else -2

    @staticmethod
    def chord_angle(s: int, n: int, beta: float) -> float:
        """Angle s*beta/n between consecutive reflection points of a cylinder knot"""
        return s * beta / n

    @staticmethod
    def layer_offset(beta, l: int, s: int, n: int):
        """Offset x_l(beta) = tan(l*beta/2n) / tan(s*beta/2n) of a crossing from its chord's midpoint

        Measured in half chord lengths. Vectorized over beta.

        Args:
            beta (float|np.ndarray): Slice angle(s)
            l (int): Layer
            s (int): Windings
            n (int): Reflections

        Returns:
            float|np.ndarray: Offset(s)
        """
        half = np.asarray(beta, dtype=float) / (2 * n)
        offset = np.tan(l * half) / np.tan(s * half)
        return float(offset) if offset.ndim == 0 else offset

    @staticmethod
    def star_polygon_vertices(s: int, n: int, beta: float = config.BETA_MAX) -> np.ndarray:
        """Reflection points of the projection in the development of the slice

        Vertex j sits on the unit circle at unrolled angle j*s*beta/n. The
        polygon closes after n vertices: vertex n would be vertex 0 again.

        Args:
            s (int): Windings
            n (int): Reflections
            beta (float, optional): Slice angle in ]0, 2*pi]

        Returns:
            np.ndarray: Shape (n, 2), vertices 0..n-1 in traversal order

        Raises:
            InvalidParametersError: If beta leaves ]0, 2*pi] or gcd(s, n) != 1
        """
        if not 0 < beta <= config.BETA_MAX + config.BETA_TOLERANCE:
            raise InvalidParametersError(f"beta must lie in ]0, 2*pi], got {beta}")
        if s < 1 or n < 1 or math.gcd(s, n) != 1:
            raise InvalidParametersError(f"s={s} and n={n} must be positive and coprime")
        angles = np.arange(n) * TrajectoryService.chord_angle(s, n, beta)
        return np.column_stack((np.cos(angles), np.sin(angles)))

    @staticmethod
    def chord_point(s: int, n: int, beta: float, t: float) -> Tuple[float, float]:
        """Point of the cylinder projection at parameter t, in development coordinates

        Returns:
            tuple: (unrolled angle, radius)
        """
        theta = TrajectoryService.chord_angle(s, n, beta)
        position = (float(t) % 1.0) * n
        a = math.floor(position)
        u = position - a
        # Chord a has its tangent point at half the chord angle
        half = theta / 2
        offset = math.atan((2 * u - 1) * math.tan(half))
        radius = math.cos(half) / math.cos(offset)
        return a * theta + half + offset, radius

    def curve_point(self, params: BilliardParams, t) -> Point3:
        """Point of a billiard curve

        Cylinder points are returned as (angle / beta, radius, height), flat
        torus points as (x, y, z) in the unit cube with x periodic.

        Args:
            params (BilliardParams): Curve parameters
            t (Fraction|float): Curve parameter

        Returns:
            Point3: Curve point
        """
        s, n, m, phase = params.s, params.n, params.m, params.phase
        if params.geometry == Geometry.CUBE:
            return Point3(float(self.sawtooth(s * t + Fraction(1, 4))),
                          float(self.sawtooth(n * t)),
                          float(self.sawtooth(m * t + phase)))
        if params.geometry == Geometry.FLAT_TORUS:
            return Point3(float((s * t) % 1), float(self.sawtooth(n * t)),
                          float(self.sawtooth(m * t + phase)))
        if params.is_stable_limit:
            raise InvalidParametersError(f"{params}: the stable limit has no curve")
        angle, radius = self.chord_point(s, n, params.beta, t)
        return Point3((angle % params.beta) / params.beta, radius,
                      float(self.sawtooth(m * t + phase)))

    def projected_direction(self, params: BilliardParams, t) -> Tuple[int, int]:
        """Direction of the projection at parameter t, up to a positive factor

        Flat torus directions are given in the chart (y, x), which has the
        orientation of polar coordinates (radius, angle). Cube directions are
        given in (x, y).

        Args:
            params (BilliardParams): Flat torus or cube parameters
            t (Fraction): A parameter that is not a corner of the projection

        Returns:
            tuple: Direction vector
        """
        s, n = params.s, params.n
        if params.geometry == Geometry.CUBE:
            return (s * self.sawtooth_slope(s * t + Fraction(1, 4)),
                    n * self.sawtooth_slope(n * t))
        if params.geometry == Geometry.FLAT_TORUS:
            return (n * self.sawtooth_slope(n * t), s)
        raise InvalidParametersError(f"{params}: cylinder directions depend on the chord, not on t")

    def height(self, params: BilliardParams, t, phase=None):
        """Height g(m t + phase), exact for exact input"""
        phase = params.phase if phase is None else phase
        if isinstance(t, (Fraction, int)):
            return self.sawtooth(params.m * Fraction(t) + phase)
        return self.sawtooth(params.m * t + float(phase))

    def sample(self, params: BilliardParams, samples: int = 1000) -> np.ndarray:
        """Points of the curve on a regular parameter grid

        Args:
            params (BilliardParams): Curve parameters
            samples (int, optional): Number of points

        Returns:
            np.ndarray: Shape (samples, 3)
        """
        params.validate()
        return np.array([tuple(self.curve_point(params, i / samples)) for i in range(samples)])
