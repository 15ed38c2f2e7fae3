#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Deformation service class, follows the crossings of a cylinder knot while
the slice angle beta shrinks from 2*pi to 0
"""

import logging
import math
from fractions import Fraction
from typing import List, Tuple

import numpy as np

from src import config
from src.entities.billiard_params import BilliardParams, Geometry
from src.entities.crossing import Crossing
from src.entities.deformation_profile import DeformationProfile, StabilityClass
from src.entities.knot_diagram import KnotDiagram
from src.exceptions import InvalidParametersError, LimitSingularError, NoValidPhaseError
from src.services.diagram_service import DiagramService
from src.services.trajectory_service import TrajectoryService

logger = logging.getLogger(__name__)


class DeformationService:
    """Deformation service class

    The combinatorics (k, k', l) of a crossing do not change with beta; only
    the offset x_l(beta) moves. Writing D(beta) = (k - k' + 2 x_l(beta)) / 2n
    for t - t', the normalized sign of a crossing is
    delta(beta) = sign(sin(pi m D(beta))) * sign(sin(pi m D(2 pi))), which
    does not depend on the phase.
    """

    def __init__(self):
        """Initialize deformation service"""
        self.__diagram_service = DiagramService()
        self.__trajectory = TrajectoryService()

    # ------------------------------------------------------------------
    # Crossing motion
    # ------------------------------------------------------------------

    def x_l(self, beta, l: int, s: int, n: int):
        """Offset tan(l beta / 2n) / tan(s beta / 2n), vectorized over beta

        Args:
            beta (float|np.ndarray): Slice angle(s) in ]0, 2*pi]
            l (int): Layer
            s (int): Windings
            n (int): Reflections

        Returns:
            float|np.ndarray: Offset(s)

        Raises:
            InvalidParametersError: If beta leaves ]0, 2*pi] or hits a pole
        """
        values = np.asarray(beta, dtype=float)
        if np.any(values <= 0) or np.any(values > config.BETA_MAX + config.BETA_TOLERANCE):
            raise InvalidParametersError("beta must lie in ]0, 2*pi]")
        for frequency in (s, l):
            if np.any(np.abs(np.cos(frequency * values / (2 * n))) < config.SIGN_TOLERANCE):
                raise InvalidParametersError(f"x_l has a pole for s={s}, n={n}, l={l}")
        return self.__trajectory.layer_offset(beta, l, s, n)

    @staticmethod
    def x_l_limit(l: int, s: int) -> Fraction:
        """Value of x_l at beta -> 0"""
        return Fraction(l, s)

    def crossing_parameters(self, crossing: Crossing, beta, s: int, n: int):
        """Parameters (t, t') of a crossing at slice angle beta

        A beta of 0 gives the exact limit (k + l/s) / 2n, (k' - l/s) / 2n.
        """
        k, k_prime = crossing.k, crossing.k_prime
        if beta == 0:
            x = self.x_l_limit(crossing.l, s)
            return (k + x) / (2 * n), (k_prime - x) / (2 * n)
        x = self.x_l(beta, crossing.l, s, n)
        return (k + x) / (2 * n), (k_prime - x) / (2 * n)

    def parameter_difference(self, crossing: Crossing, beta, s: int, n: int):
        """D(beta) = t - t' = (k - k' + 2 x_l(beta)) / 2n, vectorized over beta"""
        return (crossing.k - crossing.k_prime + 2 * self.x_l(beta, crossing.l, s, n)) / (2 * n)

    def limit_difference(self, crossing: Crossing, s: int, n: int) -> Fraction:
        """Exact D(0+) = (k - k' + 2 l / s) / 2n"""
        return Fraction(crossing.k - crossing.k_prime, 2 * n) + Fraction(crossing.l, s * n)

    def heights(self, crossing: Crossing, beta, phase, s: int, n: int, m: int):
        """Height difference Delta(beta) = g(m t + phase) - g(m t' + phase), vectorized

        m k / 2n is reduced modulo 1 in integers first, so crossings related by
        a period get bit-identical values.
        """
        x = self.x_l(beta, crossing.l, s, n)
        phase = float(phase)
        top = (m * crossing.k) % (2 * n) / (2 * n) + m * x / (2 * n) + phase
        bottom = (m * crossing.k_prime) % (2 * n) / (2 * n) - m * x / (2 * n) + phase
        return self.__trajectory.sawtooth(top) - self.__trajectory.sawtooth(bottom)

    def limit_height(self, crossing: Crossing, phase, s: int, n: int, m: int) -> Fraction:
        """Exact Delta at beta -> 0"""
        t, t_prime = self.crossing_parameters(crossing, 0, s, n)
        return (self.__trajectory.sawtooth(m * t + phase)
                - self.__trajectory.sawtooth(m * t_prime + phase))

    def delta(self, crossing: Crossing, beta, phase, s: int, n: int, m: int):
        """Height difference at beta for a given phase; alias of heights for a single crossing"""
        return self.heights(crossing, beta, phase, s, n, m)

    @staticmethod
    def _sine_sign(values) -> np.ndarray:
        signs = np.sign(np.sin(np.pi * np.asarray(values, dtype=float)))
        signs[np.abs(np.sin(np.pi * np.asarray(values, dtype=float))) < config.SIGN_TOLERANCE] = 0
        return signs.astype(int)

    def delta_normalized(self, crossing: Crossing, beta, s: int, n: int, m: int):
        """Normalized sign sign(Delta(beta)) / sign(Delta(2 pi)), phase free

        Returns:
            int|np.ndarray: +1, -1, or 0 where Delta vanishes
        """
        scalar = np.ndim(beta) == 0
        betas = np.atleast_1d(np.asarray(beta, dtype=float))
        now = self._sine_sign(m * self.parameter_difference(crossing, betas, s, n))
        start = self._sine_sign([m * self.parameter_difference(crossing, config.BETA_MAX, s, n)])[0]
        result = now * start
        return int(result[0]) if scalar else result

    def limit_sign(self, crossing: Crossing, s: int, n: int, m: int) -> int:
        """One-sided limit of delta as beta -> 0+

        D(beta) increases to D(0+) as beta decreases. When m D(0+) is an
        integer j the sine approaches 0 from the side of sign (-1)^(j+1).
        """
        q = m * self.limit_difference(crossing, s, n)
        if q.denominator == 1:
            near_zero = 1 if q.numerator % 2 == 1 else -1
        else:
            near_zero = 1 if math.floor(q) % 2 == 0 else -1
        start = self._sine_sign([m * self.parameter_difference(crossing, config.BETA_MAX, s, n)])[0]
        return near_zero * int(start)

    def limit_vanishes(self, crossing: Crossing, s: int, n: int, m: int) -> bool:
        """Whether Delta(beta) -> 0 for every phase, i.e. m D(0+) is an integer"""
        return (m * self.limit_difference(crossing, s, n)).denominator == 1

    def sign_changes(self, crossing: Crossing, s: int, n: int, m: int) -> int:
        """Exact number of sign changes of delta on ]0, 2*pi]

        Counts the integers strictly between m D(2 pi) and m D(0+).
        """
        start = m * self.parameter_difference(crossing, config.BETA_MAX, s, n)
        end = m * self.limit_difference(crossing, s, n)
        return max(0, math.ceil(end) - 1 - math.floor(start))

    # ------------------------------------------------------------------
    # Classification
    # ------------------------------------------------------------------

    @staticmethod
    def beta_grid(grid_size: int = config.DEFAULT_GRID_SIZE) -> np.ndarray:
        """Ascending logarithmic grid from BETA_MIN to 2*pi"""
        if grid_size < 2:
            raise InvalidParametersError(f"grid needs at least 2 points, got {grid_size}")
        grid = np.geomspace(config.BETA_MIN, config.BETA_MAX, grid_size)
        grid[-1] = config.BETA_MAX
        return grid

    @staticmethod
    def distinct_curve_columns(values: np.ndarray, tolerance: float = config.CURVE_TOLERANCE) -> List[int]:
        """First column of every group of columns that agree within tolerance everywhere"""
        values = np.asarray(values, dtype=float)
        representatives = []
        for index, column in enumerate(values.T):
            if not any(np.max(np.abs(column - values[:, rep])) <= tolerance for rep in representatives):
                representatives.append(index)
        return representatives

    @classmethod
    def count_distinct_curves(cls, values: np.ndarray, tolerance: float = config.CURVE_TOLERANCE) -> int:
        """Number of columns that differ by more than tolerance somewhere"""
        return len(cls.distinct_curve_columns(values, tolerance))

    def enlacement(self, diagram: KnotDiagram) -> str:
        """Enlacement flag of a 4-winding diagram from its layer writhes

        positive when v1 = v3, negative when v1 = -v3 != 0, undetermined otherwise.
        """
        writhes = self.__diagram_service.layer_writhe(diagram)
        v1, v3 = writhes.get(1, 0), writhes.get(3, 0)
        if v1 == v3:
            return config.ENLACEMENT["POSITIVE"]
        if v1 == -v3:
            return config.ENLACEMENT["NEGATIVE"]
        return config.ENLACEMENT["UNDETERMINED"]

    def classify_stability(self, s: int, n: int, m: int,
                           grid_size: int = config.DEFAULT_GRID_SIZE) -> DeformationProfile:
        """Stability class of Z(s, n, m) under beta -> 0

        The class comes from the exact limits and sign-change counts. The grid
        gives the plotted curves and is cross-checked against the exact count.

        Args:
            s (int): Windings
            n (int): Reflections
            m (int): Height frequency
            grid_size (int, optional): Number of beta samples

        Returns:
            DeformationProfile: Profile with classification

        Raises:
            InvalidParametersError: If Z(s, n, m) is not a cylinder knot
            NoValidPhaseError: If no phase resolves the diagram at 2*pi
        """
        params = BilliardParams(Geometry.CYLINDER, s, n, m).validate()
        crossings = self.__diagram_service.enumerate_crossings(params)
        phase = self.__diagram_service.choose_phase(params, crossings)
        params = params.with_phase(phase)
        betas = self.beta_grid(grid_size)

        count = len(crossings)
        values = np.zeros((len(betas), count))
        grid_signs = np.zeros((len(betas), count), dtype=int)
        limit_values, limit_signs, vanishing, changes = [], [], [], []
        for i, c in enumerate(crossings):
            column = self.heights(c, betas, phase, s, n, m)
            reference = np.sign(column[-1])
            values[:, i] = reference * column
            grid_signs[:, i] = self.delta_normalized(c, betas, s, n, m)
            limit_values.append(float(reference * self.limit_height(c, phase, s, n, m)))
            limit_signs.append(self.limit_sign(c, s, n, m))
            vanishing.append(self.limit_vanishes(c, s, n, m))
            changes.append(self.sign_changes(c, s, n, m))

        strongly = all(v == 0 for v in changes) and all(v == 1 for v in limit_signs)
        if count and strongly != bool(np.all(grid_signs > 0)):
            logger.warning("Z(%d,%d,%d): grid of %d points disagrees with the exact sign-change count",
                           s, n, m, len(betas))
        if strongly:
            classification = StabilityClass.STRONGLY_POSITIVE_STABLE
        elif all(v == 1 for v in limit_signs):
            classification = StabilityClass.POSITIVELY_STABLE
        elif all(v == -1 for v in limit_signs):
            classification = StabilityClass.NEGATIVELY_STABLE
        else:
            classification = StabilityClass.NOT_STABLE

        enlacement, writhes = None, None
        if s == 4:
            diagram = self.__diagram_service.resolve_diagram(params, crossings, phase)
            writhes = self.__diagram_service.layer_writhe(diagram)
            enlacement = self.enlacement(diagram)

        profile = DeformationProfile(params, betas, values, limit_values, limit_signs, vanishing, changes,
                                     classification, self.count_distinct_curves(values), enlacement, writhes)
        logger.info("%s", profile)
        return profile

    def deformation_graph(self, s: int, n: int, m: int,
                          grid_size: int = config.DEFAULT_GRID_SIZE) -> Tuple[List[str], List[List[str]], int]:
        """Table of normalized height differences, beta descending, limit row last

        Returns:
            tuple: (header, rows, distinct curve count)
        """
        profile = self.classify_stability(s, n, m, grid_size)
        header, rows = profile.csv_rows()
        return header, rows, profile.distinct_curves

    # ------------------------------------------------------------------
    # The beta -> 0 limit
    # ------------------------------------------------------------------

    def build_stable_diagram(self, s: int, n: int, m: int, phase=None) -> KnotDiagram:
        """Diagram of the stable knot Z^st(s, n, m), the beta -> 0 limit

        Args:
            s (int): Windings
            n (int): Reflections, n >= 2s + 1 is not required
            m (int): Height frequency
            phase (Fraction, optional): Phase, chosen automatically when omitted

        Returns:
            KnotDiagram: Limit diagram

        Raises:
            LimitSingularError: If some crossing is singular for every phase
        """
        params = BilliardParams(Geometry.CYLINDER, s, n, m, beta=0.0).validate()
        crossings = self.__diagram_service.enumerate_crossings(params)
        try:
            if phase is None:
                phase = self.__diagram_service.choose_phase(params, crossings)
            else:
                self.__diagram_service.singular_phases(params, crossings)
        except NoValidPhaseError as e:
            raise LimitSingularError(f"{params}: the limit diagram is singular for every phase") from e
        return self.__diagram_service.resolve_diagram(params, crossings, phase)
