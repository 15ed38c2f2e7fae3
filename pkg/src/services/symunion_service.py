#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Symmetric union service class, decomposes mirror symmetric billiard diagrams
"""

import bisect
import logging
import math
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from src.entities.billiard_params import BilliardParams, Geometry
from src.entities.crossing import Crossing
from src.entities.knot_diagram import KnotDiagram
from src.entities.symmetric_union import SymmetricUnionDecomposition
from src.exceptions import InvalidParametersError, SymmetryError
from src.services.diagram_service import DiagramService
from src.services.invariant_service import InvariantService
from src.services.trajectory_service import TrajectoryService

logger = logging.getLogger(__name__)

_HALF = Fraction(1, 2)


class SymmetricUnionService:
    """Symmetric union service class

    Both families are symmetric under t -> -t, which reflects the projection
    in an axis. The curve meets the axis at finitely many passages; passage
    p and passage -p form an axis crossing, except for the two passages
    t = 0 and t = 1/2 that are fixed. With the phase close to 0 every other
    crossing has a mirror partner of opposite sign.
    """

    def __init__(self):
        """Initialize symmetric union service"""
        self.__diagram_service = DiagramService()
        self.__invariant_service = InvariantService()
        self.__trajectory = TrajectoryService()

    def decompose_R(self, s: int, n: int, m: int) -> SymmetricUnionDecomposition:
        """Decompose the Lissajous knot R(s, n, m) of the cube

        The axis is x = 1/2, met at t = j / 2s.

        Args:
            s (int): x frequency
            n (int): y frequency, odd
            m (int): Height frequency

        Returns:
            SymmetricUnionDecomposition: Decomposition

        Raises:
            InvalidParametersError: If the frequencies are not pairwise coprime or n is even
            SymmetryError: If the diagram is not a symmetric union diagram
        """
        params = BilliardParams(Geometry.CUBE, s, n, m).validate()
        if math.gcd(s, m) != 1 or math.gcd(n, m) != 1:
            raise InvalidParametersError(f"{params}: frequencies must be pairwise coprime")
        passages = [Fraction(j, 2 * s) for j in range(2 * s)]

        def is_left(t):
            return self.__trajectory.sawtooth(s * t + Fraction(1, 4)) < _HALF

        return self._decompose("R", params, passages, is_left, experimental=False)

    def decompose_T(self, two_s: int, n: int, m: int) -> SymmetricUnionDecomposition:
        """Decompose the flat torus knot T(2s, n, m)

        The axis is the diameter x in {0, 1/2}, met at t = j / 4s. When
        d = gcd(n, m) > 1 the knot has cyclic period d and its own diagram
        is not a symmetric union diagram at small phase; the factor knot
        T(2s, n/d, m/d) is decomposed instead and flagged experimental.

        Args:
            two_s (int): Even number of windings
            n (int): Reflections, coprime to two_s
            m (int): Height frequency, coprime to two_s

        Returns:
            SymmetricUnionDecomposition: Decomposition, flagged experimental when gcd(n, m) > 1
        """
        if two_s % 2 != 0:
            raise InvalidParametersError(f"T({two_s},{n},{m}): the number of windings must be even")
        params = BilliardParams(Geometry.FLAT_TORUS, two_s, n, m).validate()
        d = math.gcd(n, m)
        experimental = d != 1
        if experimental:
            params = BilliardParams(Geometry.FLAT_TORUS, two_s, n // d, m // d).validate()
            logger.warning("T(%d,%d,%d) has period %d, decomposing the factor knot %s instead",
                           two_s, n, m, d, params)
        passages = [Fraction(j, 2 * two_s) for j in range(2 * two_s)]

        def is_left(t):
            return (two_s * t) % 1 < _HALF

        return self._decompose("T", params, passages, is_left, experimental)

    def _decompose(self, family: str, params: BilliardParams, passages: List[Fraction],
                   is_left: Callable[[Fraction], bool], experimental: bool) -> SymmetricUnionDecomposition:
        crossings = self.__diagram_service.enumerate_crossings(params)
        phase = self.__diagram_service.choose_small_phase(params, crossings)
        diagram = self.__diagram_service.resolve_diagram(params, crossings, phase)

        def mirror(t):
            return (-t) % 1

        arcs = self._arcs(passages, is_left)
        by_params = {frozenset((c.t, c.t_prime)): c for c in diagram.crossings}

        axis = set()
        for p in passages:
            if mirror(p) == p:
                continue
            c = by_params.get(frozenset((p, mirror(p))))
            if c is None:
                raise SymmetryError(f"{params}: axis passages {p} and {mirror(p)} do not cross")
            axis.add(c.index)

        at_zero = {c.index for c in crossings if self.__diagram_service.height_difference(params, c, 0) == 0}
        if at_zero != axis:
            raise SymmetryError(f"{params}: crossings singular at phase 0 are not exactly the axis crossings")

        pairs = {}
        for c in diagram.crossings:
            if c.index in axis:
                continue
            image = by_params.get(frozenset((mirror(c.t), mirror(c.t_prime))))
            if image is None or image.index == c.index:
                raise SymmetryError(f"{params}: crossing {c.index} has no mirror partner")
            if image.sign != -c.sign:
                raise SymmetryError(f"{params}: crossing {c.index} and its mirror have the same sign")
            pairs[c.index] = image.index

        partial = self._partial(params, diagram, passages, arcs, axis, mirror)
        logger.info("%s: %d axis crossings, partial knot with %d crossings",
                    params, len(axis), partial.crossing_count)
        return SymmetricUnionDecomposition(family, diagram, sorted(axis), pairs, partial, experimental)

    @staticmethod
    def _arcs(passages: List[Fraction], is_left) -> List[Tuple[Fraction, Fraction, bool]]:
        """Curve pieces between consecutive axis passages and the side they run on"""
        arcs = []
        for i, start in enumerate(passages):
            end = passages[i + 1] if i + 1 < len(passages) else Fraction(1)
            arcs.append((start, end, is_left((start + end) / 2)))
        for i in range(len(arcs)):
            if arcs[i][2] == arcs[i - 1][2]:
                raise SymmetryError("consecutive arcs lie on the same side of the axis")
        return arcs

    def _partial(self, params, diagram: KnotDiagram, passages, arcs, axis, mirror) -> KnotDiagram:
        """Walk the left arcs, jumping across every smoothed axis crossing

        Starts at passage t = 0 and stops at the other fixed passage; the
        partial knot closes along the axis.
        """
        index_of = {p: i for i, p in enumerate(passages)}
        left_count = sum(1 for arc in arcs if arc[2])

        def left_arc_at(passage):
            i = index_of[passage]
            return (i, 1) if arcs[i][2] else ((i - 1) % len(arcs), -1)

        walk = []
        arc_index, direction = left_arc_at(Fraction(0))
        while True:
            walk.append((arc_index, direction))
            start, end, _ = arcs[arc_index]
            reached = end % 1 if direction > 0 else start
            if mirror(reached) == reached:
                break
            arc_index, direction = left_arc_at(mirror(reached))
            if len(walk) > len(arcs):
                raise SymmetryError(f"{params}: walk along the left arcs does not terminate")
        if len(walk) != left_count:
            raise SymmetryError(f"{params}: the partial knot would have more than one component")

        # Strand passages of off-axis crossings, per arc
        strands = []
        for c in diagram.crossings:
            if c.index in axis:
                continue
            for t in (c.t, c.t_prime):
                strands.append((t, c))
        strands.sort(key=lambda x: x[0])
        keys = [t for t, _ in strands]

        events = []
        for arc_index, direction in walk:
            start, end, _ = arcs[arc_index]
            lo, hi = bisect.bisect_right(keys, start), bisect.bisect_left(keys, end)
            on_arc = strands[lo:hi] if direction > 0 else strands[lo:hi][::-1]
            events.extend((t, c, direction) for t, c in on_arc)

        total = len(events)
        seen: Dict[int, List[Tuple[int, Fraction, int]]] = {}
        for position, (t, c, direction) in enumerate(events):
            seen.setdefault(c.index, []).append((position, t, direction))

        partial_crossings = []
        for original, visits in seen.items():
            if len(visits) != 2:
                raise SymmetryError(f"{params}: crossing {original} is not a left-left crossing")
            c = diagram.crossing(original)
            (p1, t1, d1), (p2, t2, d2) = visits
            over_first = t1 == c.over_param
            dir_over, dir_under = (d1, d2) if over_first else (d2, d1)
            partial_crossings.append((p1, Crossing(t=Fraction(p1, total), t_prime=Fraction(p2, total),
                                                   sign=c.sign * dir_over * dir_under,
                                                   over_first=over_first)))
        partial_crossings.sort(key=lambda x: x[0])
        numbered = [c.with_index(i + 1) for i, (_, c) in enumerate(partial_crossings)]
        return self.__diagram_service.assemble(None, numbered)

    def verify_determinant_square(self, decomposition: SymmetricUnionDecomposition) -> Tuple[int, int, bool]:
        """Check det(diagram) = det(partial)^2

        Returns:
            tuple: (det of the knot, det of the partial knot, whether the identity holds)
        """
        whole = self.__invariant_service.determinant(decomposition.diagram)
        part = self.__invariant_service.determinant(decomposition.partial)
        return whole, part, whole == part * part
