#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Invariant service class, computes determinants and Alexander polynomials
"""

import logging
import math
from typing import Any, Dict, List, Optional, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.rings import ring

from src import config
from src.entities.invariant_report import InvariantReport
from src.entities.knot_diagram import KnotDiagram
from src.entities.laurent_polynomial import LaurentPolynomial
from src.exceptions import InvalidParametersError, SymmetryError
from src.utils.elimination import fraction_free_determinant

logger = logging.getLogger(__name__)

# Z[t], the ring the Alexander matrix lives in
_RING, _T = ring("t", ZZ)


class InvariantService:
    """Invariant service class

    The Alexander matrix has one row per crossing (a Fox derivative of the
    Wirtinger relation) and one column per arc, where arcs break at
    undercrossings. Deleting the last row and column leaves a minor whose
    determinant is the Alexander polynomial up to a unit.
    """

    @staticmethod
    def arcs(diagram: KnotDiagram) -> Tuple[Dict[int, int], Dict[int, int], Dict[int, int]]:
        """Arc numbers around each crossing

        Args:
            diagram (KnotDiagram): Knot diagram

        Returns:
            tuple: (over arc, incoming under arc, outgoing under arc), each keyed by crossing index
        """
        events = diagram.gauss_code
        count = diagram.crossing_count
        over_arc, incoming, outgoing = {}, {}, {}
        if count == 0:
            return over_arc, incoming, outgoing
        first_under = next(i for i, e in enumerate(events) if e < 0)
        rotated = events[first_under + 1:] + events[:first_under + 1]
        arc = 0
        for event in rotated:
            if event > 0:
                over_arc[event] = arc
            else:
                incoming[-event] = arc
                arc = (arc + 1) % count
                outgoing[-event] = arc
        return over_arc, incoming, outgoing

    def alexander_matrix(self, diagram: KnotDiagram, variable: Any = _T, one: Any = _RING.one,
                         zero: Any = _RING.zero) -> List[Dict[int, Any]]:
        """Sparse Alexander matrix

        Row of a crossing: 1 - t at the over arc; at a positive crossing t at
        the incoming and -1 at the outgoing under arc, swapped at a negative
        one.

        Args:
            diagram (KnotDiagram): Knot diagram
            variable (optional): Value of t, the ring generator by default
            one (optional): Ring one
            zero (optional): Ring zero

        Returns:
            list: One dict column -> entry per crossing, in index order
        """
        over_arc, incoming, outgoing = self.arcs(diagram)
        rows = []
        for c in diagram.crossings:
            row = {}
            if c.sign > 0:
                entries = ((over_arc[c.index], one - variable), (incoming[c.index], variable),
                           (outgoing[c.index], -one))
            else:
                entries = ((over_arc[c.index], one - variable), (incoming[c.index], -one),
                           (outgoing[c.index], variable))
            for column, value in entries:
                row[column] = row.get(column, zero) + value
            rows.append({col: v for col, v in row.items() if v != zero})
        return rows

    @staticmethod
    def _minor(rows: List[Dict[int, Any]]) -> List[Dict[int, Any]]:
        last = len(rows) - 1
        return [{col: v for col, v in row.items() if col != last} for row in rows[:-1]]

    def alexander_polynomial(self, diagram: KnotDiagram) -> LaurentPolynomial:
        """Normalized Alexander polynomial

        Args:
            diagram (KnotDiagram): Knot diagram

        Returns:
            LaurentPolynomial: Polynomial with lowest exponent 0 and positive leading coefficient
        """
        count = diagram.crossing_count
        if count <= 1:
            return LaurentPolynomial({0: 1})
        minor = self._minor(self.alexander_matrix(diagram))
        value = fraction_free_determinant(
            minor, count - 1, zero=_RING.zero, one=_RING.one,
            exact_quotient=lambda a, b: a.exquo(b),
            weight=lambda p: (p.degree(), len(p.terms())))
        if value == _RING.zero:
            raise SymmetryError(f"{diagram}: the Alexander minor vanishes")
        return LaurentPolynomial.from_ring_element(value).normalized()

    def determinant(self, diagram: KnotDiagram) -> int:
        """Knot determinant |Delta(-1)|, computed over the integers

        Args:
            diagram (KnotDiagram): Knot diagram

        Returns:
            int: Determinant
        """
        count = diagram.crossing_count
        if count <= 1:
            return 1
        minor = self._minor(self.alexander_matrix(diagram, variable=-1, one=1, zero=0))
        return abs(fraction_free_determinant(minor, count - 1))

    @staticmethod
    def perfect_square_root(k: int) -> Optional[int]:
        """Integer r with r^2 = k, None when k is not a perfect square

        Raises:
            InvalidParametersError: If k is negative
        """
        if k < 0:
            raise InvalidParametersError(f"{k} is negative")
        root = math.isqrt(k)
        return root if root * root == k else None

    def invariants(self, diagram: KnotDiagram) -> InvariantReport:
        """Determinant and Alexander polynomial of a diagram

        Raises:
            SymmetryError: If the two computations disagree
        """
        alexander = self.alexander_polynomial(diagram)
        determinant = self.determinant(diagram)
        if abs(alexander.evaluate(-1)) != determinant:
            raise SymmetryError(
                f"{diagram}: |Delta(-1)| = {abs(alexander.evaluate(-1))} but det = {determinant}")
        report = InvariantReport(determinant, alexander)
        logger.info("%s: %s", diagram, report)
        return report

    def compare(self, first: KnotDiagram, second: KnotDiagram) -> Tuple[str, InvariantReport, InvariantReport]:
        """Compare two knots by their invariants

        Equal invariants do not prove the knots equal; different ones prove them different.

        Returns:
            tuple: (verdict, report of first, report of second)
        """
        a, b = self.invariants(first), self.invariants(second)
        if a.determinant != b.determinant:
            verdict = config.COMPARISON_DET
        elif a.alexander != b.alexander:
            verdict = config.COMPARISON_ALEXANDER
        else:
            verdict = config.COMPARISON_AGREE
        return verdict, a, b
