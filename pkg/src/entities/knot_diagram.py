#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Knot Diagram Entity Class
"""

from fractions import Fraction
from typing import List, Optional

from src.entities.billiard_params import BilliardParams
from src.entities.crossing import Crossing
from src.utils.rational_util import RationalUtil


class KnotDiagram:
    """<<Entity>> Knot Diagram Entity Class

    Crossings are numbered 1..N in ascending order of their smaller
    parameter. The Gauss code lists +i when the curve passes over crossing
    i and -i when it passes under, in traversal order. PD entries are
    X[a, b, c, d] with a the incoming under edge, counter-clockwise.
    """

    def __init__(self, params: Optional[BilliardParams], crossings: List[Crossing],
                 gauss_code: List[int], pd_code: List[List[int]]):
        """Initialize knot diagram entity

        Args:
            params (BilliardParams, optional): Parameters the diagram was built from,
                None for diagrams read from a PD code
            crossings (list): Resolved crossings, index order
            gauss_code (list): Signed Gauss code
            pd_code (list): PD code, one entry per crossing in index order
        """
        self.__params = params
        self.__crossings = list(crossings)
        self.__gauss_code = list(gauss_code)
        self.__pd_code = [list(entry) for entry in pd_code]

    # Accessor methods
    @property
    def params(self) -> Optional[BilliardParams]:
        return self.__params

    @property
    def crossings(self) -> List[Crossing]:
        return list(self.__crossings)

    @property
    def gauss_code(self) -> List[int]:
        return list(self.__gauss_code)

    @property
    def pd_code(self) -> List[List[int]]:
        return [list(entry) for entry in self.__pd_code]

    @property
    def phase(self) -> Optional[Fraction]:
        return self.__params.phase if self.__params is not None else None

    @property
    def crossing_count(self) -> int:
        return len(self.__crossings)

    @property
    def writhe(self) -> int:
        return sum(c.sign for c in self.__crossings)

    def crossing(self, index: int) -> Crossing:
        """Get crossing by index

        Args:
            index (int): Crossing index, 1-based

        Returns:
            Crossing: Crossing
        """
        return self.__crossings[index - 1]

    def to_dict(self) -> dict:
        """Convert to dictionary

        Returns:
            dict: {"params", "phase", "pd", "gauss", "signs"}
        """
        return {
            'params': self.__params.to_dict() if self.__params is not None else None,
            'phase': RationalUtil.format(self.phase) if self.phase is not None else None,
            'pd': self.pd_code,
            'gauss': self.gauss_code,
            'signs': [c.sign for c in self.__crossings],
        }

    def __str__(self) -> str:
        name = str(self.__params) if self.__params is not None else "PD diagram"
        return f"{name}: {self.crossing_count} crossings, writhe {self.writhe}"
