#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Symmetric Union Decomposition Entity Class
"""

from typing import Dict, List

from src.entities.knot_diagram import KnotDiagram


class SymmetricUnionDecomposition:
    """<<Entity>> A knot diagram read as a symmetric union

    The diagram is mirror symmetric in an axis. Crossings on the axis are
    listed in axis_crossings, every other crossing is paired with its mirror
    image, and the partial knot is what remains of the left half after
    smoothing every axis crossing.
    """

    def __init__(self, family: str, diagram: KnotDiagram, axis_crossings: List[int],
                 mirror_pairs: Dict[int, int], partial: KnotDiagram, experimental: bool = False):
        """Initialize decomposition

        Args:
            family (str): "R" or "T"
            diagram (KnotDiagram): Symmetric diagram
            axis_crossings (list): Indices of the crossings on the axis
            mirror_pairs (dict): Off-axis crossing index to its mirror image's index
            partial (KnotDiagram): Partial knot diagram
            experimental (bool, optional): True when the parameters are outside
                the proven range and the result is a conjecture check
        """
        self.__family = family
        self.__diagram = diagram
        self.__axis_crossings = sorted(axis_crossings)
        self.__mirror_pairs = dict(mirror_pairs)
        self.__partial = partial
        self.__experimental = bool(experimental)

    @property
    def family(self) -> str:
        return self.__family

    @property
    def diagram(self) -> KnotDiagram:
        return self.__diagram

    @property
    def axis_crossings(self) -> List[int]:
        return list(self.__axis_crossings)

    @property
    def mirror_pairs(self) -> Dict[int, int]:
        return dict(self.__mirror_pairs)

    @property
    def partial(self) -> KnotDiagram:
        return self.__partial

    @property
    def experimental(self) -> bool:
        return self.__experimental

    @property
    def off_axis_count(self) -> int:
        return len(self.__mirror_pairs)

    def to_dict(self) -> dict:
        """Convert to dictionary

        Returns:
            dict: JSON-compatible decomposition
        """
        return {
            'family': self.__family,
            'params': self.__diagram.params.to_dict() if self.__diagram.params else None,
            'crossings': self.__diagram.crossing_count,
            'axis_crossings': self.axis_crossings,
            'mirror_pairs': {str(k): v for k, v in sorted(self.__mirror_pairs.items())},
            'partial': self.__partial.to_dict(),
            'experimental': self.__experimental,
        }

    def __str__(self) -> str:
        return (f"{self.__diagram.params}: {len(self.__axis_crossings)} axis crossings, "
                f"{self.off_axis_count} off-axis, partial knot with {self.__partial.crossing_count} crossings")
