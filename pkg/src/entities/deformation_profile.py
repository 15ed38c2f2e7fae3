#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Deformation Profile Entity Classes
"""

from enum import Enum
from typing import Dict, List, Optional

import numpy as np

from src.entities.billiard_params import BilliardParams
from src.utils.rational_util import RationalUtil


class StabilityClass(Enum):
    """Behaviour of the crossing signs of Z(s, n, m) as beta shrinks to 0"""
    STRONGLY_POSITIVE_STABLE = "StronglyPositiveStable"
    POSITIVELY_STABLE = "PositivelyStable"
    NEGATIVELY_STABLE = "NegativelyStable"
    NOT_STABLE = "NotStable"


class DeformationPoint:
    """<<Entity>> Normalized height differences of all crossings at one beta"""

    def __init__(self, beta: float, values):
        self.__beta = float(beta)
        self.__values = tuple(float(v) for v in values)

    @property
    def beta(self) -> float:
        return self.__beta

    @property
    def values(self) -> tuple:
        return self.__values

    def __str__(self) -> str:
        return f"beta={self.__beta:.6g}: " + ", ".join(f"{v:+.4f}" for v in self.__values)


class DeformationProfile:
    """<<Entity>> Deformation Profile Entity Class

    Normalized height differences sign(Delta_i(2*pi)) * Delta_i(beta) of every
    crossing of a cylinder knot, sampled on an ascending beta grid, together
    with the exact beta -> 0 limit data and the resulting stability class.
    """

    def __init__(self, params: BilliardParams, betas, values, limit_values: List[float],
                 limit_signs: List[int], limit_vanishing: List[bool], sign_changes: List[int],
                 classification: StabilityClass, distinct_curves: int,
                 enlacement: Optional[str] = None, layer_writhes: Optional[Dict[int, int]] = None):
        """Initialize deformation profile

        Args:
            params (BilliardParams): Cylinder parameters, with the phase that was used
            betas (np.ndarray): Ascending beta grid, last point 2*pi
            values (np.ndarray): Normalized height differences, shape (grid, crossings)
            limit_values (list): Normalized height differences at beta -> 0
            limit_signs (list): One-sided limit of delta_i, each +1 or -1
            limit_vanishing (list): Whether Delta_i(beta) -> 0
            sign_changes (list): Exact number of sign changes of each delta_i on ]0, 2*pi]
            classification (StabilityClass): Stability class
            distinct_curves (int): Number of distinct normalized curves
            enlacement (str, optional): Enlacement flag, s = 4 only
            layer_writhes (dict, optional): Sum of crossing signs per layer at 2*pi
        """
        self.__params = params
        self.__betas = np.asarray(betas, dtype=float)
        self.__values = np.asarray(values, dtype=float)
        if self.__values.ndim == 1:
            self.__values = self.__values.reshape(len(self.__betas), 1)
        self.__limit_values = [float(v) for v in limit_values]
        self.__limit_signs = [int(v) for v in limit_signs]
        self.__limit_vanishing = [bool(v) for v in limit_vanishing]
        self.__sign_changes = [int(v) for v in sign_changes]
        self.__classification = classification
        self.__distinct_curves = int(distinct_curves)
        self.__enlacement = enlacement
        self.__layer_writhes = dict(layer_writhes or {})

    # Accessor methods
    @property
    def params(self) -> BilliardParams:
        return self.__params

    @property
    def betas(self) -> np.ndarray:
        return self.__betas.copy()

    @property
    def values(self) -> np.ndarray:
        return self.__values.copy()

    @property
    def crossing_count(self) -> int:
        return self.__values.shape[1]

    @property
    def limit_values(self) -> List[float]:
        return list(self.__limit_values)

    @property
    def limit_signs(self) -> List[int]:
        return list(self.__limit_signs)

    @property
    def limit_vanishing(self) -> List[bool]:
        return list(self.__limit_vanishing)

    @property
    def sign_changes(self) -> List[int]:
        return list(self.__sign_changes)

    @property
    def classification(self) -> StabilityClass:
        return self.__classification

    @property
    def distinct_curves(self) -> int:
        return self.__distinct_curves

    @property
    def enlacement(self) -> Optional[str]:
        return self.__enlacement

    @property
    def layer_writhes(self) -> Dict[int, int]:
        return dict(self.__layer_writhes)

    @property
    def points(self) -> List[DeformationPoint]:
        """Samples in descending beta order"""
        return [DeformationPoint(b, row) for b, row in zip(self.__betas[::-1], self.__values[::-1])]

    def csv_rows(self):
        """Header and rows of the deformation table

        Rows run from beta = 2*pi down to the smallest grid point, followed by
        the limit row labelled "beta=0+".

        Returns:
            tuple: (header list, list of row lists)
        """
        header = ["beta"] + [f"c{i + 1}" for i in range(self.crossing_count)]
        rows = [[repr(point.beta)] + [repr(v) for v in point.values] for point in self.points]
        rows.append(["beta=0+"] + [repr(v) for v in self.__limit_values])
        return header, rows

    def to_dict(self) -> dict:
        """Summary without the sampled grid

        Returns:
            dict: JSON-compatible summary
        """
        return {
            'params': self.__params.to_dict(),
            'phase': RationalUtil.format(self.__params.phase),
            'crossings': self.crossing_count,
            'classification': self.__classification.value,
            'limit_signs': self.limit_signs,
            'limit_vanishing': self.limit_vanishing,
            'sign_changes': self.sign_changes,
            'distinct_curves': self.__distinct_curves,
            'enlacement': self.__enlacement,
            'layer_writhes': {str(k): v for k, v in sorted(self.__layer_writhes.items())},
            'grid_size': int(len(self.__betas)),
        }

    def __str__(self) -> str:
        return f"{self.__params}: {self.__classification.value}, {self.__distinct_curves} distinct curves"
