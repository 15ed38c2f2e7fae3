#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Entity Module
"""

from src.entities.billiard_params import BilliardParams, Geometry, Point3
from src.entities.crossing import Crossing
from src.entities.knot_diagram import KnotDiagram
from src.entities.laurent_polynomial import LaurentPolynomial
from src.entities.invariant_report import InvariantReport
from src.entities.deformation_profile import DeformationPoint, DeformationProfile, StabilityClass
from src.entities.symmetric_union import SymmetricUnionDecomposition
from src.entities.catalog_entry import CatalogEntry

__all__ = [
    'BilliardParams',
    'Geometry',
    'Point3',
    'Crossing',
    'KnotDiagram',
    'LaurentPolynomial',
    'InvariantReport',
    'DeformationPoint',
    'DeformationProfile',
    'StabilityClass',
    'SymmetricUnionDecomposition',
    'CatalogEntry'
]
