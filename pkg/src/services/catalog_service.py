#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Catalog service class, records knots and runs stability censuses
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, List, Optional

from src import config
from src.entities.billiard_params import BilliardParams, Geometry
from src.entities.catalog_entry import CatalogEntry
from src.entities.invariant_report import InvariantReport
from src.exceptions import BilliardKnotError
from src.repositories.catalog_repository import CatalogRepository
from src.services.deformation_service import DeformationService
from src.services.diagram_service import DiagramService
from src.services.invariant_service import InvariantService

logger = logging.getLogger(__name__)


def _census_task(job: tuple) -> dict:
    """Classify one Z(s, n, m); runs in a worker process"""
    s, n, m, grid_size, with_invariants = job
    try:
        profile = DeformationService().classify_stability(s, n, m, grid_size)
        report = None
        if with_invariants:
            diagram = DiagramService().build_diagram(BilliardParams(Geometry.CYLINDER, s, n, m),
                                                     profile.params.phase)
            report = InvariantService().invariants(diagram).to_dict()
        return {'m': m, 'profile': profile.to_dict(), 'report': report, 'error': None}
    except BilliardKnotError as e:
        return {'m': m, 'profile': None, 'report': None, 'error': str(e)}


class CatalogService:
    """Catalog service class"""

    def __init__(self, catalog_file: str = None):
        """Initialize catalog service

        Args:
            catalog_file (str, optional): Catalog path, config.CATALOG_FILE by default
        """
        self.__repository = CatalogRepository(catalog_file)

    def record(self, params: BilliardParams, report: Optional[InvariantReport] = None,
               stability: Optional[str] = None, extras: Optional[dict] = None) -> CatalogEntry:
        """Store what is known about a knot

        Args:
            params (BilliardParams): Knot parameters
            report (InvariantReport, optional): Invariants
            stability (str, optional): Stability class label
            extras (dict, optional): Further facts

        Returns:
            CatalogEntry: Stored entry
        """
        entry = CatalogEntry(params, report, stability, extras)
        stored = self.__repository.upsert(entry)
        logger.debug("Catalogued %s", stored)
        return stored

    def census(self, s: int, n: int, m_values: Iterable[int], grid_size: int = config.DEFAULT_GRID_SIZE,
               workers: int = config.DEFAULT_WORKERS, with_invariants: bool = False) -> List[dict]:
        """Classify Z(s, n, m) for a range of m and catalogue the results

        Args:
            s (int): Windings
            n (int): Reflections
            m_values (Iterable[int]): Height frequencies
            grid_size (int, optional): Beta grid size
            workers (int, optional): Worker processes, 1 runs in this process
            with_invariants (bool, optional): Also compute determinant and Alexander polynomial

        Returns:
            List[dict]: One result per m, in input order, with keys m, profile, report, error
        """
        jobs = [(s, n, m, grid_size, with_invariants) for m in m_values]
        if workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=workers) as executor:
                results = list(executor.map(_census_task, jobs))
        else:
            results = [_census_task(job) for job in jobs]

        for result in results:
            if result['error'] is not None:
                logger.warning("Z(%d,%d,%d) skipped: %s", s, n, result['m'], result['error'])
                continue
            profile = result['profile']
            params = BilliardParams.from_dict(profile['params'])
            report = InvariantReport.from_dict(result['report']) if result['report'] else None
            extras = {
                'phase': profile['phase'],
                'distinct_curves': profile['distinct_curves'],
                'sign_changes': sum(profile['sign_changes']),
                'limit_vanishing': sum(1 for v in profile['limit_vanishing'] if v),
                'enlacement': profile['enlacement'],
                'flat_torus_defined': math.gcd(s, result['m']) == 1,
            }
            self.record(params, report, profile['classification'], extras)
        return results
