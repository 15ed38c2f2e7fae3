#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Catalog Repository Class
"""

from typing import List, Optional

from src import config
from src.entities.billiard_params import BilliardParams, Geometry
from src.entities.catalog_entry import CatalogEntry
from src.repositories.base_repository import BaseRepository


class CatalogRepository(BaseRepository[CatalogEntry]):
    """Catalog repository class, one JSON line per knot"""

    def __init__(self, data_file: str = None):
        """Initialize catalog repository

        Args:
            data_file (str, optional): Catalog path, config.CATALOG_FILE by default
        """
        super().__init__(data_file or config.CATALOG_FILE, CatalogEntry)

    def get_by_params(self, params: BilliardParams) -> Optional[CatalogEntry]:
        """Get entry by knot parameters

        Args:
            params (BilliardParams): Knot parameters

        Returns:
            Optional[CatalogEntry]: Entry, returns None if not found
        """
        return self.get_by_key(params.key())

    def upsert(self, entry: CatalogEntry) -> CatalogEntry:
        """Insert an entry or merge it into the one with the same parameters

        The stored entry keeps its creation time.

        Args:
            entry (CatalogEntry): New entry

        Returns:
            CatalogEntry: Stored entry
        """
        existing = self.get_by_key(entry.key)
        if existing is None:
            return self.add(entry)
        return self.update(entry.merged_into(existing))

    def get_by_geometry(self, geometry: Geometry) -> List[CatalogEntry]:
        return [e for e in self.get_all() if e.params.geometry == geometry]

    def get_by_stability(self, stability: str) -> List[CatalogEntry]:
        return [e for e in self.get_all() if e.stability == stability]
