#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Repository Module
"""

from src.repositories.base_repository import BaseRepository
from src.repositories.catalog_repository import CatalogRepository

__all__ = [
    'BaseRepository',
    'CatalogRepository'
]
