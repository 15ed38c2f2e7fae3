#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Catalog Entry Entity Class
"""

import datetime
from typing import Optional

from src import config
from src.entities.billiard_params import BilliardParams
from src.entities.invariant_report import InvariantReport


class CatalogEntry:
    """<<Entity>> One catalogued billiard knot"""

    def __init__(self, params: BilliardParams, invariants: Optional[InvariantReport] = None,
                 stability: Optional[str] = None, extras: Optional[dict] = None,
                 created_at: Optional[str] = None, tool_version: Optional[str] = None):
        """Initialize catalog entry

        Args:
            params (BilliardParams): Knot parameters
            invariants (InvariantReport, optional): Invariants, None when not computed
            stability (str, optional): Stability class label
            extras (dict, optional): Further facts, e.g. distinct curves or enlacement
            created_at (str, optional): ISO timestamp, now when omitted
            tool_version (str, optional): Version of the tool that wrote the entry
        """
        self.__params = params
        self.__invariants = invariants
        self.__stability = stability
        self.__extras = dict(extras or {})
        self.__created_at = created_at or datetime.datetime.now().isoformat(timespec='seconds')
        self.__tool_version = tool_version or config.TOOL_VERSION

    # Accessor methods
    @property
    def params(self) -> BilliardParams:
        return self.__params

    @property
    def invariants(self) -> Optional[InvariantReport]:
        return self.__invariants

    @property
    def stability(self) -> Optional[str]:
        return self.__stability

    @property
    def extras(self) -> dict:
        return dict(self.__extras)

    @property
    def created_at(self) -> str:
        return self.__created_at

    @property
    def tool_version(self) -> str:
        return self.__tool_version

    @property
    def key(self) -> tuple:
        return self.__params.key()

    def merged_into(self, older):
        """Copy of this entry that keeps the creation time of an older entry

        Fields this entry leaves empty are taken from the older one.
        """
        extras = older.extras
        extras.update(self.__extras)
        return CatalogEntry(
            params=self.__params,
            invariants=self.__invariants or older.invariants,
            stability=self.__stability or older.stability,
            extras=extras,
            created_at=older.created_at,
            tool_version=self.__tool_version,
        )

    def to_dict(self) -> dict:
        """Convert to dictionary

        Returns:
            dict: Dictionary for one JSON line
        """
        return {
            'params': self.__params.to_dict(),
            'invariants': self.__invariants.to_dict() if self.__invariants is not None else None,
            'stability': self.__stability,
            'extras': self.__extras,
            'created_at': self.__created_at,
            'tool_version': self.__tool_version,
        }

    @classmethod
    def from_dict(cls, data: dict):
        """Create catalog entry from dictionary

        Args:
            data (dict): Dictionary as produced by to_dict

        Returns:
            CatalogEntry: Catalog entry
        """
        invariants = data.get('invariants')
        return cls(
            params=BilliardParams.from_dict(data.get('params', {})),
            invariants=InvariantReport.from_dict(invariants) if invariants else None,
            stability=data.get('stability'),
            extras=data.get('extras'),
            created_at=data.get('created_at'),
            tool_version=data.get('tool_version'),
        )

    def __str__(self) -> str:
        parts = [str(self.__params)]
        if self.__stability:
            parts.append(self.__stability)
        if self.__invariants is not None:
            parts.append(f"det={self.__invariants.determinant}")
        return ", ".join(parts)
