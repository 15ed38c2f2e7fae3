#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Catalog repository and catalog service tests
"""

from src.entities.billiard_params import BilliardParams, Geometry
from src.entities.catalog_entry import CatalogEntry
from src.entities.deformation_profile import StabilityClass
from src.repositories.catalog_repository import CatalogRepository
from src.services.catalog_service import CatalogService


def _repository(tmp_path):
    return CatalogRepository(str(tmp_path / "catalog.jsonl"))


def test_add_and_get(tmp_path):
    repository = _repository(tmp_path)
    params = BilliardParams(Geometry.CYLINDER, 4, 11, 39)
    repository.add(CatalogEntry(params, stability="NegativelyStable"))
    found = repository.get_by_params(params)
    assert found is not None
    assert found.stability == "NegativelyStable"
    assert repository.get_by_params(BilliardParams(Geometry.CYLINDER, 4, 11, 41)) is None


def test_upsert_keeps_creation_time(tmp_path):
    repository = _repository(tmp_path)
    params = BilliardParams(Geometry.FLAT_TORUS, 3, 7, 5)
    repository.upsert(CatalogEntry(params, extras={'a': 1}, created_at="2020-01-01T00:00:00"))
    stored = repository.upsert(CatalogEntry(params, stability="x", extras={'b': 2}))
    assert stored.created_at == "2020-01-01T00:00:00"
    assert stored.extras == {'a': 1, 'b': 2}
    assert len(repository.get_all()) == 1


def test_filters_and_delete(tmp_path):
    repository = _repository(tmp_path)
    cylinder = BilliardParams(Geometry.CYLINDER, 4, 11, 13)
    cube = BilliardParams(Geometry.CUBE, 2, 11, 37)
    repository.add(CatalogEntry(cylinder, stability="NotStable"))
    repository.add(CatalogEntry(cube))
    assert [e.params for e in repository.get_by_geometry(Geometry.CUBE)] == [cube]
    assert [e.params for e in repository.get_by_stability("NotStable")] == [cylinder]
    assert repository.delete(cube.key())
    assert not repository.delete(cube.key())
    assert len(repository.get_all()) == 1


def test_census_catalogues_every_knot(tmp_path):
    path = str(tmp_path / "census.jsonl")
    results = CatalogService(path).census(4, 11, range(12, 15), grid_size=64, workers=1)
    assert [r['m'] for r in results] == [12, 13, 14]
    assert all(r['error'] is None for r in results)

    entries = {e.params.m: e for e in CatalogRepository(path).get_all()}
    assert set(entries) == {12, 13, 14}
    assert entries[13].stability == StabilityClass.NOT_STABLE.value
    assert entries[12].stability == StabilityClass.STRONGLY_POSITIVE_STABLE.value
    assert entries[13].extras['flat_torus_defined'] is True
    assert entries[12].extras['flat_torus_defined'] is False
    assert entries[13].invariants is None
