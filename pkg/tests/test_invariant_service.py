#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Invariant service tests
"""

import math

import pytest
import sympy

from src import config
from src.entities.billiard_params import BilliardParams, Geometry
from src.entities.laurent_polynomial import LaurentPolynomial
from src.exceptions import InvalidParametersError
from src.services.deformation_service import DeformationService
from src.services.diagram_service import DiagramService
from src.services.invariant_service import InvariantService

diagrams = DiagramService()
invariants = InvariantService()
deformation = DeformationService()

TREFOIL = [[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]
FIGURE_EIGHT = [[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]]


def _coprime_triples(pairwise):
    for s in range(2, 5):
        for n in range(1, 14):
            for m in range(1, 14):
                if math.gcd(s, n) != 1 or math.gcd(s, m) != 1:
                    continue
                if pairwise and math.gcd(n, m) != 1:
                    continue
                yield s, n, m


def _torus_knot_coeffs(p, q):
    t = sympy.symbols("t")
    quotient = sympy.cancel((t ** (p * q) - 1) * (t - 1) / ((t ** p - 1) * (t ** q - 1)))
    return [int(c) for c in reversed(sympy.Poly(quotient, t).all_coeffs())]


def _flat_torus(s, n, m):
    return diagrams.build_diagram(BilliardParams(Geometry.FLAT_TORUS, s, n, m))


def test_trefoil_from_pd():
    report = invariants.invariants(diagrams.from_pd_code(TREFOIL))
    assert report.alexander.coeffs == [1, -1, 1]
    assert report.determinant == 3
    assert report.square_root is None


def test_figure_eight_from_pd():
    report = invariants.invariants(diagrams.from_pd_code(FIGURE_EIGHT))
    assert report.alexander.coeffs == [1, -3, 1]
    assert report.determinant == 5


def test_unknot_has_trivial_invariants():
    diagram = _flat_torus(2, 1, 3)
    assert diagram.crossing_count == 1
    report = invariants.invariants(diagram)
    assert report.determinant == 1
    assert report.alexander == LaurentPolynomial({0: 1})


@pytest.mark.parametrize("p, q, det", [(2, 3, 3), (2, 5, 5), (3, 4, 3)])
def test_torus_knots(p, q, det):
    expected = _torus_knot_coeffs(p, q)
    for diagram in (deformation.build_stable_diagram(p, q, q), _flat_torus(p, q, q)):
        report = invariants.invariants(diagram)
        assert report.alexander.coeffs == expected
        assert report.determinant == det


def test_classical_cylinder_torus_knot():
    diagram = diagrams.build_diagram(BilliardParams(Geometry.CYLINDER, 2, 5, 5))
    assert invariants.alexander_polynomial(diagram).coeffs == [1, -1, 1, -1, 1]


@pytest.mark.parametrize("m, det", [(35, 1), (37, 1), (39, 12769), (41, 1), (43, 34969)])
def test_cylinder_determinants(m, det):
    diagram = diagrams.build_diagram(BilliardParams(Geometry.CYLINDER, 4, 11, m))
    assert invariants.determinant(diagram) == det


def test_determinant_does_not_depend_on_phase():
    params = BilliardParams(Geometry.CYLINDER, 4, 11, 39)
    crossings = diagrams.enumerate_crossings(params)
    singular = diagrams.singular_phases(params, crossings)
    values = set()
    for i in range(0, len(singular), max(1, len(singular) // 5)):
        end = singular[i + 1] if i + 1 < len(singular) else singular[0] + 1
        phase = ((singular[i] + end) / 2) % 1
        values.add(invariants.determinant(diagrams.resolve_diagram(params, crossings, phase)))
    assert values == {12769}


def test_alexander_at_minus_one_is_determinant():
    diagram = _flat_torus(3, 7, 5)
    alexander = invariants.alexander_polynomial(diagram)
    assert abs(alexander.evaluate(-1)) == invariants.determinant(diagram)
    assert alexander.is_symmetric()
    assert alexander.evaluate(1) in (1, -1)


def test_stable_diagram_matches_flat_torus():
    stable = deformation.build_stable_diagram(3, 7, 5)
    flat = _flat_torus(3, 7, 5)
    assert invariants.alexander_polynomial(stable) == invariants.alexander_polynomial(flat)


def test_stable_diagrams_equal_flat_torus_diagrams():
    for s, n, m in _coprime_triples(pairwise=False):
        stable = deformation.build_stable_diagram(s, n, m)
        flat = _flat_torus(s, n, m)
        assert stable.gauss_code == flat.gauss_code, (s, n, m)
        assert [c.sign for c in stable.crossings] == [c.sign for c in flat.crossings], (s, n, m)


@pytest.mark.slow
def test_stable_alexander_equals_flat_torus_alexander():
    for s, n, m in _coprime_triples(pairwise=False):
        stable = invariants.alexander_polynomial(deformation.build_stable_diagram(s, n, m))
        assert stable == invariants.alexander_polynomial(_flat_torus(s, n, m)), (s, n, m)


def test_exchanging_n_and_m_keeps_determinant():
    for s, n, m in _coprime_triples(pairwise=False):
        if n < m:
            assert (invariants.determinant(_flat_torus(s, n, m))
                    == invariants.determinant(_flat_torus(s, m, n))), (s, n, m)


@pytest.mark.slow
def test_exchanging_n_and_m_keeps_alexander():
    for s, n, m in _coprime_triples(pairwise=False):
        if n < m:
            assert (invariants.alexander_polynomial(_flat_torus(s, n, m))
                    == invariants.alexander_polynomial(_flat_torus(s, m, n))), (s, n, m)


def test_switched_knots_agree():
    verdict, first, second = invariants.compare(_flat_torus(3, 11, 16), _flat_torus(3, 16, 11))
    assert verdict == config.COMPARISON_AGREE
    assert first == second


def test_compare_distinguishes_by_determinant():
    verdict, first, second = invariants.compare(diagrams.from_pd_code(TREFOIL),
                                                diagrams.from_pd_code(FIGURE_EIGHT))
    assert verdict == config.COMPARISON_DET
    assert (first.determinant, second.determinant) == (3, 5)


def test_pairwise_coprime_determinants_are_squares():
    for s, n, m in _coprime_triples(pairwise=True):
        det = invariants.determinant(_flat_torus(s, n, m))
        assert invariants.perfect_square_root(det) is not None, (s, n, m, det)


def _small_knots(limit=30):
    """Flat torus and cube knots with at most limit crossings, m coprime to s and n"""
    for s in range(2, limit + 2):
        for n in range(2, limit + 2):
            if math.gcd(s, n) != 1:
                continue
            m = next(m for m in range(2, 4 * limit) if math.gcd(m, s * n) == 1)
            if (s - 1) * n <= limit:
                yield BilliardParams(Geometry.FLAT_TORUS, s, n, m)
            if n % 2 == 1 and 2 * s * n - s - n <= limit:
                yield BilliardParams(Geometry.CUBE, s, n, m)


@pytest.mark.parametrize("params", list(_small_knots()), ids=str)
def test_knot_determinants_are_odd(params):
    det = invariants.determinant(diagrams.build_diagram(params))
    assert det % 2 == 1


def test_perfect_square_root():
    assert invariants.perfect_square_root(12769) == 113
    assert invariants.perfect_square_root(0) == 0
    assert invariants.perfect_square_root(12) is None
    with pytest.raises(InvalidParametersError):
        invariants.perfect_square_root(-4)


def test_report_json_form():
    report = invariants.invariants(diagrams.from_pd_code(TREFOIL))
    assert report.to_dict() == {"det": 3, "alexander": {"coeffs": [1, -1, 1], "min_exp": 0},
                                "square_root": None}
