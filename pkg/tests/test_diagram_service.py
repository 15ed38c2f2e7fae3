#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Diagram service tests
"""

import math
from collections import Counter
from fractions import Fraction

import pytest

from src.entities.billiard_params import BilliardParams, Geometry
from src.exceptions import (InvalidParametersError, SingularPhaseError,
                            UnsupportedLinkError)
from src.services.diagram_service import DiagramService
from src.services.invariant_service import InvariantService

diagrams = DiagramService()

TREFOIL = [[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]
HOPF = [[4, 1, 3, 2], [2, 3, 1, 4]]


def _flat_torus_pairs(s, n):
    """Double points of (s t mod 1, g(n t)) found by solving every pair of linear pieces"""
    def piece(i):
        # y = a + b t on [i/2n, (i+1)/2n]
        return (1 + i, -2 * n) if i % 2 == 0 else (-i, 2 * n)

    found = set()
    for i in range(2 * n):
        for j in range(2 * n):
            if i % 2 == j % 2:
                continue
            (a_i, b_i), (a_j, b_j) = piece(i), piece(j)
            for w in range(1 - s, s):
                if w == 0:
                    continue
                shift = Fraction(w, s)
                t = (a_j - b_j * shift - a_i) / Fraction(b_i - b_j)
                t_prime = t - shift
                if (Fraction(i, 2 * n) < t < Fraction(i + 1, 2 * n)
                        and Fraction(j, 2 * n) < t_prime < Fraction(j + 1, 2 * n)):
                    found.add(frozenset((t, t_prime)))
    return found


def _cube_pairs(s, n):
    """Double points of (g(s t + 1/4), g(n t)) from g(a) = g(b) iff a = +-b mod 1

    Equal x means s(t - t') or s(t + t') + 1/2 is an integer, equal y means
    n(t - t') or n(t + t') is. Only the two mixed systems have solutions
    with t != t'.
    """
    systems = []
    for a in range(1 - s, s):
        for b in range(2 * n):
            if a != 0:
                systems.append((Fraction(a, s), Fraction(b, n)))
    for c in range(1, 2 * s + 1):
        for d in range(1 - n, n):
            if d != 0:
                systems.append((Fraction(d, n), Fraction(2 * c - 1, 2 * s)))
    found = set()
    for difference, total in systems:
        t, t_prime = (total + difference) / 2, (total - difference) / 2
        if 0 <= t < 1 and 0 <= t_prime < 1:
            found.add(frozenset((t, t_prime)))
    return found


def _small_diagrams(geometry, limit=30):
    """Coprime (s, n) whose flat torus or cube diagram has at most limit crossings"""
    found = []
    for s in range(2, limit + 2):
        for n in range(2, limit + 2):
            if math.gcd(s, n) != 1:
                continue
            if geometry == Geometry.FLAT_TORUS and (s - 1) * n <= limit:
                found.append((s, n))
            if geometry == Geometry.CUBE and n % 2 == 1 and 2 * s * n - s - n <= limit:
                found.append((s, n))
    return found


def _assert_well_formed(diagram):
    count = diagram.crossing_count
    gauss = diagram.gauss_code
    assert len(gauss) == 2 * count
    assert Counter(abs(e) for e in gauss) == Counter({i: 2 for i in range(1, count + 1)})
    assert all(-i in gauss and i in gauss for i in range(1, count + 1))
    labels = Counter(label for entry in diagram.pd_code for label in entry)
    assert labels == Counter({e: 2 for e in range(1, 2 * count + 1)})
    assert all(c.sign in (1, -1) for c in diagram.crossings)


@pytest.mark.parametrize("params, expected", [
    (BilliardParams(Geometry.CYLINDER, 2, 5, 3), 5),
    (BilliardParams(Geometry.CYLINDER, 3, 7, 2), 14),
    (BilliardParams(Geometry.CYLINDER, 4, 11, 13), 33),
    (BilliardParams(Geometry.CYLINDER, 3, 4, 4, beta=0.0), 8),
    (BilliardParams(Geometry.FLAT_TORUS, 2, 3, 7), 3),
    (BilliardParams(Geometry.FLAT_TORUS, 3, 7, 5), 14),
    (BilliardParams(Geometry.CUBE, 2, 3, 5), 7),
    (BilliardParams(Geometry.CUBE, 3, 5, 7), 22),
])
def test_crossing_count(params, expected):
    assert len(diagrams.enumerate_crossings(params)) == expected


def test_crossings_are_numbered_by_smaller_parameter():
    crossings = diagrams.enumerate_crossings(BilliardParams(Geometry.CUBE, 2, 11, 35))
    assert [c.index for c in crossings] == list(range(1, len(crossings) + 1))
    smaller = [min(c.t, c.t_prime) for c in crossings]
    assert smaller == sorted(smaller)


@pytest.mark.parametrize("s, n", _small_diagrams(Geometry.FLAT_TORUS))
def test_flat_torus_crossings_match_piecewise_solver(s, n):
    crossings = diagrams.enumerate_crossings(BilliardParams(Geometry.FLAT_TORUS, s, n, 1))
    assert {frozenset((c.t, c.t_prime)) for c in crossings} == _flat_torus_pairs(s, n)
    assert len(crossings) == (s - 1) * n


@pytest.mark.parametrize("s, n", _small_diagrams(Geometry.CUBE))
def test_cube_crossings_match_sawtooth_equations(s, n):
    crossings = diagrams.enumerate_crossings(BilliardParams(Geometry.CUBE, s, n, 1))
    assert {frozenset((c.t, c.t_prime)) for c in crossings} == _cube_pairs(s, n)
    assert len(crossings) == 2 * s * n - s - n


@pytest.mark.slow
def test_crossing_count_sweep():
    for s in range(1, 7):
        for n in range(1, 26):
            if math.gcd(s, n) != 1:
                continue
            torus = BilliardParams(Geometry.FLAT_TORUS, s, n, 1)
            assert len(diagrams.enumerate_crossings(torus)) == (s - 1) * n, (s, n)
            if n >= 2 * s + 1:
                cylinder = BilliardParams(Geometry.CYLINDER, s, n, 1)
                assert len(diagrams.enumerate_crossings(cylinder)) == (s - 1) * n, (s, n)
            if n % 2 == 1:
                cube = BilliardParams(Geometry.CUBE, s, n, 1)
                assert len(diagrams.enumerate_crossings(cube)) == 2 * s * n - s - n, (s, n)


def test_flat_torus_crossings_differ_by_multiples_of_one_over_s():
    for c in diagrams.enumerate_crossings(BilliardParams(Geometry.FLAT_TORUS, 5, 8, 3)):
        assert ((c.t - c.t_prime) * 5).denominator == 1
        assert c.k % 2 == 1 and 0 < c.l < 5


@pytest.mark.parametrize("s, n", [(2, 5), (3, 7), (4, 11), (3, 16)])
def test_cylinder_crossings_follow_combinatorics(s, n):
    crossings = diagrams.enumerate_crossings(BilliardParams(Geometry.CYLINDER, s, n, 1))
    assert sorted((c.k, c.k_prime, c.l) for c in crossings) == sorted(diagrams.cylinder_combinatorics(s, n))
    for c in crossings:
        assert float(c.t + c.t_prime) == pytest.approx((c.k + c.k_prime) / (2 * n), abs=1e-12)


def test_stable_crossings_are_exact():
    for c in diagrams.stable_crossings(3, 7):
        assert c.t == Fraction(c.k * 3 + c.l, 42)
        assert c.t_prime == Fraction(c.k_prime * 3 - c.l, 42)


def test_factor_knot_in_half_slice():
    diagram = diagrams.factor_knot_diagram(5, 12, 7, 2)
    assert diagram.crossing_count == 48
    assert diagram.params.beta == pytest.approx(math.pi)
    _assert_well_formed(diagram)


def test_factor_knot_rejects_bad_divisor():
    with pytest.raises(InvalidParametersError):
        diagrams.factor_knot_diagram(5, 12, 7, 0)


@pytest.mark.parametrize("params", [
    BilliardParams(Geometry.CYLINDER, 2, 4, 3),
    BilliardParams(Geometry.CYLINDER, 2, 3, 3),
    BilliardParams(Geometry.FLAT_TORUS, 2, 3, 4),
    BilliardParams(Geometry.CUBE, 2, 4, 3),
    BilliardParams(Geometry.FLAT_TORUS, 3, 7, 5, "3/2"),
])
def test_invalid_parameters(params):
    with pytest.raises(InvalidParametersError):
        diagrams.enumerate_crossings(params)


def test_chosen_phase_is_regular():
    params = BilliardParams(Geometry.FLAT_TORUS, 3, 7, 5)
    crossings = diagrams.enumerate_crossings(params)
    singular = diagrams.singular_phases(params, crossings)
    phase = diagrams.choose_phase(params, crossings)
    assert phase not in singular
    assert 0 <= phase < 1


def test_singular_phase_is_rejected():
    params = BilliardParams(Geometry.FLAT_TORUS, 3, 7, 5)
    crossings = diagrams.enumerate_crossings(params)
    singular = diagrams.singular_phases(params, crossings)
    with pytest.raises(SingularPhaseError):
        diagrams.resolve_diagram(params, crossings, singular[0])


@pytest.mark.parametrize("params", [
    BilliardParams(Geometry.CYLINDER, 3, 11, 16),
    BilliardParams(Geometry.CYLINDER, 2, 5, 5),
    BilliardParams(Geometry.FLAT_TORUS, 4, 7, 9),
    BilliardParams(Geometry.CUBE, 2, 11, 37),
    BilliardParams(Geometry.CYLINDER, 3, 4, 5, beta=0.0),
])
def test_diagram_codes_are_well_formed(params):
    _assert_well_formed(diagrams.build_diagram(params))


def test_diagram_phase_is_recorded():
    diagram = diagrams.build_diagram(BilliardParams(Geometry.FLAT_TORUS, 3, 7, 5), "1/97")
    assert diagram.phase == Fraction(1, 97)
    assert diagram.to_dict()['phase'] == "1/97"


def test_writhe_sums_signs():
    diagram = diagrams.build_diagram(BilliardParams(Geometry.FLAT_TORUS, 2, 3, 3))
    assert diagram.writhe == sum(c.sign for c in diagram.crossings)
    assert sum(diagrams.layer_writhe(diagram).values()) == diagram.writhe


@pytest.mark.parametrize("params, period", [
    (BilliardParams(Geometry.FLAT_TORUS, 2, 3, 9), 3),
    (BilliardParams(Geometry.FLAT_TORUS, 3, 7, 5), 2),
    (BilliardParams(Geometry.FLAT_TORUS, 4, 5, 7), 2),
    (BilliardParams(Geometry.FLAT_TORUS, 4, 9, 11), 2),
])
def test_cyclic_symmetry(params, period):
    diagram = diagrams.build_diagram(params)
    assert diagrams.verify_cyclic_symmetry(diagram, period)
    assert period in diagrams.symmetries(diagram)


def test_missing_cyclic_symmetry():
    diagram = diagrams.build_diagram(BilliardParams(Geometry.FLAT_TORUS, 3, 7, 5))
    assert not diagrams.verify_cyclic_symmetry(diagram, 3)


def test_cyclic_symmetry_needs_period_two_or_more():
    diagram = diagrams.build_diagram(BilliardParams(Geometry.FLAT_TORUS, 3, 7, 5))
    with pytest.raises(InvalidParametersError):
        diagrams.verify_cyclic_symmetry(diagram, 1)


def test_from_pd_code_trefoil():
    diagram = diagrams.from_pd_code(TREFOIL)
    assert diagram.crossing_count == 3
    assert diagram.params is None
    assert abs(diagram.writhe) == 3
    _assert_well_formed(diagram)


def test_from_pd_code_rejects_links():
    with pytest.raises(UnsupportedLinkError):
        diagrams.from_pd_code(HOPF)


def test_from_pd_code_rejects_malformed_entries():
    with pytest.raises(InvalidParametersError):
        diagrams.from_pd_code([[1, 2, 3]])
    with pytest.raises(InvalidParametersError):
        diagrams.from_pd_code([[1, 2, 3, 4], [1, 2, 3, 5]])


def test_load_diagram_keeps_invariants():
    invariants = InvariantService()
    original = diagrams.build_diagram(BilliardParams(Geometry.CUBE, 2, 5, 3))
    loaded = diagrams.load_diagram(original.to_dict())
    assert loaded.params == original.params
    assert loaded.crossing_count == original.crossing_count
    assert invariants.alexander_polynomial(loaded) == invariants.alexander_polynomial(original)


def test_load_diagram_needs_pd():
    with pytest.raises(InvalidParametersError):
        diagrams.load_diagram({'gauss': [1, -1]})
