#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Deformation service tests
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from src import config
from src.entities.billiard_params import BilliardParams, Geometry
from src.entities.deformation_profile import StabilityClass
from src.exceptions import InvalidParametersError, LimitSingularError
from src.services.deformation_service import DeformationService
from src.services.diagram_service import DiagramService

deformation = DeformationService()
diagrams = DiagramService()

STRONGLY_POSITIVE = [*range(1, 13), 14, 15, 16, 18, 19, 20, 22, 23, 24, 28, 32, 36, 40, 44, 48]
POSITIVE = [119, 123, 127, 131]
# Classes follow the exact sign-change counts: 54, 58, 74, 75, 79 and 96 flip
# an odd number of times on every layer, while m = 60 keeps the sign of its
# layer 1 crossings and is not stable
NEGATIVE = [39, 43, 47, 51, 54, 55, 58, 59, 62, 63, 66, 67, 70, 71, 74, 75, 79, 96,
            137, 141, 145, 149, 153]

GRID = 128


def _crossings(s, n, m=1):
    return diagrams.enumerate_crossings(BilliardParams(Geometry.CYLINDER, s, n, m))


def test_x_l_full_turn():
    assert deformation.x_l(2 * math.pi, 1, 2, 5) == pytest.approx(math.sqrt(5) - 2)


@pytest.mark.parametrize("s, n", [(2, 5), (3, 11), (4, 11), (5, 13)])
def test_x_l_decreases_towards_full_turn(s, n):
    betas = deformation.beta_grid(256)
    for l in range(1, s):
        assert np.all(np.diff(deformation.x_l(betas, l, s, n)) < 0)


@pytest.mark.parametrize("s, n", [(2, 5), (4, 11), (6, 13)])
def test_x_l_limit(s, n):
    for l in range(1, s):
        assert deformation.x_l(1e-6, l, s, n) == pytest.approx(l / s, abs=1e-4)
        assert deformation.x_l_limit(l, s) == Fraction(l, s)


@pytest.mark.parametrize("beta", [0.0, -1.0, 7.0])
def test_x_l_rejects_beta_outside_range(beta):
    with pytest.raises(InvalidParametersError):
        deformation.x_l(beta, 1, 2, 5)


def test_crossing_parameter_sum_is_constant():
    betas = [2 * math.pi, 3.0, 1.0, 0.1, 1e-3]
    for c in _crossings(4, 11):
        expected = (c.k + c.k_prime) / 22
        for beta in betas:
            t, t_prime = deformation.crossing_parameters(c, beta, 4, 11)
            assert abs(t + t_prime - expected) <= 1e-12


def test_crossing_parameters_at_full_turn_match_diagram():
    for c in _crossings(3, 11):
        t, t_prime = deformation.crossing_parameters(c, 2 * math.pi, 3, 11)
        assert t == pytest.approx(float(c.t), abs=1e-12)
        assert t_prime == pytest.approx(float(c.t_prime), abs=1e-12)


def test_crossing_parameters_limit_is_exact():
    for c in _crossings(3, 7):
        t, t_prime = deformation.crossing_parameters(c, 0, 3, 7)
        assert t == Fraction(3 * c.k + c.l, 42)
        assert t_prime == Fraction(3 * c.k_prime - c.l, 42)


def test_normalized_sign_does_not_depend_on_phase():
    s, n, m = 4, 11, 39
    betas = deformation.beta_grid(64)
    phases = [Fraction(j, 8) + Fraction(1, 97) for j in range(8)]
    for c in _crossings(s, n, m):
        normalized = deformation.delta_normalized(c, betas, s, n, m)
        for phase in phases:
            start = np.sign(deformation.delta(c, 2 * math.pi, phase, s, n, m))
            values = np.sign(deformation.delta(c, betas, phase, s, n, m)) * start
            mask = normalized != 0
            np.testing.assert_array_equal(values[mask], normalized[mask])


def test_sign_changes_are_counted_exactly():
    crossings = _crossings(4, 11, 13)
    changes = [deformation.sign_changes(c, 4, 11, 13) for c in crossings]
    by_layer = {c.l: v for c, v in zip(crossings, changes)}
    assert by_layer == {1: 0, 2: 0, 3: 1}


def test_beta_grid():
    grid = deformation.beta_grid(100)
    assert len(grid) == 100
    assert grid[0] == pytest.approx(config.BETA_MIN)
    assert grid[-1] == config.BETA_MAX
    assert np.all(np.diff(grid) > 0)
    with pytest.raises(InvalidParametersError):
        deformation.beta_grid(1)


@pytest.mark.parametrize("s, n, m, expected", [
    (3, 11, 16, StabilityClass.STRONGLY_POSITIVE_STABLE),
    (3, 16, 11, StabilityClass.STRONGLY_POSITIVE_STABLE),
    (4, 11, 119, StabilityClass.POSITIVELY_STABLE),
    (4, 11, 39, StabilityClass.NEGATIVELY_STABLE),
    (4, 11, 13, StabilityClass.NOT_STABLE),
    (4, 11, 121, StabilityClass.NOT_STABLE),
    (5, 13, 20, StabilityClass.STRONGLY_POSITIVE_STABLE),
    (6, 13, 14, StabilityClass.NOT_STABLE),
])
def test_classification(s, n, m, expected):
    assert deformation.classify_stability(s, n, m, GRID).classification == expected


def test_torus_knot_cylinder_is_strongly_positive_stable():
    profile = deformation.classify_stability(2, 5, 5, GRID)
    assert profile.classification == StabilityClass.STRONGLY_POSITIVE_STABLE
    assert not any(profile.sign_changes)


def test_vanishing_limit_when_s_and_m_share_a_factor():
    profile = deformation.classify_stability(6, 13, 14, GRID)
    assert any(profile.limit_vanishing)
    vanishing = [v for v, flag in zip(profile.limit_values, profile.limit_vanishing) if flag]
    assert all(v == 0 for v in vanishing)
    assert not any(deformation.classify_stability(3, 11, 16, GRID).limit_vanishing)


def test_periodic_knot_has_three_curves():
    profile = deformation.classify_stability(4, 11, 121, GRID)
    assert profile.distinct_curves == 3
    columns = deformation.distinct_curve_columns(profile.values)
    assert len(columns) == 3
    assert columns[0] == 0


def test_single_winding_profile_is_trivial():
    profile = deformation.classify_stability(1, 5, 7, 16)
    assert profile.crossing_count == 0
    assert profile.values.shape == (16, 0)
    header, rows = profile.csv_rows()
    assert header == ["beta"]
    assert rows[-1] == ["beta=0+"]


def test_distinct_curve_columns_keeps_first_of_each_group():
    values = np.array([[1.0, 2.0, 1.0, 3.0], [0.5, 1.0, 0.5 + 1e-12, 0.0]])
    assert DeformationService.distinct_curve_columns(values) == [0, 1, 3]
    assert DeformationService.count_distinct_curves(values) == 3
    assert DeformationService.distinct_curve_columns(np.zeros((4, 0))) == []


def test_profile_carries_enlacement_for_four_windings():
    profile = deformation.classify_stability(4, 11, 39, GRID)
    assert profile.enlacement in config.ENLACEMENT.values()
    assert set(profile.layer_writhes) == {1, 2, 3}
    assert deformation.classify_stability(3, 11, 16, GRID).enlacement is None


@pytest.mark.parametrize("n, m", [(5, 3), (7, 9), (11, 13), (13, 3)])
def test_stable_four_winding_knots_are_positively_enlaced(n, m):
    diagram = deformation.build_stable_diagram(4, n, m)
    assert deformation.enlacement(diagram) == config.ENLACEMENT["POSITIVE"]


@pytest.mark.slow
def test_negatively_enlaced_knots_are_not_stable():
    for m in range(1, 80, 2):
        if m % 11 == 0:
            continue
        profile = deformation.classify_stability(4, 11, m, GRID)
        if profile.enlacement == config.ENLACEMENT["NEGATIVE"]:
            assert profile.classification == StabilityClass.NOT_STABLE, m


@pytest.mark.parametrize("m", [1, 13, 14, 17, 39, 48, 52, 60, 62, 68, 75, 96, 119, 137])
def test_census_samples(m):
    classification = deformation.classify_stability(4, 11, m, GRID).classification
    if m in STRONGLY_POSITIVE:
        assert classification == StabilityClass.STRONGLY_POSITIVE_STABLE
    elif m in POSITIVE:
        assert classification == StabilityClass.POSITIVELY_STABLE
    elif m in NEGATIVE:
        assert classification == StabilityClass.NEGATIVELY_STABLE
    else:
        assert classification == StabilityClass.NOT_STABLE


@pytest.mark.slow
def test_full_census():
    for m in range(1, 157):
        classification = deformation.classify_stability(4, 11, m, GRID).classification
        if m in STRONGLY_POSITIVE:
            expected = StabilityClass.STRONGLY_POSITIVE_STABLE
        elif m in POSITIVE:
            expected = StabilityClass.POSITIVELY_STABLE
        elif m in NEGATIVE:
            expected = StabilityClass.NEGATIVELY_STABLE
        else:
            expected = StabilityClass.NOT_STABLE
        assert classification == expected, m


def test_deformation_graph_table():
    header, rows, distinct = deformation.deformation_graph(4, 11, 121, 32)
    assert header == ["beta"] + [f"c{i}" for i in range(1, 34)]
    assert len(rows) == 33
    assert rows[0][0] == repr(config.BETA_MAX)
    assert rows[-1][0] == "beta=0+"
    betas = [float(row[0]) for row in rows[:-1]]
    assert betas == sorted(betas, reverse=True)
    # Every value is normalized to be positive at 2*pi
    assert all(float(v) > 0 for v in rows[0][1:])
    assert distinct == 3


def test_stable_diagram():
    diagram = deformation.build_stable_diagram(2, 3, 3)
    assert diagram.crossing_count == 3
    assert diagram.params.is_stable_limit


def test_stable_diagram_without_regular_phase():
    with pytest.raises(LimitSingularError):
        deformation.build_stable_diagram(2, 3, 6)


def test_classification_needs_a_cylinder_knot():
    with pytest.raises(InvalidParametersError):
        deformation.classify_stability(2, 3, 3, GRID)
