#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Diagram service class, turns billiard parameters into knot diagrams
"""

import logging
import math
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np

from src import config
from src.entities.billiard_params import BilliardParams, Geometry
from src.entities.crossing import Crossing
from src.entities.knot_diagram import KnotDiagram
from src.exceptions import (DegenerateProjectionError, InvalidParametersError,
                            NoValidPhaseError, SingularPhaseError, UnsupportedLinkError)
from src.services.trajectory_service import TrajectoryService
from src.utils.rational_util import RationalUtil

logger = logging.getLogger(__name__)

# Strict interior test for segment parameters in float arithmetic
_INTERIOR_EPS = 1e-12


class DiagramService:
    """Diagram service class"""

    def __init__(self):
        """Initialize diagram service"""
        self.__trajectory = TrajectoryService()

    # ------------------------------------------------------------------
    # Crossing enumeration
    # ------------------------------------------------------------------

    @staticmethod
    def expected_crossing_count(params: BilliardParams) -> int:
        """Number of double points of the projection"""
        if params.geometry == Geometry.CUBE:
            return 2 * params.s * params.n - params.s - params.n
        return (params.s - 1) * params.n

    def enumerate_crossings(self, params: BilliardParams) -> List[Crossing]:
        """All double points of the projection, numbered by ascending smaller parameter

        Args:
            params (BilliardParams): Curve parameters

        Returns:
            List[Crossing]: Unresolved crossings

        Raises:
            InvalidParametersError: If the parameters are invalid
            DegenerateProjectionError: If the projection is not generic
        """
        params.validate()
        if params.geometry == Geometry.FLAT_TORUS:
            found = self._flat_torus_crossings(params)
        elif params.geometry == Geometry.CUBE:
            found = self._cube_crossings(params)
        elif params.is_stable_limit:
            found = self.stable_crossings(params.s, params.n)
        else:
            found = self._cylinder_crossings(params)

        expected = self.expected_crossing_count(params)
        if len(found) != expected:
            raise DegenerateProjectionError(
                f"{params}: found {len(found)} crossings, a generic projection has {expected}")
        found.sort(key=lambda c: (float(min(c.t, c.t_prime)), float(max(c.t, c.t_prime))))
        logger.debug("%s: %d crossings", params, len(found))
        return [c.with_index(i + 1) for i, c in enumerate(found)]

    @staticmethod
    def cylinder_combinatorics(s: int, n: int) -> List[Tuple[int, int, int]]:
        """Combinatorial data (k, k', l) of the crossings of a cylinder knot

        Chord a meets chord b = a + l/s (mod n) for every layer 1 <= l <= s - 1,
        with k = 2a + 1 and k' = 2b + 1. The data do not depend on beta.

        Args:
            s (int): Windings
            n (int): Reflections

        Returns:
            list: (k, k', l) triples, (s - 1) * n of them
        """
        if s == 1:
            return []
        inverse = pow(s, -1, n) if n > 1 else 0
        triples = []
        for a in range(n):
            for l in range(1, s):
                b = (a + l * inverse) % n
                triples.append((2 * a + 1, 2 * b + 1, l))
        return triples

    @classmethod
    def stable_crossings(cls, s: int, n: int) -> List[Crossing]:
        """Crossings of the beta -> 0 limit, where x_l becomes l/s

        Returns:
            List[Crossing]: Crossings with exact parameters
        """
        return [Crossing(t=Fraction(k * s + l, 2 * n * s), t_prime=Fraction(k_prime * s - l, 2 * n * s),
                         k=k, k_prime=k_prime, l=l)
                for k, k_prime, l in cls.cylinder_combinatorics(s, n)]

    def _cylinder_crossings(self, params: BilliardParams) -> List[Crossing]:
        """Intersect the chords of the star polygon in the development of the slice

        Every intersection is snapped to the closest offset x_l(beta) and
        checked against the combinatorial rule b = a + l/s (mod n).
        """
        s, n, beta = params.s, params.n, params.beta
        theta = self.__trajectory.chord_angle(s, n, beta)
        offsets = {l: self.__trajectory.layer_offset(beta, l, s, n) for l in range(1, s)}
        inverse = pow(s, -1, n) if n > 1 else 0
        found = []
        for a in range(n):
            for b in range(a, n):
                # Chord b turned back by j slices, relative to the start of chord a
                lo = math.floor(((b - a) * theta - theta) / beta)
                hi = math.ceil(((b - a) * theta + theta) / beta)
                for j in range(lo, hi + 1):
                    start = (b - a) * theta - j * beta
                    # A chord meeting its own copy one or more slices further on counts once
                    if abs(start) >= theta or (b == a and j <= 0):
                        continue
                    hit = self._chord_intersection(theta, start)
                    if hit is None:
                        continue
                    u, v = hit
                    x_a, x_b = 2 * u - 1, 2 * v - 1
                    if abs(x_a + x_b) > config.SNAP_TOLERANCE:
                        raise DegenerateProjectionError(
                            f"{params}: chords {a} and {b} meet off their common bisector")
                    plus, minus, x = (a, b, x_a) if x_a > 0 else (b, a, x_b)
                    layer = self._snap_layer(x, offsets)
                    if layer is None or (plus + layer * inverse - minus) % n != 0:
                        raise DegenerateProjectionError(
                            f"{params}: unexpected crossing of chords {a} and {b} at offset {x:.12f}")
                    k, k_prime = 2 * plus + 1, 2 * minus + 1
                    x_l = offsets[layer]
                    found.append(Crossing(t=(k + x_l) / (2 * n), t_prime=(k_prime - x_l) / (2 * n),
                                          k=k, k_prime=k_prime, l=layer))
        return found

    @staticmethod
    def _chord_intersection(theta: float, start: float) -> Optional[Tuple[float, float]]:
        """Intersection of the chord from angle 0 to theta with the chord from start to start + theta

        Returns:
            tuple|None: Chord parameters (u, v) of a strictly interior intersection
        """
        rx, ry = math.cos(theta) - 1.0, math.sin(theta)
        qx0, qy0 = math.cos(start), math.sin(start)
        qx, qy = math.cos(start + theta) - qx0, math.sin(start + theta) - qy0
        denom = rx * qy - ry * qx
        if abs(denom) < config.SIGN_TOLERANCE:
            return None
        wx, wy = qx0 - 1.0, qy0
        u = (wx * qy - wy * qx) / denom
        v = (wx * ry - wy * rx) / denom
        if _INTERIOR_EPS < u < 1 - _INTERIOR_EPS and _INTERIOR_EPS < v < 1 - _INTERIOR_EPS:
            return u, v
        return None

    @staticmethod
    def _snap_layer(x: float, offsets: Dict[int, float]) -> Optional[int]:
        for layer, value in offsets.items():
            if abs(value - x) < config.SNAP_TOLERANCE:
                return layer
        return None

    def _flat_torus_crossings(self, params: BilliardParams) -> List[Crossing]:
        """Crossings of (s t, g(n t)) on the annulus

        Two parameters meet iff t - t' = j/s and t + t' = c/n (mod 1). The strand
        with floor(2n t) odd is the one at offset +l/s.
        """
        s, n = params.s, params.n
        seen = set()
        found = []
        for j in range(1, s):
            for c in range(2 * n):
                t1 = (Fraction(c, 2 * n) + Fraction(j, 2 * s)) % 1
                t2 = (t1 - Fraction(j, s)) % 1
                key = frozenset((t1, t2))
                if key in seen:
                    continue
                seen.add(key)
                t, t_prime = (t1, t2) if math.floor(2 * n * t1) % 2 == 1 else (t2, t1)
                k = math.floor(2 * n * t)
                layer = (2 * n * t - k) * s
                k_prime = 2 * n * t_prime + Fraction(layer, s)
                if k % 2 != 1 or layer.denominator != 1 or k_prime.denominator != 1 or not 0 < layer < s:
                    raise DegenerateProjectionError(f"{params}: crossing at t={t1} is not on a layer")
                found.append(Crossing(t=t, t_prime=t_prime, k=k, k_prime=int(k_prime), l=int(layer)))
        return found

    def _cube_crossings(self, params: BilliardParams) -> List[Crossing]:
        """Crossings of the Lissajous projection (g(s t + 1/4), g(n t)), exactly

        The projection is a closed polyline with corners where x or y hits a
        wall. Non-adjacent pieces are intersected in rational arithmetic.
        """
        s, n = params.s, params.n
        breakpoints = sorted({Fraction(2 * i - 1, 4 * s) for i in range(1, 2 * s + 1)}
                             | {Fraction(i, 2 * n) for i in range(2 * n)})
        pieces = []
        for idx, t0 in enumerate(breakpoints):
            t1 = breakpoints[idx + 1] if idx + 1 < len(breakpoints) else breakpoints[0] + 1
            pieces.append((t0, t1, self._lissajous_point(s, n, t0), self._lissajous_point(s, n, t1)))

        found = []
        last = len(pieces) - 1
        for i in range(len(pieces)):
            for j in range(i + 2, len(pieces)):
                if i == 0 and j == last:
                    continue
                hit = self._segment_intersection(pieces[i], pieces[j], params)
                if hit is not None:
                    found.append(Crossing(t=hit[0] % 1, t_prime=hit[1] % 1))
        return found

    def _lissajous_point(self, s: int, n: int, t: Fraction) -> Tuple[Fraction, Fraction]:
        return (self.__trajectory.sawtooth(s * t + Fraction(1, 4)), self.__trajectory.sawtooth(n * t))

    @staticmethod
    def _segment_intersection(first, second, params) -> Optional[Tuple[Fraction, Fraction]]:
        """Exact intersection of two projection pieces

        Returns:
            tuple|None: Curve parameters (t, t') of a proper crossing

        Raises:
            DegenerateProjectionError: If the pieces touch or overlap
        """
        t0, t1, (px, py), (px1, py1) = first
        u0, u1, (qx, qy), (qx1, qy1) = second
        rx, ry = px1 - px, py1 - py
        qdx, qdy = qx1 - qx, qy1 - qy
        wx, wy = qx - px, qy - py
        denom = rx * qdy - ry * qdx
        if denom == 0:
            if wx * ry - wy * rx != 0:
                return None
            # Collinear: overlapping pieces are degenerate
            length = rx * rx + ry * ry
            a = (wx * rx + wy * ry) / length
            b = ((qx1 - px) * rx + (qy1 - py) * ry) / length
            if max(a, b) >= 0 and min(a, b) <= 1:
                raise DegenerateProjectionError(f"{params}: projection pieces overlap")
            return None
        u = (wx * qdy - wy * qdx) / denom
        v = (wx * ry - wy * rx) / denom
        if 0 < u < 1 and 0 < v < 1:
            return t0 + u * (t1 - t0), u0 + v * (u1 - u0)
        if 0 <= u <= 1 and 0 <= v <= 1:
            raise DegenerateProjectionError(f"{params}: projection passes through a corner twice")
        return None

    # ------------------------------------------------------------------
    # Phases
    # ------------------------------------------------------------------

    @staticmethod
    def is_always_singular(params: BilliardParams, crossing: Crossing) -> bool:
        """Whether m (t - t') is an integer, so no phase separates the two strands"""
        value = params.m * (crossing.t - crossing.t_prime)
        return RationalUtil.is_integer(value, config.SNAP_TOLERANCE)

    def singular_phases(self, params: BilliardParams, crossings: List[Crossing]) -> List[Fraction]:
        """Phases in [0, 1) at which some crossing has equal heights

        Heights agree iff sin(pi (m (t + t') + 2 phase)) sin(pi m (t - t')) = 0.

        Raises:
            NoValidPhaseError: If a crossing is singular for every phase
        """
        phases = set()
        for c in crossings:
            if self.is_always_singular(params, c):
                raise NoValidPhaseError(f"{params}: crossing {c.index} is singular for every phase")
            base = -params.m * c.exact_sum(params.n) / 2
            phases.add(base % 1)
            phases.add((base + Fraction(1, 2)) % 1)
        return sorted(phases)

    def choose_phase(self, params: BilliardParams, crossings: List[Crossing] = None) -> Fraction:
        """Midpoint of the largest gap between singular phases

        Ties go to the first gap in ascending order.

        Args:
            params (BilliardParams): Curve parameters
            crossings (list, optional): Crossings, enumerated when omitted

        Returns:
            Fraction: Regular phase in [0, 1)
        """
        if crossings is None:
            crossings = self.enumerate_crossings(params)
        if not crossings:
            return Fraction(0)
        singular = self.singular_phases(params, crossings)
        best_start, best_gap = None, Fraction(-1)
        for i, start in enumerate(singular):
            end = singular[i + 1] if i + 1 < len(singular) else singular[0] + 1
            if end - start > best_gap:
                best_start, best_gap = start, end - start
        return (best_start + best_gap / 2) % 1

    def choose_small_phase(self, params: BilliardParams, crossings: List[Crossing] = None) -> Fraction:
        """Half the smallest positive singular phase

        Used for symmetric unions, where the phase has to stay close to 0.
        """
        if crossings is None:
            crossings = self.enumerate_crossings(params)
        if not crossings:
            return Fraction(0)
        positive = [p for p in self.singular_phases(params, crossings) if p > 0]
        return min(positive) / 2

    # ------------------------------------------------------------------
    # Resolution
    # ------------------------------------------------------------------

    def height_difference(self, params: BilliardParams, crossing: Crossing, phase):
        """g(m t + phase) - g(m t' + phase)"""
        return (self.__trajectory.height(params, crossing.t, phase)
                - self.__trajectory.height(params, crossing.t_prime, phase))

    def orientation(self, params: BilliardParams, crossing: Crossing) -> int:
        """Sign of cross(direction at t, direction at t') in a positively oriented chart"""
        if params.geometry == Geometry.CYLINDER:
            # The t' chord is the t chord turned counter-clockwise by l*beta/n, in ]0, pi[
            return 1
        d1 = self.__trajectory.projected_direction(params, crossing.t)
        d2 = self.__trajectory.projected_direction(params, crossing.t_prime)
        cross = d1[0] * d2[1] - d1[1] * d2[0]
        if cross == 0:
            raise DegenerateProjectionError(f"{params}: tangency at crossing {crossing.index}")
        return 1 if cross > 0 else -1

    def resolve_diagram(self, params: BilliardParams, crossings: List[Crossing], phase) -> KnotDiagram:
        """Fix over/under and signs at a phase

        The strand with the larger height is over; the sign is the sign of
        cross(over direction, under direction).

        Args:
            params (BilliardParams): Curve parameters
            crossings (list): Unresolved crossings
            phase (Fraction): Phase

        Returns:
            KnotDiagram: Resolved diagram

        Raises:
            SingularPhaseError: If a crossing has equal heights at the phase
        """
        phase = RationalUtil.parse(phase)
        params = params.with_phase(phase)
        resolved = []
        for c in crossings:
            dz = self.height_difference(params, c, phase)
            if dz == 0 or abs(dz) < config.SIGN_TOLERANCE:
                raise SingularPhaseError(
                    f"{params}: crossing {c.index} is singular at phase {RationalUtil.format(phase)}")
            over_first = dz > 0
            direction = self.orientation(params, c)
            resolved.append(c.resolved(direction if over_first else -direction, over_first))
        return self.assemble(params, resolved)

    @staticmethod
    def assemble(params: Optional[BilliardParams], crossings: List[Crossing]) -> KnotDiagram:
        """Build Gauss and PD codes from resolved crossings

        Edge e runs from the (e-1)-th to the e-th passage through a crossing,
        edge 2N closes the loop.
        """
        events = []
        for c in crossings:
            events.append((c.t, c.index, c.over_first))
            events.append((c.t_prime, c.index, not c.over_first))
        events.sort(key=lambda e: e[0])
        gauss = [index if over else -index for _, index, over in events]

        total = len(events)
        over_at, under_at = {}, {}
        for position, (_, index, over) in enumerate(events):
            (over_at if over else under_at)[index] = position

        def incoming(position):
            return position if position > 0 else total

        pd = []
        for c in sorted(crossings, key=lambda x: x.index):
            u, o = under_at[c.index], over_at[c.index]
            in_u, out_u, in_o, out_o = incoming(u), u + 1, incoming(o), o + 1
            if c.sign > 0:
                pd.append([in_u, out_o, out_u, in_o])
            else:
                pd.append([in_u, in_o, out_u, out_o])
        return KnotDiagram(params, sorted(crossings, key=lambda x: x.index), gauss, pd)

    def build_diagram(self, params: BilliardParams, phase=None) -> KnotDiagram:
        """Enumerate, pick a phase when none is given, and resolve

        Args:
            params (BilliardParams): Curve parameters
            phase (Fraction|str, optional): Phase, chosen automatically when omitted

        Returns:
            KnotDiagram: Knot diagram
        """
        crossings = self.enumerate_crossings(params)
        if phase is None:
            phase = self.choose_phase(params, crossings)
        diagram = self.resolve_diagram(params, crossings, phase)
        logger.info("Built %s at phase %s", diagram, RationalUtil.format(diagram.phase))
        return diagram

    def factor_knot_diagram(self, s: int, n: int, m: int, a: int, phase=None) -> KnotDiagram:
        """Knot of Z(s, a n, a m) in the slice of angle 2*pi/a"""
        if a < 1:
            raise InvalidParametersError(f"slice divisor must be positive, got {a}")
        params = BilliardParams(Geometry.CYLINDER, s, n, m, beta=2 * math.pi / a)
        return self.build_diagram(params, phase)

    # ------------------------------------------------------------------
    # Diagram facts
    # ------------------------------------------------------------------

    @staticmethod
    def layer_writhe(diagram: KnotDiagram) -> Dict[int, int]:
        """Sum of crossing signs per layer l"""
        writhes = {}
        for c in diagram.crossings:
            if c.l is not None:
                writhes[c.l] = writhes.get(c.l, 0) + c.sign
        return writhes

    def verify_cyclic_symmetry(self, diagram: KnotDiagram, d: int) -> bool:
        """Check that t -> t + 1/d maps the diagram to itself

        For d = 2 the shift combined with the height flip z -> 1 - z also
        counts; then over and under swap while signs are kept.

        Args:
            diagram (KnotDiagram): Diagram built from billiard parameters
            d (int): Period, at least 2

        Returns:
            bool: Whether the diagram has the symmetry
        """
        if d < 2:
            raise InvalidParametersError(f"period must be at least 2, got {d}")
        crossings = diagram.crossings
        if not crossings:
            return True
        strands = sorted(((float(p) % 1.0, c, p == c.over_param)
                          for c in crossings for p in (c.t, c.t_prime)), key=lambda x: x[0])
        values = np.array([entry[0] for entry in strands])

        def locate(value):
            value = float(value) % 1.0
            i = int(np.searchsorted(values, value))
            for idx in ((i - 1) % len(values), i % len(values)):
                gap = abs(values[idx] - value)
                if min(gap, 1.0 - gap) < config.SNAP_TOLERANCE:
                    return strands[idx]
            return None

        def preserved(flip: bool) -> bool:
            shift = Fraction(1, d)
            for c in crossings:
                over_image = locate(c.over_param + shift)
                under_image = locate(c.under_param + shift)
                if over_image is None or under_image is None or over_image[1] is not under_image[1]:
                    return False
                if over_image[2] == flip or over_image[1].sign != c.sign:
                    return False
            return True

        return preserved(False) or (d == 2 and preserved(True))

    def symmetries(self, diagram: KnotDiagram) -> List[int]:
        """All periods d >= 2 (up to max(n, m)) of a billiard diagram"""
        params = diagram.params
        if params is None:
            return []
        return [d for d in range(2, max(params.n, params.m) + 1) if self.verify_cyclic_symmetry(diagram, d)]

    # ------------------------------------------------------------------
    # PD input
    # ------------------------------------------------------------------

    def from_pd_code(self, pd: List[List[int]]) -> KnotDiagram:
        """Read a knot diagram from a PD code

        Entries are X[a, b, c, d] counter-clockwise from the incoming under
        edge a. The orientation of over strands is recovered by walking the
        knot from the first under strand.

        Args:
            pd (list): PD code

        Returns:
            KnotDiagram: Diagram without billiard parameters

        Raises:
            UnsupportedLinkError: If the code describes a link
            InvalidParametersError: If the code is malformed
        """
        if not pd:
            return KnotDiagram(None, [], [], [])
        occurrences = {}
        for ci, entry in enumerate(pd):
            if len(entry) != 4:
                raise InvalidParametersError(f"PD entry {entry} does not have four edges")
            for position, label in enumerate(entry):
                occurrences.setdefault(label, []).append((ci, position))
        if any(len(places) != 2 for places in occurrences.values()):
            raise InvalidParametersError("every PD edge label must occur exactly twice")

        # (crossing, is_over) per passage, and the over direction of each crossing
        events = []
        over_exit = {}
        crossing, position = 0, 0
        for _ in range(2 * len(pd)):
            exit_position = {0: 2, 1: 3, 3: 1}.get(position)
            if exit_position is None:
                raise InvalidParametersError(f"PD crossing {crossing} is entered along its outgoing under edge")
            events.append((crossing, position != 0))
            if position != 0:
                over_exit[crossing] = exit_position
            label = pd[crossing][exit_position]
            entry = [p for p in occurrences[label] if p != (crossing, exit_position)]
            if not entry:
                entry = [(crossing, exit_position)]
            crossing, position = entry[0]
            if (crossing, position) == (0, 0):
                break
        if len(events) != 2 * len(pd) or (crossing, position) != (0, 0):
            raise UnsupportedLinkError(f"PD code with {len(pd)} crossings has more than one component")

        total = len(events)
        first_seen, second_seen = {}, {}
        for step, (ci, _) in enumerate(events):
            (second_seen if ci in first_seen else first_seen)[ci] = step
        crossings = []
        for ci in range(len(pd)):
            if ci not in over_exit:
                raise UnsupportedLinkError(f"PD crossing {ci} is never passed over")
            # Over strand leaving through b runs d -> b, a positive crossing
            sign = 1 if over_exit[ci] == 1 else -1
            t = Fraction(first_seen[ci], total)
            t_prime = Fraction(second_seen[ci], total)
            over_first = events[first_seen[ci]][1]
            crossings.append(Crossing(ci + 1, t, t_prime, sign=sign, over_first=over_first))
        return self.assemble(None, crossings)

    def load_diagram(self, data: dict) -> KnotDiagram:
        """Read a diagram from its JSON form, {"params": ..., "pd": [...]}"""
        if 'pd' not in data:
            raise InvalidParametersError("diagram JSON has no 'pd' entry")
        diagram = self.from_pd_code(data['pd'])
        if data.get('params'):
            params = BilliardParams.from_dict(data['params'])
            return KnotDiagram(params, diagram.crossings, diagram.gauss_code, diagram.pd_code)
        return diagram
