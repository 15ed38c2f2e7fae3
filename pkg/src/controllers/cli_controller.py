#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
CLI Controller - Parses command lines and prints results
"""

import argparse
import json
import logging
import os
import re
import sys
from typing import List, Optional

from src import config
from src.entities.billiard_params import BilliardParams, Geometry
from src.entities.knot_diagram import KnotDiagram
from src.exceptions import (BilliardKnotError, DegenerateProjectionError, InvalidParametersError,
                            SymmetryError)
from src.services.catalog_service import CatalogService
from src.services.deformation_service import DeformationService
from src.services.diagram_service import DiagramService
from src.services.invariant_service import InvariantService
from src.services.symunion_service import SymmetricUnionService
from src.utils.file_util import FileUtil
from src.utils.plot_util import PlotUtil
from src.utils.rational_util import RationalUtil

logger = logging.getLogger(__name__)

# Knot names on the command line: Z(3,11,16), T:3,16,11, R(2,11,35), Zst(3,4,4)
_KNOT_NAME = re.compile(r"^(Zst|Z|T|R)[(:]?\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)?$")
_FAMILIES = {"Z": "cylinder", "T": "flat-torus", "R": "cube", "Zst": "stable"}


class CliController:
    """CLI Controller"""

    def __init__(self, out=None):
        """Initialize CLI controller

        Args:
            out (file, optional): Output stream, sys.stdout by default
        """
        self.__out = out or sys.stdout
        self.__diagram_svc = DiagramService()
        self.__invariant_svc = InvariantService()
        self.__deformation_svc = DeformationService()
        self.__symunion_svc = SymmetricUnionService()

    def emit(self, text: str = "") -> None:
        print(text, file=self.__out)

    def print_header(self, title: str) -> None:
        """Print title header

        Args:
            title (str): The title to display
        """
        self.emit("=" * 50)
        self.emit(f"{title.center(48)}")
        self.emit("=" * 50)

    # ------------------------------------------------------------------
    # Parser
    # ------------------------------------------------------------------

    @staticmethod
    def build_parser() -> argparse.ArgumentParser:
        """Build the argument parser with one subcommand per operation"""
        parser = argparse.ArgumentParser(
            prog="billiard-knots",
            description="Billiard knots in cylinders, flat solid tori and cubes")
        parser.add_argument("--log-level", default="WARNING",
                            choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="logging level")
        sub = parser.add_subparsers(dest="command", required=True)

        generate = sub.add_parser("generate", help="build a knot diagram")
        generate.add_argument("geometry", choices=list(config.GEOMETRIES) + ["stable"])
        _add_triple(generate)
        generate.add_argument("--phase", help="height phase p/q, chosen automatically when omitted")
        generate.add_argument("--slice", type=int, default=None, dest="slice_divisor",
                              help="cylinder only: use the slice of angle 2*pi/a")
        generate.add_argument("--format", choices=["json", "pd", "gauss"], default="json")
        generate.add_argument("--out", help="write to this file instead of standard output")

        invariants = sub.add_parser("invariants", help="determinant and Alexander polynomial")
        invariants.add_argument("knot", nargs="*", help="GEOMETRY s n m")
        invariants.add_argument("--diagram", help="JSON file with a 'pd' entry")
        invariants.add_argument("--phase")
        invariants.add_argument("--catalog", help="JSON-lines catalog to record the result in")

        deform = sub.add_parser("deform", help="deformation of Z(s,n,m) as beta -> 0")
        _add_triple(deform)
        deform.add_argument("--grid", type=int, default=config.DEFAULT_GRID_SIZE)
        deform.add_argument("--csv", help="deformation table path, default exports/Z_s_n_m.csv")
        deform.add_argument("--svg", help="also plot one polyline per distinct curve to this path")

        census = sub.add_parser("census", help="classify Z(s,n,m) for a range of m")
        census.add_argument("s", type=int)
        census.add_argument("n", type=int)
        census.add_argument("m_from", type=int)
        census.add_argument("m_to", type=int)
        census.add_argument("--grid", type=int, default=config.DEFAULT_GRID_SIZE)
        census.add_argument("--workers", type=int, default=config.DEFAULT_WORKERS)
        census.add_argument("--catalog", default=config.CATALOG_FILE)
        census.add_argument("--with-invariants", action="store_true")

        compare = sub.add_parser("compare", help="compare two knots, e.g. 'T(3,11,16)' 'T(3,16,11)'")
        compare.add_argument("first")
        compare.add_argument("second")

        symunion = sub.add_parser("symunion", help="symmetric union decomposition")
        symunion.add_argument("family", choices=["R", "T"])
        _add_triple(symunion)
        symunion.add_argument("--format", choices=["text", "json"], default="text")
        return parser

    # ------------------------------------------------------------------
    # Entry
    # ------------------------------------------------------------------

    def run(self, argv: Optional[List[str]] = None) -> int:
        """Parse argv, run the command and map errors to exit codes

        Returns:
            int: Exit code
        """
        parser = self.build_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:
            return int(e.code or 0)
        logging.getLogger().setLevel(args.log_level)

        handlers = {
            "generate": self.cmd_generate,
            "invariants": self.cmd_invariants,
            "deform": self.cmd_deform,
            "census": self.cmd_census,
            "compare": self.cmd_compare,
            "symunion": self.cmd_symunion,
        }
        try:
            return handlers[args.command](args)
        except (DegenerateProjectionError, SymmetryError) as e:
            logger.error("%s", e)
            self.emit(f"Error: {e}")
            return config.EXIT_INCONSISTENT
        except (BilliardKnotError, ValueError) as e:
            self.emit(f"Error: {e}")
            return config.EXIT_INVALID
        except OSError as e:
            self.emit(f"Error: {e}")
            return config.EXIT_ERROR
        except Exception as e:  # noqa: BLE001
            logger.debug("Unexpected error", exc_info=True)
            self.emit(f"Unexpected error: {e}")
            return config.EXIT_ERROR

    # ------------------------------------------------------------------
    # Commands
    # ------------------------------------------------------------------

    def diagram_for(self, geometry: str, s: int, n: int, m: int, phase=None,
                    slice_divisor: Optional[int] = None) -> KnotDiagram:
        """Build the diagram a command line names

        A cylinder with n < 2s + 1 has no classical billiard curve; its family
        continues as the stable knot Z^st(s, n, m), which is built instead.
        """
        if geometry == "stable":
            return self.__deformation_svc.build_stable_diagram(s, n, m, phase)
        if geometry == "cylinder":
            if slice_divisor is not None:
                return self.__diagram_svc.factor_knot_diagram(s, n, m, slice_divisor, phase)
            if n < 2 * s + 1:
                logger.warning("Z(%d,%d,%d) needs n >= 2s + 1, using the stable diagram", s, n, m)
                return self.__deformation_svc.build_stable_diagram(s, n, m, phase)
        params = BilliardParams(Geometry(config.GEOMETRIES[geometry]), s, n, m)
        return self.__diagram_svc.build_diagram(params, phase)

    def cmd_generate(self, args) -> int:
        phase = RationalUtil.parse(args.phase) if args.phase else None
        diagram = self.diagram_for(args.geometry, args.s, args.n, args.m, phase, args.slice_divisor)
        if args.format == "pd":
            text = json.dumps(diagram.pd_code)
        elif args.format == "gauss":
            text = (" ".join(str(e) for e in diagram.gauss_code) + "\n"
                    + " ".join(f"{c.sign:+d}" for c in diagram.crossings))
        else:
            data = diagram.to_dict()
            data['symmetries'] = self.__diagram_svc.symmetries(diagram)
            text = json.dumps(data)
        if args.out:
            if not FileUtil.write_text(args.out, text + "\n"):
                return config.EXIT_ERROR
            self.emit(f"{diagram} written to {args.out}")
        else:
            self.emit(text)
        return config.EXIT_OK

    def cmd_invariants(self, args) -> int:
        if args.diagram:
            if args.knot:
                raise InvalidParametersError("give either --diagram or GEOMETRY s n m, not both")
            diagram = self.__diagram_svc.load_diagram(FileUtil.read_json(args.diagram))
        else:
            geometry, s, n, m = _parse_knot_words(args.knot)
            phase = RationalUtil.parse(args.phase) if args.phase else None
            diagram = self.diagram_for(geometry, s, n, m, phase)
        report = self.__invariant_svc.invariants(diagram)
        if args.catalog and diagram.params is not None:
            CatalogService(args.catalog).record(diagram.params, report)
        self.emit(json.dumps(report.to_dict()))
        return config.EXIT_OK

    def cmd_deform(self, args) -> int:
        profile = self.__deformation_svc.classify_stability(args.s, args.n, args.m, args.grid)
        csv_path = args.csv or os.path.join(config.EXPORT_DIR, f"Z_{args.s}_{args.n}_{args.m}.csv")
        header, rows = profile.csv_rows()
        if not FileUtil.write_csv(csv_path, header, rows):
            return config.EXIT_ERROR
        if args.svg:
            columns = self.__deformation_svc.distinct_curve_columns(profile.values)
            limits = [profile.limit_values[i] for i in columns]
            if not PlotUtil.save_deformation_svg(args.svg, profile.betas, profile.values[:, columns],
                                                 str(profile.params), limits):
                return config.EXIT_ERROR

        self.print_header(f"Deformation of {profile.params}")
        self.emit(f"phase:           {RationalUtil.format(profile.params.phase)}")
        self.emit(f"crossings:       {profile.crossing_count}")
        self.emit(f"classification:  {profile.classification.value}")
        self.emit(f"distinct curves: {profile.distinct_curves}")
        self.emit(f"sign changes:    {sum(profile.sign_changes)}")
        if any(profile.limit_vanishing):
            self.emit(f"vanishing limit: {sum(1 for v in profile.limit_vanishing if v)} crossings")
        if profile.enlacement is not None:
            self.emit(f"enlacement:      {profile.enlacement} {profile.layer_writhes}")
        self.emit(f"table:           {csv_path}")
        if args.svg:
            self.emit(f"plot:            {args.svg}")
        return config.EXIT_OK

    def cmd_census(self, args) -> int:
        results = CatalogService(args.catalog).census(
            args.s, args.n, range(args.m_from, args.m_to + 1), args.grid, args.workers, args.with_invariants)

        self.print_header(f"Census Z({args.s},{args.n},m), m = {args.m_from}..{args.m_to}")
        self.emit(f"{'m':>5}  {'class':<24}{'curves':>7}  enlacement")
        for result in results:
            profile = result['profile']
            if profile is None:
                self.emit(f"{result['m']:>5}  error: {result['error']}")
                continue
            enlacement = profile['enlacement'] or "-"
            self.emit(f"{result['m']:>5}  {profile['classification']:<24}{profile['distinct_curves']:>7}  {enlacement}")
        return config.EXIT_OK

    def cmd_compare(self, args) -> int:
        first = self.diagram_for(*_parse_knot_name(args.first))
        second = self.diagram_for(*_parse_knot_name(args.second))
        verdict, a, b = self.__invariant_svc.compare(first, second)
        self.emit(f"{args.first}: {a}")
        self.emit(f"{args.second}: {b}")
        self.emit(verdict)
        return config.EXIT_OK

    def cmd_symunion(self, args) -> int:
        if args.family == "R":
            decomposition = self.__symunion_svc.decompose_R(args.s, args.n, args.m)
        else:
            decomposition = self.__symunion_svc.decompose_T(args.s, args.n, args.m)
        whole, part, holds = self.__symunion_svc.verify_determinant_square(decomposition)
        if args.format == "json":
            data = decomposition.to_dict()
            data['det'] = whole
            data['partial_det'] = part
            self.emit(json.dumps(data))
        else:
            self.print_header(f"Symmetric union {decomposition.diagram.params}")
            self.emit(f"crossings:        {decomposition.diagram.crossing_count}")
            self.emit(f"axis crossings:   {len(decomposition.axis_crossings)}")
            self.emit(f"off-axis:         {decomposition.off_axis_count}")
            self.emit(f"partial knot:     {decomposition.partial.crossing_count} crossings")
            self.emit(f"det = {whole}, partial det = {part}")
            if decomposition.experimental:
                self.emit("experimental: parameters outside the proven range")
        if not holds:
            raise SymmetryError(f"det {whole} is not the square of the partial det {part}")
        return config.EXIT_OK


def _add_triple(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("s", type=int)
    parser.add_argument("n", type=int)
    parser.add_argument("m", type=int)


def _parse_knot_words(words: List[str]) -> tuple:
    """GEOMETRY s n m from positional words"""
    if len(words) != 4 or words[0] not in list(config.GEOMETRIES) + ["stable"]:
        raise InvalidParametersError("expected GEOMETRY s n m, e.g. 'cylinder 3 11 16'")
    try:
        return words[0], int(words[1]), int(words[2]), int(words[3])
    except ValueError as e:
        raise InvalidParametersError(f"s, n and m must be integers: {e}") from e


def _parse_knot_name(name: str) -> tuple:
    """Knot name like T(3,11,16) to (geometry, s, n, m)"""
    match = _KNOT_NAME.match(name.strip())
    if not match:
        raise InvalidParametersError(f"cannot read knot name '{name}', expected e.g. T(3,11,16)")
    family, s, n, m = match.groups()
    return _FAMILIES[family], int(s), int(n), int(m)

