#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Configuration file, defines system constants and configuration items
"""

import math
import os

TOOL_VERSION = "1.0.0"

# Geometry names accepted on the command line
GEOMETRIES = {
    "cylinder": "cylinder",
    "flat-torus": "flat-torus",
    "cube": "cube",
}

# Deformation sweep: logarithmic grid over ]0, 2*pi]
DEFAULT_GRID_SIZE = 2048
BETA_MIN = 1e-4
BETA_MAX = 2 * math.pi

# Numerical tolerances
SNAP_TOLERANCE = 1e-9        # matching chord intersections against x_l(beta)
SIGN_TOLERANCE = 1e-12       # |value| below this counts as zero
BETA_TOLERANCE = 1e-12       # slack when comparing beta with 2*pi
CURVE_TOLERANCE = 1e-9       # two deformation curves closer than this are the same curve

# Census worker pool
DEFAULT_WORKERS = 4

# Exit codes
EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INVALID = 2
EXIT_INCONSISTENT = 3

# Data file paths
DATA_DIR = "data"
CATALOG_FILE = os.path.join(DATA_DIR, "catalog.jsonl")
EXPORT_DIR = "exports"

# Enlacement flag values (s = 4 only)
ENLACEMENT = {
    "POSITIVE": "positive",
    "NEGATIVE": "negative",
    "UNDETERMINED": "undetermined",
}

# Knot comparison verdicts
COMPARISON_AGREE = "invariants agree (up to mirror)"
COMPARISON_DET = "distinguished by determinant"
COMPARISON_ALEXANDER = "distinguished by Alexander polynomial"
