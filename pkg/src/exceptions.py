#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Error hierarchy shared by all layers.

Every error is a ValueError, so callers that only guard against bad input
keep working.
"""


class BilliardKnotError(ValueError):
    """Base class of all domain errors"""


class InvalidParametersError(BilliardKnotError):
    """A billiard parameter constraint is violated"""


class DegenerateProjectionError(BilliardKnotError):
    """The projection has a triple point, a tangency or an overlap"""


class NoValidPhaseError(BilliardKnotError):
    """Every phase leaves at least one crossing singular"""


class SingularPhaseError(BilliardKnotError):
    """A crossing has zero height difference at the requested phase"""


class LimitSingularError(SingularPhaseError):
    """The beta -> 0 limit diagram has crossings singular for every phase"""


class UnsupportedLinkError(BilliardKnotError):
    """The diagram has more than one component"""


class SymmetryError(BilliardKnotError):
    """An internal consistency check failed"""
