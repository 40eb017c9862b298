"""Exception hierarchy shared by the library and the CLI.

Each error carries the CLI exit code it maps to.
"""

from __future__ import annotations


class HypKacError(Exception):
    exit_code = 1


class InvalidParameter(HypKacError, ValueError):
    """Bad algebra parameter or index (e.g. ``a < 3``)."""

    exit_code = 2


class DominanceViolation(HypKacError):
    """``|i - j| > 1``: the Cartan element of the triple is not dominant."""

    exit_code = 3


class RegionViolation(HypKacError):
    """A root outside ``L`` or ``-L`` was passed where one inside is required."""

    exit_code = 4


class UnsupportedTypeC(HypKacError):
    """The Casimir branch for type-C roots needs a constant with no closed form."""

    exit_code = 4


class NonPositiveWeight(HypKacError, ValueError):
    exit_code = 2


class InconsistencyError(HypKacError):
    """An internal cross-check failed (census conservation, integrality, ...)."""

    exit_code = 5
