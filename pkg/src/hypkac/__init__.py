"""Rank-2 symmetric hyperbolic Kac-Moody algebras as sl2-modules.

Exact arithmetic throughout: integers are unbounded and every scalar is a
``fractions.Fraction``.
"""

from hypkac.errors import (
    DominanceViolation,
    HypKacError,
    InconsistencyError,
    InvalidParameter,
    NonPositiveWeight,
    RegionViolation,
    UnsupportedTypeC,
)
from hypkac.rootlat import RootKind, RootVec, fseq, qform, reflect, root_kind, roots_in_box
from hypkac.triple import TripleConfig, eigenvalue, is_dominant, make_config, roots_in_L
from hypkac.series import Kind, RootType, Variant, classify_L, exception_sweep, series_kind
from hypkac.mult import census, mirror_census, root_mult, weight_dimension

__version__ = "0.1.0"

__all__ = [
    "DominanceViolation",
    "HypKacError",
    "InconsistencyError",
    "InvalidParameter",
    "NonPositiveWeight",
    "RegionViolation",
    "UnsupportedTypeC",
    "RootKind",
    "RootVec",
    "fseq",
    "qform",
    "reflect",
    "root_kind",
    "roots_in_box",
    "TripleConfig",
    "eigenvalue",
    "is_dominant",
    "make_config",
    "roots_in_L",
    "Kind",
    "RootType",
    "Variant",
    "classify_L",
    "exception_sweep",
    "series_kind",
    "census",
    "mirror_census",
    "root_mult",
    "weight_dimension",
]
