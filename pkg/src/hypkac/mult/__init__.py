"""Root multiplicities and the module census."""

from hypkac.mult.peterson import CACHE_ENV, BilinearForm, MultTable, mult_table, root_mult
from hypkac.mult.oracle import denominator_mults, weyl_side
from hypkac.mult.census import (
    Affine,
    Census,
    CensusRow,
    Interval,
    census,
    check_census,
    mirror_census,
    rows_mirror,
    weight_dimension,
)

__all__ = [
    "CACHE_ENV",
    "BilinearForm",
    "MultTable",
    "mult_table",
    "root_mult",
    "denominator_mults",
    "weyl_side",
    "Affine",
    "Census",
    "CensusRow",
    "Interval",
    "census",
    "check_census",
    "mirror_census",
    "rows_mirror",
    "weight_dimension",
]
