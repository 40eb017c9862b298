"""The sl2-triple configuration: the two real roots carrying X, the eigenvalue
functional of H, the region L and the k0 constants.

``X`` has components in the root spaces ``theta_alpha = (F_{i+1}, F_i)`` and
``theta_beta = (F_j, F_{j+1})``.  ``H`` acts on the root space of ``(s, t)`` by
``A*s + B*t`` where ``(A, B)`` is fixed by requiring eigenvalue 2 on both
components of ``X``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from hypkac.errors import DominanceViolation, InconsistencyError, InvalidParameter, RegionViolation
import numpy as np

from hypkac.rootlat import RootVec, check_a, fseq, in_R, is_root, pairing, qform, region_row

__all__ = [
    "Side",
    "TripleConfig",
    "make_config",
    "solve_h_functional",
    "is_dominant",
    "eigenvalue",
    "in_L",
    "in_L_spectral",
    "in_L_or_neg",
    "active_side",
    "c0_squared",
    "k0_star",
    "k0_pairing",
    "roots_in_L",
    "L_arrays",
    "chord_length_sq",
]


class Side(enum.Enum):
    ALPHA = "alpha"
    BETA = "beta"
    NEITHER = "neither"


def solve_h_functional(a: int, i: int, j: int) -> tuple[Fraction, Fraction]:
    """Solve ``A F_{i+1} + B F_i = 2`` and ``A F_j + B F_{j+1} = 2`` exactly."""
    p, q = fseq(a, i + 1), fseq(a, i)
    r, u = fseq(a, j), fseq(a, j + 1)
    det = p * u - q * r
    return Fraction(2 * (u - q), det), Fraction(2 * (p - r), det)


def c0_squared(a: int, i: int) -> Fraction:
    """``2 / (a (F_i^2 + F_{i+1}^2) - 4 F_i F_{i+1} - 2)``; the denominator is ``(a-2)(1 + (a+2) F_i F_{i+1}) > 0``."""
    fi, fi1 = fseq(a, i), fseq(a, i + 1)
    return Fraction(2, a * (fi * fi + fi1 * fi1) - 4 * fi * fi1 - 2)


@dataclass(frozen=True)
class TripleConfig:
    a: int
    i: int
    j: int
    theta_alpha: RootVec
    theta_beta: RootVec
    h_functional: tuple[Fraction, Fraction]
    c0_sq: Fraction

    @property
    def shape(self) -> str:
        if self.i == self.j:
            return "ij"
        return "ij1" if self.i == self.j - 1 else "ji1"

    def theta(self, side: Side) -> RootVec:
        if side is Side.ALPHA:
            return self.theta_alpha
        if side is Side.BETA:
            return self.theta_beta
        raise ValueError("no root on side NEITHER")

    def __str__(self) -> str:
        return f"(a={self.a}, i={self.i}, j={self.j})"


def make_config(a: int, i: int, j: int) -> TripleConfig:
    check_a(a)
    if i < 0 or j < 0:
        raise InvalidParameter("i and j must be >= 0")
    if abs(i - j) > 1:
        raise DominanceViolation(f"H is not dominant for i={i}, j={j}: need |i - j| <= 1")
    theta_a = RootVec(fseq(a, i + 1), fseq(a, i))
    theta_b = RootVec(fseq(a, j), fseq(a, j + 1))
    return TripleConfig(a, i, j, theta_a, theta_b, solve_h_functional(a, i, j), c0_squared(a, i))


def is_dominant(a: int, i: int, j: int) -> bool:
    """Both simple roots take non-negative values on the solved H."""
    check_a(a)
    if i < 0 or j < 0:
        raise InvalidParameter("i and j must be >= 0")
    A, B = solve_h_functional(a, i, j)
    return A >= 0 and B >= 0


def eigenvalue(cfg: TripleConfig, v: RootVec) -> Fraction:
    A, B = cfg.h_functional
    return A * v.s + B * v.t


def in_L(cfg: TripleConfig, v: RootVec) -> bool:
    """Inequality definition of L (root-region part plus the case-specific strict bound)."""
    x, y = v.s, v.t
    if x < 0 or y < 0 or (x == 0 and y == 0) or qform(cfg.a, v) > 1:
        return False
    k, l = cfg.theta_alpha
    if cfg.i == cfg.j - 1:
        return x < k
    if cfg.i == cfg.j:
        return x + y < k + l
    return y < l


def in_L_spectral(cfg: TripleConfig, v: RootVec) -> bool:
    return is_root(cfg.a, v) and 0 < eigenvalue(cfg, v) < 2


def in_L_or_neg(cfg: TripleConfig, v: RootVec) -> bool:
    return in_L(cfg, v) or in_L(cfg, -v)


def active_side(cfg: TripleConfig, v: RootVec) -> Side:
    """Which component of Y can act non-trivially on the root space of ``v``."""
    if not in_L_or_neg(cfg, v):
        raise RegionViolation(f"{v} is not in L or -L for {cfg}")
    # on -L the lowering direction flips; by central symmetry use -v
    w = v if in_L(cfg, v) else -v
    a = cfg.a
    alpha = in_R(a, w - cfg.theta_alpha)
    beta = in_R(a, w - cfg.theta_beta)
    if alpha and beta:
        raise InconsistencyError(f"both differences of {v} are roots for {cfg}")
    if alpha:
        return Side.ALPHA
    if beta:
        return Side.BETA
    return Side.NEITHER


def k0_star(cfg: TripleConfig) -> Fraction:
    """Closed-form k0 that depends only on ``a`` and ``i``; always negative."""
    a, i = cfg.a, cfg.i
    fi, fi1 = fseq(a, i), fseq(a, i + 1)
    return Fraction(-2 * (2 * fi1 - a * fi), a * (fi * fi + fi1 * fi1) - 4 * fi * fi1 - 2)


def k0_pairing(cfg: TripleConfig, v: RootVec, c_sq_override: Fraction | None = None) -> Fraction:
    """Root-dependent k0: ``-c^2 * <v, theta_active>``."""
    side = active_side(cfg, v)
    if side is Side.NEITHER:
        raise RegionViolation(f"{v} has no active side for {cfg}")
    w = v if in_L(cfg, v) else -v
    c_sq = cfg.c0_sq if c_sq_override is None else Fraction(c_sq_override)
    return -c_sq * pairing(cfg.a, w, cfg.theta(side))


def _box_bounds(cfg: TripleConfig) -> tuple[int, int]:
    k, l = cfg.theta_alpha
    a = cfg.a
    if cfg.i == cfg.j:
        return k + l - 1, k + l - 1
    if cfg.i == cfg.j - 1:
        # f(s, t) <= 1 forces t <= a s + 1
        return k - 1, a * (k - 1) + 1
    return a * (l - 1) + 1, l - 1


def _L_rows(cfg: TripleConfig):
    """``(s, t_lo, t_hi)`` for every non-empty column of L."""
    s_max, t_max = _box_bounds(cfg)
    k, l = cfg.theta_alpha
    for s in range(s_max + 1):
        lo, hi = region_row(cfg.a, s)
        lo, hi = max(lo, 0, 1 if s == 0 else 0), min(hi, t_max)
        if cfg.i == cfg.j:
            hi = min(hi, k + l - 1 - s)
        elif cfg.i == cfg.j + 1:
            hi = min(hi, l - 1)
        if lo <= hi:
            yield s, lo, hi


def roots_in_L(cfg: TripleConfig) -> list[RootVec]:
    """All lattice points of L, lexicographically sorted."""
    return [RootVec(s, t) for s, lo, hi in _L_rows(cfg) for t in range(lo, hi + 1)]


def L_arrays(cfg: TripleConfig) -> tuple[np.ndarray, np.ndarray]:
    """Coordinates of L as int64 arrays in the order of ``roots_in_L``."""
    rows = list(_L_rows(cfg))
    if not rows:
        return np.zeros(0, np.int64), np.zeros(0, np.int64)
    s0 = np.array([r[0] for r in rows], np.int64)
    lo = np.array([r[1] for r in rows], np.int64)
    n = np.array([r[2] - r[1] + 1 for r in rows], np.int64)
    s = np.repeat(s0, n)
    # t = lo + position within the column
    start = np.repeat(np.cumsum(n) - n, n)
    t = np.repeat(lo, n) + np.arange(int(n.sum()), dtype=np.int64) - start
    return s, t


def chord_length_sq(a: int, line: str, b: Fraction | int) -> Fraction:
    """Squared length of the chord cut from ``x^2 - a x y + y^2 = 1`` by a line.

    ``line`` is ``"diag"`` for ``y = -x + b``, ``"horizontal"`` for ``y = b``
    and ``"vertical"`` for ``x = b``.  Computed from the quadratic's
    discriminant, so exact.
    """
    b = Fraction(b)
    if line == "diag":
        # substitute y = b - x: (a+2) x^2 - (a+2) b x + b^2 - 1 = 0
        qa, qb, qc = a + 2, -(a + 2) * b, b * b - 1
        dx_sq = (qb * qb - 4 * qa * qc) / (qa * qa)
        return 2 * dx_sq
    if line in ("horizontal", "vertical"):
        qa, qb, qc = 1, -a * b, b * b - 1
        return (qb * qb - 4 * qa * qc) / (qa * qa)
    raise InvalidParameter(f"unknown line family {line!r}")
