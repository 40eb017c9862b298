"""Classification of roots in L and of the sl2-modules through them.

Roots in L get type A (``Y`` kills the root space), B (real roots: full-line
modules) or C (imaginary roots ``theta - u`` for a real root ``u``).  For type
A/B roots the Casimir constant ``8 mu`` is exact; the sign of
``8 mu + 1`` separates unitary principal from complementary series.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

import numpy as np

from hypkac.errors import InconsistencyError, InvalidParameter, RegionViolation, UnsupportedTypeC
from hypkac.rootlat import FSeq, RootKind, RootVec, check_a, in_R, positive_real_roots_up_to, root_kind
from hypkac.triple import (
    L_arrays,
    Side,
    TripleConfig,
    active_side,
    eigenvalue,
    in_L,
    in_L_or_neg,
    k0_pairing,
    k0_star,
    make_config,
    roots_in_L,
)

__all__ = [
    "RootType",
    "Variant",
    "Kind",
    "KpmKind",
    "KpmStatus",
    "CasimirData",
    "SeriesVerdict",
    "SweepRow",
    "root_type",
    "casimir_8mu",
    "s1_zero_status",
    "series_kind",
    "classify_L",
    "cartan_modules",
    "real_roots_in_L",
    "TypeGrid",
    "type_grid",
    "type_theorem_counterexamples",
    "sweep_n",
    "exception_sweep",
    "principal_tuples",
    "sweep_discrepancies",
    "monotonicity_scan",
    "MonotonicityReport",
    "FigureData",
    "figure_dataset",
]


class RootType(enum.Enum):
    A = "A"
    B = "B"
    C = "C"


class Variant(enum.Enum):
    STAR = "star"
    PAIRING = "pairing"


class Kind(enum.Enum):
    LOWEST_WEIGHT = "lowest_weight"
    HIGHEST_WEIGHT = "highest_weight"
    UNITARY_PRINCIPAL = "unitary_principal"
    COMPLEMENTARY = "complementary"
    SL2_ITSELF = "sl2_itself"
    CARTAN_PRINCIPAL = "cartan_principal"
    ROUTED_TO_PARTNER = "routed_to_partner"
    UNDETERMINED_TYPE_C = "undetermined_type_c"


FULL_LINE = frozenset({Kind.UNITARY_PRINCIPAL, Kind.COMPLEMENTARY})


class KpmKind(enum.Enum):
    NO_REAL_SOLUTION = "no_real_solution"
    IRRATIONAL_PAIR = "irrational_pair"
    RATIONAL_NON_INTEGER = "rational_non_integer"
    INTEGER_SOLUTION = "integer_solution"


@dataclass(frozen=True)
class KpmStatus:
    kind: KpmKind
    k: int | None = None

    def __str__(self) -> str:
        if self.kind is KpmKind.INTEGER_SOLUTION:
            return f"integer_solution({self.k})"
        return self.kind.value


@dataclass(frozen=True)
class CasimirData:
    lam: Fraction
    k0: Fraction
    eight_mu: Fraction

    @property
    def discriminant(self) -> Fraction:
        return (self.lam - 1) ** 2 + 4 * self.k0


@dataclass(frozen=True)
class SeriesVerdict:
    root: RootVec
    lam: Fraction
    root_type: RootType | None
    kind: Kind
    k0_used: Fraction | None = None
    eight_mu: Fraction | None = None
    kpm_status: KpmStatus | None = None
    partner: RootVec | None = None
    # type C: root-space dimensions beyond the one on the partner's full-line module
    residual: int = 0
    # UNITARY_PRINCIPAL / COMPLEMENTARY for full-line modules, else None
    series: Kind | None = None
    unitarizable: bool = True

    @property
    def full_line(self) -> bool:
        return self.series in FULL_LINE


def _sqrt_fraction(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    p, d = q.numerator, q.denominator
    rp, rd = math.isqrt(p), math.isqrt(d)
    if rp * rp == p and rd * rd == d:
        return Fraction(rp, rd)
    return None


def root_type(cfg: TripleConfig, v: RootVec) -> RootType:
    """Type by the membership of ``v - theta`` and ``v + theta`` in the root region."""
    if not in_L_or_neg(cfg, v):
        raise RegionViolation(f"{v} is not in L or -L for {cfg}")
    w = v if in_L(cfg, v) else -v
    side = active_side(cfg, w)
    if side is Side.NEITHER:
        return RootType.A
    theta = cfg.theta(side)
    return RootType.C if in_R(cfg.a, w + theta) else RootType.B


def _k0(cfg: TripleConfig, v: RootVec, variant: Variant) -> Fraction:
    if Variant(variant) is Variant.STAR:
        return k0_star(cfg)
    return k0_pairing(cfg, v)


def casimir_8mu(cfg: TripleConfig, v: RootVec, variant: Variant = Variant.STAR) -> CasimirData:
    rtype = root_type(cfg, v)
    w = v if in_L(cfg, v) else -v
    lam = eigenvalue(cfg, w)
    if rtype is RootType.A:
        return CasimirData(lam, Fraction(0), lam * lam - 2 * lam)
    if rtype is RootType.C:
        raise UnsupportedTypeC(f"8mu for the type-C root {v} needs the constant p_s")
    k0 = _k0(cfg, w, variant)
    return CasimirData(lam, k0, lam * lam - 2 * lam + 4 * k0)


def s1_zero_status(data: CasimirData) -> KpmStatus:
    """Classify the zeros ``k = (1 - lam +- sqrt(disc)) / 2`` of ``s1``."""
    disc = data.discriminant
    if disc < 0:
        return KpmStatus(KpmKind.NO_REAL_SOLUTION)
    root = _sqrt_fraction(disc)
    if root is None:
        return KpmStatus(KpmKind.IRRATIONAL_PAIR)
    ints = [k for k in ((1 - data.lam - root) / 2, (1 - data.lam + root) / 2) if k.denominator == 1]
    if ints:
        return KpmStatus(KpmKind.INTEGER_SOLUTION, int(min(ints)))
    return KpmStatus(KpmKind.RATIONAL_NON_INTEGER)


def _residual(cfg: TripleConfig, v: RootVec) -> int:
    from hypkac.mult.peterson import root_mult

    return root_mult(cfg.a, v) - 1


def series_kind(cfg: TripleConfig, v: RootVec, variant: Variant = Variant.STAR) -> SeriesVerdict:
    """Verdict for the module(s) through the root space of ``v`` (in L or -L)."""
    if not in_L_or_neg(cfg, v):
        raise RegionViolation(f"{v} is not in L or -L for {cfg}")
    negative = not in_L(cfg, v)
    w = -v if negative else v
    rtype = root_type(cfg, w)
    lam = eigenvalue(cfg, v)
    if rtype is RootType.A:
        data = casimir_8mu(cfg, w, variant)
        kind = Kind.HIGHEST_WEIGHT if negative else Kind.LOWEST_WEIGHT
        return SeriesVerdict(v, lam, rtype, kind, data.k0, data.eight_mu, s1_zero_status(data))
    if rtype is RootType.C:
        theta = cfg.theta(active_side(cfg, w))
        u = theta - w
        if root_kind(cfg.a, u) is not RootKind.REAL or eigenvalue(cfg, u) == 0:
            raise InconsistencyError(f"type-C root {w} has no admissible real partner for {cfg}")
        partner = -u if negative else u
        return SeriesVerdict(v, lam, rtype, Kind.ROUTED_TO_PARTNER, partner=partner, residual=_residual(cfg, w))
    data = casimir_8mu(cfg, w, variant)
    status = s1_zero_status(data)
    if status.kind is KpmKind.INTEGER_SOLUTION:
        raise InconsistencyError(f"type-B root {v} gives an integral zero of s1 for {cfg}")
    kind = Kind.UNITARY_PRINCIPAL if data.eight_mu <= -1 else Kind.COMPLEMENTARY
    return SeriesVerdict(v, lam, rtype, kind, data.k0, data.eight_mu, status, series=kind)


def classify_L(cfg: TripleConfig, variant: Variant = Variant.STAR) -> list[SeriesVerdict]:
    return [series_kind(cfg, v, variant) for v in roots_in_L(cfg)]


def cartan_modules(cfg: TripleConfig) -> list[SeriesVerdict]:
    """The two modules meeting the Cartan subalgebra: ``s`` itself and a unitary principal one."""
    zero = RootVec(0, 0)
    return [
        SeriesVerdict(zero, Fraction(0), None, Kind.SL2_ITSELF, unitarizable=False),
        SeriesVerdict(
            zero,
            Fraction(0),
            None,
            Kind.CARTAN_PRINCIPAL,
            kpm_status=KpmStatus(KpmKind.NO_REAL_SOLUTION),
            series=Kind.UNITARY_PRINCIPAL,
        ),
    ]


# -- whole-region classification -------------------------------------------------

_TYPE_CODES = (RootType.A, RootType.B, RootType.C)


@dataclass(frozen=True)
class TypeGrid:
    """Every lattice point of L with its quadratic form and type (index into A, B, C)."""

    cfg: TripleConfig
    s: np.ndarray
    t: np.ndarray
    f: np.ndarray
    code: np.ndarray

    def points(self, rtype: RootType) -> set[RootVec]:
        mask = self.code == _TYPE_CODES.index(rtype)
        return {RootVec(int(x), int(y)) for x, y in zip(self.s[mask], self.t[mask])}


def type_grid(cfg: TripleConfig) -> TypeGrid:
    """Vectorized ``root_type`` over all of L (int64 is ample for configs with i, j <= 8)."""
    a = cfg.a
    s, t = L_arrays(cfg)

    def f(x, y):
        return x * x - a * x * y + y * y

    def in_r(dx, dy):
        # R = {f <= 1} restricted to points with same-sign coordinates
        x, y = s + dx, t + dy
        return (f(x, y) <= 1) & (x * y >= 0)

    (ka, la), (kb, lb) = cfg.theta_alpha, cfg.theta_beta
    alpha = in_r(-ka, -la)
    beta = in_r(-kb, -lb)
    if np.any(alpha & beta):
        raise InconsistencyError(f"both differences are roots somewhere in L for {cfg}")
    plus = np.where(alpha, in_r(ka, la), in_r(kb, lb))
    code = np.where(alpha | beta, np.where(plus, 2, 1), 0)
    return TypeGrid(cfg, s, t, f(s, t), code)


def type_theorem_counterexamples(cfg: TripleConfig, grid: TypeGrid | None = None) -> dict[str, list[RootVec]]:
    """Witnesses against the type theorem on L (all lists empty when it holds).

    * ``real_not_b``: real roots that are not type B;
    * ``c_not_image`` / ``image_not_c``: type-C roots versus images ``theta - u``
      of real roots ``u`` with nonzero eigenvalue;
    * ``imaginary_other``: imaginary roots outside that image set that are not type A.
    """
    g = grid if grid is not None else type_grid(cfg)
    real = g.f == 1
    imag = g.f <= 0
    out: dict[str, list[RootVec]] = {}
    out["real_not_b"] = sorted(
        RootVec(int(x), int(y)) for x, y in zip(g.s[real & (g.code != 1)], g.t[real & (g.code != 1)])
    )
    images = set()
    for u in real_roots_in_L(cfg):
        if eigenvalue(cfg, u) == 0:
            continue
        for theta in (cfg.theta_alpha, cfg.theta_beta):
            w = theta - u
            if in_L(cfg, w) and root_kind(cfg.a, w) is RootKind.IMAGINARY:
                images.add(w)
    c_pts = g.points(RootType.C)
    out["c_not_image"] = sorted(c_pts - images)
    out["image_not_c"] = sorted(images - c_pts)
    other = imag & (g.code != 0)
    out["imaginary_other"] = sorted(
        v for v in (RootVec(int(x), int(y)) for x, y in zip(g.s[other], g.t[other])) if v not in images
    )
    return out


# -- sweeps over (a, i, n) ---------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    a: int
    i: int
    j: int
    n: int
    root: RootVec
    eight_mu: Fraction
    kind: Kind

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.a, self.i, self.n)


def real_roots_in_L(cfg: TripleConfig) -> list[RootVec]:
    """Real roots of L, read off the Fibonacci-type pattern (no box scan)."""
    roots = {v for v, _ in positive_real_roots_up_to(cfg.a, max(cfg.i, cfg.j) + 1) if in_L(cfg, v)}
    return sorted(roots)


def sweep_n(cfg: TripleConfig, v: RootVec) -> int:
    """The index ``n`` labelling a real root of L in the exception tables.

    For ``i = j`` it is the pattern index of ``v``; for ``i = j - 1`` (resp.
    ``j + 1``) it is the ``n`` with ``lambda = 2 F_n / F_{i+1}``
    (resp. ``2 F_n / F_{j+1}``), i.e. ``F_n = s`` (resp. ``F_n = t``).
    """
    seq = FSeq(cfg.a)
    if cfg.i == cfg.j:
        # F_{n+1} + F_n = s + t
        k = 0
        while seq[k + 1] + seq[k] < v.s + v.t:
            k += 1
        if seq[k + 1] + seq[k] != v.s + v.t:
            raise InconsistencyError(f"{v} is not on the real-root pattern")
        return k
    n = seq.index_of(v.s if cfg.i == cfg.j - 1 else v.t)
    if n is None:
        raise InconsistencyError(f"{v} is not on the real-root pattern")
    return n


def _shape_j(shape: str, i: int) -> int:
    if shape == "ij":
        return i
    if shape == "ij1":
        return i + 1
    raise InvalidParameter(f"unknown shape {shape!r}; expected 'ij' or 'ij1'")


def exception_sweep(
    a_max: int, i_max: int, variant: Variant = Variant.STAR, shape: str = "ij"
) -> list[SweepRow]:
    """Verdicts for every real root of L over ``3 <= a <= a_max``, ``i <= i_max``.

    Rows are sorted by ``(a, i, n, root)``.
    """
    check_a(a_max)
    if i_max < 0:
        raise InvalidParameter("i_max must be >= 0")
    variant = Variant(variant)
    rows = []
    for a in range(3, a_max + 1):
        for i in range(i_max + 1):
            cfg = make_config(a, i, _shape_j(shape, i))
            for v in real_roots_in_L(cfg):
                verdict = series_kind(cfg, v, variant)
                rows.append(SweepRow(a, cfg.i, cfg.j, sweep_n(cfg, v), v, verdict.eight_mu, verdict.kind))
    rows.sort(key=lambda r: (r.a, r.i, r.n, r.root))
    return rows


def principal_tuples(rows: Iterable[SweepRow]) -> list[tuple[int, int, int]]:
    return sorted({r.key for r in rows if r.kind is Kind.UNITARY_PRINCIPAL})


def sweep_discrepancies(star: list[SweepRow], pairing: list[SweepRow]) -> list[tuple[SweepRow, SweepRow]]:
    """Row pairs (same config and root) whose verdict differs between the variants."""
    by_root = {(r.a, r.i, r.j, r.root): r for r in star}
    out = []
    for p in pairing:
        s = by_root[(p.a, p.i, p.j, p.root)]
        if s.kind is not p.kind:
            out.append((s, p))
    return out


# -- monotonicity on integer grids ---------------------------------------------


@dataclass
class MonotonicityReport:
    shape: str
    variant: Variant
    checked: dict[str, int] = field(default_factory=dict)
    violations: dict[str, list[tuple]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    def passed(self, direction: str) -> bool:
        return not self.violations.get(direction)


def _canonical_root(cfg: TripleConfig, n: int) -> RootVec:
    seq = FSeq(cfg.a)
    if cfg.i == cfg.j:
        return RootVec(seq[n + 1], seq[n])
    return RootVec(seq[n], seq[n + 1])


def _eight_mu(a: int, i: int, n: int, shape: str, variant: Variant) -> Fraction:
    cfg = make_config(a, i, _shape_j(shape, i))
    return casimir_8mu(cfg, _canonical_root(cfg, n), variant).eight_mu


def base_point_closed_form(shape: str, a: int) -> Fraction:
    """``8 mu`` at the base point of the a-direction: ``(1, 1, 0)`` or ``(0, 1, 0)``."""
    if shape == "ij":
        return Fraction(-4 * a * a, a**3 - 3 * a - 2)
    # lambda = 0 there, so 8 mu = 4 k0 with k0 = -4 / (a - 2)
    return Fraction(-16, a - 2)


def monotonicity_scan(
    shape: str,
    a_range: Iterable[int],
    i_range: Iterable[int],
    variant: Variant = Variant.STAR,
) -> MonotonicityReport:
    """Exact checks of the three monotonicity claims for ``8 mu(a, i, n)``.

    * ``n``: strictly decreasing in ``n`` at fixed ``(a, i)``;
    * ``i``: strictly increasing in ``i`` along ``n = i - 1`` (``ij``) or ``n = i`` (``ij1``);
    * ``a``: strictly increasing in ``a`` at the base point, whose value must
      also equal the closed form (``base`` direction).
    """
    variant = Variant(variant)
    _shape_j(shape, 0)
    a_vals = sorted(set(a_range))
    i_vals = sorted(set(i_range))
    rep = MonotonicityReport(shape, variant)
    for key in ("n", "i", "a", "base"):
        rep.checked[key] = 0
        rep.violations[key] = []

    lowest_i = 1 if shape == "ij" else 0
    for a in a_vals:
        for i in i_vals:
            if i < lowest_i:
                continue
            n_top = i - 1 if shape == "ij" else i
            values = [_eight_mu(a, i, n, shape, variant) for n in range(n_top + 1)]
            for n in range(1, len(values)):
                rep.checked["n"] += 1
                if not values[n] < values[n - 1]:
                    rep.violations["n"].append((a, i, n, values[n - 1], values[n]))
        diag = [(i, _eight_mu(a, i, i - 1 if shape == "ij" else i, shape, variant)) for i in i_vals if i >= lowest_i]
        for (i0, v0), (i1, v1) in zip(diag, diag[1:]):
            rep.checked["i"] += 1
            if not v0 < v1:
                rep.violations["i"].append((a, i0, i1, v0, v1))

    base_i = 1 if shape == "ij" else 0
    base = []
    for a in a_vals:
        value = _eight_mu(a, base_i, 0, shape, variant)
        rep.checked["base"] += 1
        closed = base_point_closed_form(shape, a)
        if value != closed:
            rep.violations["base"].append((a, value, closed))
        base.append((a, value))
    for (a0, v0), (a1, v1) in zip(base, base[1:]):
        rep.checked["a"] += 1
        if not v0 < v1:
            rep.violations["a"].append((a0, a1, v0, v1))
    return rep


# -- figure data ---------------------------------------------------------------

FIGURE_LABELS = ("imaginary", "real", "type_a", "type_b", "type_c", "roots_of_x")


@dataclass(frozen=True)
class FigureData:
    cfg: TripleConfig
    points: dict[str, list[RootVec]]

    def rows(self) -> list[tuple[str, RootVec]]:
        return [(label, v) for label in FIGURE_LABELS for v in self.points[label]]


def figure_dataset(cfg: TripleConfig) -> FigureData:
    """Labelled point sets: imaginary roots of L, real-root branches up to X, types, and the roots of X."""
    in_l = roots_in_L(cfg)
    pts: dict[str, list[RootVec]] = {label: [] for label in FIGURE_LABELS}
    pts["imaginary"] = [v for v in in_l if root_kind(cfg.a, v) is RootKind.IMAGINARY]
    branch = {v for v, tag in positive_real_roots_up_to(cfg.a, cfg.i) if tag == "alpha"}
    branch |= {v for v, tag in positive_real_roots_up_to(cfg.a, cfg.j) if tag == "beta"}
    pts["real"] = sorted(branch)
    for v in in_l:
        pts["type_" + root_type(cfg, v).value.lower()].append(v)
    pts["roots_of_x"] = sorted({cfg.theta_alpha, cfg.theta_beta})
    return FigureData(cfg, pts)
