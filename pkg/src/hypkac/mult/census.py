"""Counting highest/lowest-weight modules eigenvalue by eigenvalue.

Walk the H-eigenvalues ``lam_H >= 2`` of positive root spaces upward.  At each
one, ``d_H`` is the eigenspace dimension and ``p_H`` the number of modules
already found whose weights reach ``lam_H``; the remaining ``d_H - p_H``
dimensions are lowest-weight vectors of new modules.  Weights of one module
differ by even integers, so the bookkeeping is per class ``lam mod 2``.

Type-C root spaces in L carry dimensions beyond the one used by the partner's
full-line module whose lowest/highest nature is not decided here.  Each such
root contributes an unknown ``x in [0, r]`` (``x`` lowest-weight modules that
keep climbing), and every count is an exact affine form in these unknowns;
intervals are read off at the end.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from hypkac.errors import InconsistencyError, InvalidParameter, NonPositiveWeight
from hypkac.mult.peterson import root_mult
from hypkac.rootlat import RootVec, is_root
from hypkac.series import Kind, RootType, Variant, cartan_modules, series_kind
from hypkac.triple import TripleConfig, eigenvalue, roots_in_L

__all__ = [
    "Affine",
    "Interval",
    "CensusRow",
    "Census",
    "roots_at_weight",
    "eigenvalues_upto",
    "weight_dimension",
    "census",
    "mirror_census",
]


@dataclass(frozen=True)
class Interval:
    lo: int
    hi: int

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"

    def __add__(self, other: Interval) -> Interval:
        return Interval(self.lo + other.lo, self.hi + other.hi)


@dataclass(frozen=True)
class Affine:
    """``const + sum coeff * x_name`` with integer coefficients."""

    const: int = 0
    terms: tuple[tuple[str, int], ...] = ()

    @classmethod
    def var(cls, name: str, coeff: int = 1) -> Affine:
        return cls(0, ((name, coeff),))

    def _combine(self, other: Affine, sign: int) -> Affine:
        acc = dict(self.terms)
        for name, c in other.terms:
            acc[name] = acc.get(name, 0) + sign * c
        return Affine(self.const + sign * other.const, tuple(sorted((k, v) for k, v in acc.items() if v)))

    def __add__(self, other: Affine | int) -> Affine:
        return self._combine(other if isinstance(other, Affine) else Affine(other), 1)

    def __sub__(self, other: Affine | int) -> Affine:
        return self._combine(other if isinstance(other, Affine) else Affine(other), -1)

    def __rsub__(self, other: int) -> Affine:
        return Affine(other) - self

    def interval(self, ranges: dict[str, tuple[int, int]]) -> Interval:
        lo = hi = self.const
        for name, c in self.terms:
            r_lo, r_hi = ranges[name]
            lo += min(c * r_lo, c * r_hi)
            hi += max(c * r_lo, c * r_hi)
        return Interval(lo, hi)

    def __str__(self) -> str:
        parts = [str(self.const)] if self.const or not self.terms else []
        parts += [f"{c:+d}*{n}" for n, c in self.terms]
        return "".join(parts)


def _weight_class(lam: Fraction) -> Fraction:
    return lam - 2 * (lam // 2)


@dataclass(frozen=True)
class _Module:
    """Module with weights in ``lam_class + 2Z`` restricted to ``[bottom, top]`` (None = unbounded)."""

    label: str
    lam_class: Fraction
    count: Affine
    bottom: Fraction | None = None
    top: Fraction | None = None

    def meets(self, lam: Fraction) -> bool:
        if _weight_class(lam) != self.lam_class:
            return False
        if self.bottom is not None and lam < self.bottom:
            return False
        return self.top is None or lam <= self.top


@dataclass(frozen=True)
class CensusRow:
    lambda_H: Fraction
    d_H: int
    p_H: Interval
    new: Interval
    p_form: Affine
    new_form: Affine

    @property
    def conserved(self) -> bool:
        return (
            self.p_form + self.new_form == Affine(self.d_H)
            and self.p_H.lo + self.new.hi == self.d_H
            and self.p_H.hi + self.new.lo == self.d_H
        )

    @property
    def consistent(self) -> bool:
        return self.new.hi >= 0 and self.new.lo <= self.new.hi


@dataclass
class Census:
    cfg: TripleConfig
    side: str  # "lowest" for lam_H >= 2, "highest" for lam_H <= -2
    rows: list[CensusRow]
    ranges: dict[str, tuple[int, int]]
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.conserved and r.consistent for r in self.rows)


def _l_window(cfg: TripleConfig, lam_max: Fraction) -> tuple[int, int]:
    """Box ``[0, s_max] x [0, t_max]`` containing every positive root with ``lam <= lam_max``."""
    A, B = cfg.h_functional
    a = cfg.a
    if A > 0 and B > 0:
        return int(lam_max / A), int(lam_max / B)
    if B == 0:
        s_max = int(lam_max / A)
        return s_max, a * s_max + 1
    t_max = int(lam_max / B)
    return a * t_max + 1, t_max


def roots_at_weight(cfg: TripleConfig, lam: Fraction) -> list[RootVec]:
    """Roots ``v`` with ``eigenvalue(v) == lam`` (positive for lam > 0, negative for lam < 0)."""
    lam = Fraction(lam)
    if lam == 0:
        raise NonPositiveWeight("the zero eigenspace meets the Cartan subalgebra")
    sign = 1 if lam > 0 else -1
    s_max, t_max = _l_window(cfg, abs(lam))
    out = []
    for s in range(s_max + 1):
        for t in range(t_max + 1):
            v = RootVec(s, t)
            if eigenvalue(cfg, v) == abs(lam) and is_root(cfg.a, v):
                out.append(v if sign > 0 else -v)
    return out


def eigenvalues_upto(cfg: TripleConfig, lam_min: Fraction, lam_max: Fraction) -> list[Fraction]:
    """Distinct eigenvalues in ``[lam_min, lam_max]`` of positive root spaces, ascending."""
    s_max, t_max = _l_window(cfg, Fraction(lam_max))
    vals = set()
    for s in range(s_max + 1):
        for t in range(t_max + 1):
            v = RootVec(s, t)
            lam = eigenvalue(cfg, v)
            if lam_min <= lam <= lam_max and is_root(cfg.a, v):
                vals.add(lam)
    return sorted(vals)


def _dimension(cfg: TripleConfig, lam: Fraction) -> int:
    return sum(root_mult(cfg.a, v) for v in roots_at_weight(cfg, lam))


def weight_dimension(cfg: TripleConfig, lambda_H: Fraction) -> int:
    """Dimension of the H-eigenspace ``lambda_H > 0`` (a finite sum of root multiplicities)."""
    lambda_H = Fraction(lambda_H)
    if lambda_H <= 0:
        raise NonPositiveWeight(f"lambda_H must be > 0, got {lambda_H}")
    return _dimension(cfg, lambda_H)


def _seed(cfg: TripleConfig, variant: Variant, sign: int, notes: list[str]) -> tuple[list[_Module], dict]:
    """Modules found in L (sign=+1) or -L (sign=-1) plus the two through the Cartan subalgebra."""
    mods: list[_Module] = []
    ranges: dict[str, tuple[int, int]] = {}
    one = Affine(1)
    for v in cartan_modules(cfg):
        if v.kind is Kind.SL2_ITSELF:
            mods.append(_Module("sl2", Fraction(0), one, Fraction(-2), Fraction(2)))
        else:
            mods.append(_Module("cartan", Fraction(0), one))
    for w in roots_in_L(cfg):
        v = w if sign > 0 else -w
        verdict = series_kind(cfg, v, variant)
        lam = verdict.lam
        if verdict.root_type is RootType.B:
            # the full-line module through v and the one through -v
            mods.append(_Module(f"line{v}", _weight_class(lam), one))
            mods.append(_Module(f"line{-v}", _weight_class(-lam), one))
            if lam == 0:
                notes.append(
                    f"boundary real root {w} has lambda = 0: outside the open window (0, 2) "
                    "but inside the written region L; classified with n = 0"
                )
        elif verdict.root_type is RootType.A:
            m = Affine(root_mult(cfg.a, v))
            if sign > 0:
                mods.append(_Module(f"low{v}", _weight_class(lam), m, bottom=lam))
            else:
                mods.append(_Module(f"high{v}", _weight_class(lam), m, top=lam))
        elif verdict.residual:
            name = f"x{w.s}_{w.t}"
            ranges[name] = (0, verdict.residual)
            if sign > 0:
                mods.append(_Module(f"resid{v}", _weight_class(lam), Affine.var(name), bottom=lam))
            else:
                mods.append(_Module(f"resid{v}", _weight_class(lam), Affine.var(name), top=lam))
        # the one dimension of a type-C space on the partner line is already counted by that line
    return mods, ranges


def _run(cfg: TripleConfig, lam_bound: Fraction, variant: Variant, sign: int) -> Census:
    lam_bound = Fraction(lam_bound)
    if lam_bound < 2:
        raise InvalidParameter("the census bound must satisfy |lambda| >= 2")
    variant = Variant(variant)
    notes: list[str] = []
    mods, ranges = _seed(cfg, variant, sign, notes)
    rows = []
    for mag in eigenvalues_upto(cfg, Fraction(2), lam_bound):
        lam = sign * mag
        d = _dimension(cfg, lam)
        p = Affine()
        for m in mods:
            if m.meets(lam):
                p = p + m.count
        new = Affine(d) - p
        row = CensusRow(lam, d, p.interval(ranges), new.interval(ranges), p, new)
        rows.append(row)
        if not new == Affine():
            if sign > 0:
                mods.append(_Module(f"born{lam}", _weight_class(lam), new, bottom=lam))
            else:
                mods.append(_Module(f"born{lam}", _weight_class(lam), new, top=lam))
    return Census(cfg, "lowest" if sign > 0 else "highest", rows, ranges, notes)


def census(cfg: TripleConfig, lambda_max: Fraction, variant: Variant = Variant.STAR) -> Census:
    """New lowest-weight modules at each eigenvalue ``2 <= lam_H <= lambda_max``."""
    return _run(cfg, lambda_max, variant, 1)


def mirror_census(cfg: TripleConfig, lambda_min: Fraction, variant: Variant = Variant.STAR) -> Census:
    """New highest-weight modules at each eigenvalue ``lambda_min <= lam_H <= -2``."""
    lambda_min = Fraction(lambda_min)
    if lambda_min > -2:
        raise InvalidParameter("lambda_min must be <= -2")
    return _run(cfg, -lambda_min, variant, -1)


def check_census(c: Census) -> None:
    for row in c.rows:
        if not row.conserved:
            raise InconsistencyError(f"census conservation failed at lambda = {row.lambda_H}")
        if not row.consistent:
            raise InconsistencyError(
                f"census at lambda = {row.lambda_H}: d_H = {row.d_H} is below every admissible p_H {row.p_H}"
            )


def rows_mirror(a: Iterable[CensusRow], b: Iterable[CensusRow]) -> bool:
    """True if ``b`` is ``a`` reflected through ``lam -> -lam``."""
    a, b = list(a), list(b)
    return len(a) == len(b) and all(
        x.lambda_H == -y.lambda_H and x.d_H == y.d_H and x.p_H == y.p_H and x.new == y.new for x, y in zip(a, b)
    )
