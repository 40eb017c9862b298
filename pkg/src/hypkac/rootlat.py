"""Root lattice of the rank-2 hyperbolic algebra with Cartan matrix [[2, -a], [-a, 2]].

A lattice point ``(s, t)`` stands for ``s*alpha0 + t*alpha1``.  Everything is
exact integer arithmetic.
"""

from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass
from typing import Iterator, Literal

from hypkac.errors import InvalidParameter

__all__ = [
    "RootVec",
    "RootKind",
    "FSeq",
    "check_a",
    "fseq",
    "qform",
    "pairing",
    "reflect",
    "root_kind",
    "is_root",
    "in_R",
    "positive_real_roots_up_to",
    "region_row",
    "roots_in_box",
]


@dataclass(frozen=True, order=True, slots=True)
class RootVec:
    s: int
    t: int

    def __add__(self, other: RootVec) -> RootVec:
        return RootVec(self.s + other.s, self.t + other.t)

    def __sub__(self, other: RootVec) -> RootVec:
        return RootVec(self.s - other.s, self.t - other.t)

    def __neg__(self) -> RootVec:
        return RootVec(-self.s, -self.t)

    def __iter__(self) -> Iterator[int]:
        yield self.s
        yield self.t

    def __str__(self) -> str:
        return f"({self.s},{self.t})"

    @property
    def height(self) -> int:
        return self.s + self.t

    def is_zero(self) -> bool:
        return self.s == 0 and self.t == 0


class RootKind(enum.Enum):
    REAL = "real"
    IMAGINARY = "imaginary"
    NOT_ROOT = "not_root"


def check_a(a: int) -> int:
    if isinstance(a, bool) or not isinstance(a, int):
        raise InvalidParameter(f"a must be an integer, got {a!r}")
    if a < 3:
        raise InvalidParameter("a must be >= 3")
    return a


class FSeq:
    """Memoized ``F_{-1} = -1, F_0 = 0, F_1 = 1, F_{k+2} = a F_{k+1} - F_k``.

    The table only grows; readers never observe a partially written prefix.
    """

    def __init__(self, a: int):
        self.a = check_a(a)
        # index 0 holds F_{-1}
        self._table = [-1, 0, 1]
        self._lock = threading.Lock()

    def __getitem__(self, k: int) -> int:
        if k < -1:
            raise InvalidParameter(f"F_k is only defined for k >= -1, got {k}")
        table = self._table
        if k + 1 < len(table):
            return table[k + 1]
        with self._lock:
            table = self._table
            a = self.a
            while len(table) <= k + 1:
                table.append(a * table[-1] - table[-2])
            return table[k + 1]

    def index_of(self, value: int) -> int | None:
        """Return ``k >= 0`` with ``F_k == value``, or None."""
        if value < 0:
            return None
        k = 0
        while self[k] < value:
            k += 1
        return k if self[k] == value else None


_FSEQS: dict[int, FSeq] = {}
_FSEQS_LOCK = threading.Lock()


def _seq(a: int) -> FSeq:
    seq = _FSEQS.get(a)
    if seq is None:
        check_a(a)
        with _FSEQS_LOCK:
            seq = _FSEQS.setdefault(a, FSeq(a))
    return seq


def fseq(a: int, k: int) -> int:
    return _seq(a)[k]


def qform(a: int, v: RootVec) -> int:
    """``f(s, t) = s^2 - a s t + t^2``; half the norm ``(v|v)``."""
    s, t = v.s, v.t
    return s * s - a * s * t + t * t


def pairing(a: int, u: RootVec, w: RootVec) -> int:
    """Symmetric bilinear form defined by the Cartan matrix."""
    return 2 * u.s * w.s - a * (u.s * w.t + u.t * w.s) + 2 * u.t * w.t


def reflect(a: int, gen: Literal["r0", "r1", 0, 1], v: RootVec) -> RootVec:
    """Simple reflection ``r0: (x, y) -> (a y - x, y)`` or ``r1: (x, y) -> (x, a x - y)``."""
    if gen in ("r0", 0):
        return RootVec(a * v.t - v.s, v.t)
    if gen in ("r1", 1):
        return RootVec(v.s, a * v.s - v.t)
    raise InvalidParameter(f"unknown generator {gen!r}")


def root_kind(a: int, v: RootVec) -> RootKind:
    if v.is_zero():
        return RootKind.NOT_ROOT
    f = qform(a, v)
    if f == 1:
        return RootKind.REAL
    if f <= 0:
        return RootKind.IMAGINARY
    return RootKind.NOT_ROOT


def is_root(a: int, v: RootVec) -> bool:
    return root_kind(a, v) is not RootKind.NOT_ROOT


def in_R(a: int, v: RootVec) -> bool:
    """Closed hyperbola region: roots, together with the origin."""
    return qform(a, v) <= 1


def positive_real_roots_up_to(a: int, max_index: int) -> list[tuple[RootVec, str]]:
    """Real positive roots ``(F_{k+1}, F_k)`` (tag ``alpha``) and ``(F_k, F_{k+1})`` (tag ``beta``), ``k <= max_index``.

    ``(1, 0)`` and ``(0, 1)`` appear once each.  Ordered by index, alpha before beta.
    """
    if max_index < 0:
        raise InvalidParameter("max_index must be >= 0")
    seq = _seq(a)
    out: list[tuple[RootVec, str]] = []
    for k in range(max_index + 1):
        out.append((RootVec(seq[k + 1], seq[k]), "alpha"))
        out.append((RootVec(seq[k], seq[k + 1]), "beta"))
    return out


def region_row(a: int, s: int) -> tuple[int, int]:
    """Integer ``t`` range with ``f(s, t) <= 1`` for a fixed ``s >= 0``.

    Solves ``t^2 - a s t + s^2 - 1 <= 0`` with integer square roots, so the
    bounds are exact; the range always contains ``t = a s / 2`` rounded.
    """
    if s < 0:
        raise InvalidParameter("region_row expects s >= 0")
    r = math.isqrt((a * a - 4) * s * s + 4)
    # floor((as + sqrt D) / 2) = (as + r) // 2, and likewise for the ceiling
    return -((r - a * s) // 2), (a * s + r) // 2


def roots_in_box(a: int, s_max: int, t_max: int) -> list[tuple[RootVec, RootKind]]:
    """All roots with ``0 <= s <= s_max``, ``0 <= t <= t_max``, lexicographic."""
    check_a(a)
    if s_max < 0 or t_max < 0:
        raise InvalidParameter("box bounds must be >= 0")
    out = []
    for s in range(s_max + 1):
        lo, hi = region_row(a, s)
        for t in range(max(lo, 0), min(hi, t_max) + 1):
            v = RootVec(s, t)
            kind = root_kind(a, v)
            if kind is not RootKind.NOT_ROOT:
                out.append((v, kind))
    return out
