"""Root multiplicities by the Peterson recursion.

With ``c_b = sum_{k >= 1, b/k integral} mult(b/k) / k`` over positive lattice
vectors ``b``::

    (b | b - 2 rho) c_b = sum_{b' + b'' = b, b', b'' > 0} (b' | b'') c_b' c_b''

``(rho | alpha_i) = 1``, so ``(b | b - 2 rho) = 2 f(b) - 2 ht(b)``, which is
negative on every imaginary root.  Real roots and non-roots are settled by the
quadratic form; the recursion is only run on imaginary roots.
"""

from __future__ import annotations

import json
import math
import os
import threading
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from hypkac.errors import InconsistencyError
from hypkac.rootlat import RootKind, RootVec, check_a, pairing, qform, root_kind

__all__ = ["BilinearForm", "MultTable", "mult_table", "root_mult", "CACHE_ENV"]

CACHE_ENV = "HYPKAC_CACHE_DIR"


@dataclass(frozen=True)
class BilinearForm:
    a: int

    def __post_init__(self):
        check_a(self.a)

    @property
    def matrix(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((2, -self.a), (-self.a, 2))

    @property
    def rho(self) -> tuple[Fraction, Fraction]:
        """Coordinates of rho in the simple-root basis."""
        r = Fraction(1, 2 - self.a)
        return (r, r)

    def __call__(self, u: RootVec, w: RootVec) -> int:
        return pairing(self.a, u, w)

    def with_rho(self, u: RootVec) -> Fraction:
        r0, r1 = self.rho
        return r0 * self(u, RootVec(1, 0)) + r1 * self(u, RootVec(0, 1))


def _divisors(n: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


class MultTable:
    """Memoized multiplicities for one algebra.

    The memo only holds values that are final; concurrent callers may
    recompute an entry but always store the same value.
    """

    def __init__(self, a: int, cache_dir: str | os.PathLike | None = None):
        self.a = check_a(a)
        self._mult: dict[tuple[int, int], int] = {}
        # c_b for positive vectors with at least one root among the b/k
        self._c: dict[tuple[int, int], int | Fraction] = {}
        self._lock = threading.RLock()
        self._cache_dir = Path(cache_dir) / f"a={a}" if cache_dir else None
        if self._cache_dir is not None:
            self._load_cache()

    # -- disk cache: one JSON file per imaginary root, "a=<a>/s=<s>,t=<t>.json"

    def _load_cache(self) -> None:
        if not self._cache_dir.is_dir():
            return
        for path in sorted(self._cache_dir.glob("s=*,t=*.json")):
            rec = json.loads(path.read_text())
            self._mult[(rec["s"], rec["t"])] = int(rec["mult"])

    def _store(self, key: tuple[int, int], value: int) -> None:
        if self._cache_dir is None:
            return
        self._cache_dir.mkdir(parents=True, exist_ok=True)
        s, t = key
        path = self._cache_dir / f"s={s},t={t}.json"
        if not path.exists():
            tmp = path.with_suffix(".tmp")
            tmp.write_text(json.dumps({"a": self.a, "s": s, "t": t, "mult": str(value)}, sort_keys=True))
            tmp.replace(path)

    # -- core

    def _kind(self, s: int, t: int) -> RootKind:
        return root_kind(self.a, RootVec(s, t))

    def c_value(self, s: int, t: int) -> int | Fraction:
        """``c_b`` for a positive vector ``b = (s, t)``."""
        key = (s, t)
        c = self._c.get(key)
        if c is not None:
            return c
        g = math.gcd(s, t)
        total: int | Fraction = 0
        for k in _divisors(g):
            m = self._mult_pos(s // k, t // k)
            if m:
                total += Fraction(m, k) if k > 1 else m
        if isinstance(total, Fraction) and total.denominator == 1:
            total = total.numerator
        self._c[key] = total
        return total

    def _mult_pos(self, s: int, t: int) -> int:
        key = (s, t)
        m = self._mult.get(key)
        if m is not None:
            return m
        kind = self._kind(s, t)
        if kind is RootKind.NOT_ROOT:
            m = 0
        elif kind is RootKind.REAL:
            m = 1
        else:
            with self._lock:
                m = self._mult.get(key)
                if m is None:
                    self._fill(s, t)
                    m = self._mult[key]
            return m
        self._mult[key] = m
        return m

    def _fill(self, s_top: int, t_top: int) -> None:
        """Compute every imaginary-root multiplicity in the box ``[0, s_top] x [0, t_top]``."""
        # by height, so all proper summands come first; within a column t increases
        order = sorted(
            ((s, t) for s in range(s_top + 1) for t in range(t_top + 1) if s or t), key=lambda p: (p[0] + p[1], p)
        )
        # support[s] = ([t, ...], [c, ...]) over vectors (s, t) with nonzero c
        support: list[tuple[list[int], list[int | Fraction]]] = [([], []) for _ in range(s_top + 1)]
        for s, t in order:
            key = (s, t)
            if key not in self._mult and self._kind(s, t) is RootKind.IMAGINARY:
                self._mult[key] = self._peterson(s, t, support)
                self._store(key, self._mult[key])
            c = self.c_value(s, t)
            if c:
                support[s][0].append(t)
                support[s][1].append(c)

    def _peterson(self, s: int, t: int, support: list[tuple[list[int], list[int | Fraction]]]) -> int:
        a = self.a
        c_map = self._c
        rhs: int | Fraction = 0
        # unordered pairs {b', b''}: take b' <= b'' lexicographically, so s1 <= s / 2
        for s1 in range(s // 2 + 1):
            s2 = s - s1
            ts, cs = support[s1]
            for idx in range(bisect_right(ts, t)):
                t1 = ts[idx]
                t2 = t - t1
                if s1 == s2 and t1 > t2:
                    break
                c2 = c_map.get((s2, t2))
                if not c2:
                    continue
                term = (2 * s1 * s2 - a * (s1 * t2 + t1 * s2) + 2 * t1 * t2) * cs[idx] * c2
                rhs += term if (s1 == s2 and t1 == t2) else 2 * term
        norm = 2 * qform(a, RootVec(s, t)) - 2 * (s + t)
        c = Fraction(rhs) / norm
        m = c
        for k in _divisors(math.gcd(s, t))[1:]:
            m -= Fraction(self._mult_pos(s // k, t // k), k)
        if m.denominator != 1 or m < 1:
            raise InconsistencyError(f"Peterson recursion gave mult{(s, t)} = {m} for a={a}")
        return int(m)

    def mult(self, v: RootVec) -> int:
        if v.s < 0 or v.t < 0:
            if v.s > 0 or v.t > 0:
                return 0
            return self._mult_pos(-v.s, -v.t)
        if v.is_zero():
            return 0
        return self._mult_pos(v.s, v.t)


_TABLES: dict[tuple[int, str | None], MultTable] = {}
_TABLES_LOCK = threading.Lock()


def mult_table(a: int) -> MultTable:
    """Shared table for ``a``; honours ``HYPKAC_CACHE_DIR`` at first use."""
    cache_dir = os.environ.get(CACHE_ENV) or None
    key = (a, cache_dir)
    table = _TABLES.get(key)
    if table is None:
        with _TABLES_LOCK:
            table = _TABLES.get(key)
            if table is None:
                table = _TABLES[key] = MultTable(a, cache_dir)
    return table


def root_mult(a: int, v: RootVec) -> int:
    """Multiplicity of ``v``: 0 off the root system, 1 on real roots."""
    return mult_table(a).mult(v)
