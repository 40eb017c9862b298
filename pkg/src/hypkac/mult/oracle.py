"""Multiplicities from the truncated denominator identity.

    prod_{b > 0} (1 - e^{-b})^{mult b} = sum_{w in W} det(w) e^{w(rho) - rho}

Both sides are expanded as integer polynomials in ``x = e^{-alpha0}``,
``y = e^{-alpha1}`` truncated at a total height.  Processing vectors by
height, the coefficient of ``x^s y^t`` in the partial product (built from
strictly lower heights) minus the right-hand side coefficient is exactly
``mult(s, t)``.  Independent of the Peterson code path: no bilinear form,
no rho, no root test.
"""

from __future__ import annotations

from math import comb

from hypkac.rootlat import check_a

__all__ = ["weyl_side", "denominator_mults"]

Poly = dict[tuple[int, int], int]


def weyl_side(a: int, max_height: int) -> Poly:
    """``sum det(w) x^s y^t`` over ``w`` with ``rho - w(rho) = (s, t)`` of height ``<= max_height``.

    ``rho - w(rho)`` is tracked through the simple reflections acting on the
    weight ``lam = rho - mu``: ``r_i(lam) = lam - <lam, alpha_i^v> alpha_i`` and
    ``<rho, alpha_i^v> = 1``.
    """
    check_a(a)
    out: Poly = {(0, 0): 1}

    def coroot(mu: tuple[int, int], i: int) -> int:
        s, t = mu
        return 2 * s - a * t if i == 0 else 2 * t - a * s

    # reduced words of the infinite dihedral group alternate r0 and r1
    for first in (0, 1):
        mu = (0, 0)
        sign = 1
        gen = first
        while True:
            step = 1 - coroot(mu, gen)
            mu = (mu[0] + step, mu[1]) if gen == 0 else (mu[0], mu[1] + step)
            sign = -sign
            if mu[0] + mu[1] > max_height:
                break
            out[mu] = out.get(mu, 0) + sign
            gen = 1 - gen
    return out


def _mul_binomial_power(p: Poly, b: tuple[int, int], m: int, max_height: int) -> Poly:
    """``p * (1 - x^b)^m`` truncated at ``max_height``."""
    hb = b[0] + b[1]
    out: Poly = {}
    for k in range(m + 1):
        if k * hb > max_height:
            break
        coeff = comb(m, k) * (-1) ** k
        ds, dt = k * b[0], k * b[1]
        for (s, t), c in p.items():
            if s + t + k * hb <= max_height:
                key = (s + ds, t + dt)
                out[key] = out.get(key, 0) + coeff * c
    return {k: v for k, v in out.items() if v}


def denominator_mults(a: int, max_height: int) -> dict[tuple[int, int], int]:
    """``mult(s, t)`` for every ``s, t >= 0`` with ``0 < s + t <= max_height``."""
    rhs = weyl_side(a, max_height)
    prod: Poly = {(0, 0): 1}
    mults: dict[tuple[int, int], int] = {}
    for h in range(1, max_height + 1):
        level = [(s, h - s) for s in range(h + 1)]
        for b in level:
            mults[b] = prod.get(b, 0) - rhs.get(b, 0)
        # factors of one height cannot interact below the next height
        for b in level:
            if mults[b]:
                prod = _mul_binomial_power(prod, b, mults[b], max_height)
    return mults
