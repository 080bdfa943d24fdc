"""Frobenius traces of the CM elliptic curves E0_2: Y^2 = X^3 - 5X^2 - 5X + 1 and E0_3: Y^2 = X^3 + 1."""
from __future__ import annotations

from math import isqrt
from typing import NamedTuple

import numpy as np

from .arith import sqrt_mod


class CMCurve(NamedTuple):
    d: int
    a2: int
    a4: int
    a6: int

    def discriminant(self) -> int:
        a, b, c = self.a2, self.a4, self.a6
        cubic = a * a * b * b - 4 * b ** 3 - 4 * a ** 3 * c - 27 * c * c + 18 * a * b * c
        return 16 * cubic


CM_CURVES = {2: CMCurve(2, -5, -5, 1), 3: CMCurve(3, 0, 0, 1)}


class BadPrimeError(ValueError):
    pass


def _check(p: int, d: int) -> CMCurve:
    if d not in CM_CURVES:
        raise ValueError(f"d must be 2 or 3, got {d}")
    if p <= 3 or CM_CURVES[d].discriminant() % p == 0:
        raise BadPrimeError(f"p={p} is not a good prime > 3 for E0_{d}")
    return CM_CURVES[d]


def cornacchia(p: int, d: int) -> tuple[int, int] | None:
    """Nonnegative (x, y) with p = x^2 + d*y^2, or None if there is none."""
    r = sqrt_mod(-d, p)
    if r is None:
        return None
    if 2 * r <= p:
        r = p - r
    a, b = p, r
    while b * b > p:
        a, b = b, a % b
    rest = p - b * b
    if rest % d:
        return None
    y = isqrt(rest // d)
    return (b, y) if d * y * y == rest else None


def trace_E0(p: int, d: int) -> int:
    """p + 1 - #E0_d(F_p) from the norm form; zero at inert p."""
    _check(p, d)
    sol = cornacchia(p, d)
    if sol is None:
        return 0
    x = sol[0]
    if d == 3:
        # E0_3 has full rational 2-torsion at split p and a rational 3-torsion
        # point, which pins x = 1 mod 3 for p + 1 - #E = 2x.
        return 2 * (x if x % 3 == 1 else -x)
    eps = (x - 1) // 2 + (p - 1) * (p + 5) // 16
    return 2 * x if eps % 2 == 0 else -2 * x


def trace_oracle(p: int, d: int) -> int:
    """p + 1 - #E0_d(F_p) by direct enumeration."""
    e = _check(p, d)
    x = np.arange(p, dtype=np.int64)
    val = (((x + e.a2) * x % p + e.a4) * x + e.a6) % p
    is_sq = np.zeros(p, dtype=bool)
    is_sq[x * x % p] = True
    chi = np.where(val == 0, 0, np.where(is_sq[val], 1, -1))
    return -int(chi.sum())


def is_split(p: int, d: int) -> bool:
    """p splits in Q(sqrt(-d))."""
    return sqrt_mod(-d % p, p) not in (None, 0)
