"""Search a coefficient box |c_i| <= B_i for twists of C0_d.

A twist has a1 = 0 at every prime inert in Q(sqrt(-d)) where it has good
reduction, so #C(F_p) = p + 1 there.  That discards almost every curve
cheaply; the survivors go through the exact Igusa comparison.
"""
from __future__ import annotations

import itertools
from typing import Iterator, Sequence

import numpy as np
from numba import njit

from .arith import primes_up_to
from .classify import igusa_twist_check
from .cm import is_split
from .igusa import binary_discriminant
from .jacobian import PL, CurveSextic, _deg, _xgcd


def inert_primes(d: int, count: int = 4, start: int = 7) -> list[int]:
    return [p for p in primes_up_to(1000) if p >= start and p % d and not is_split(p, d)][:count]


@njit(cache=True)
def _passes(rows, primes):
    n = rows.shape[0]
    keep = np.ones(n, np.bool_)
    for p in primes:
        sq = np.zeros(p, np.int8)
        for x in range(p):
            sq[x * x % p] = 1
        for i in range(n):
            if not keep[i]:
                continue
            f = np.zeros(PL, np.int64)
            for k in range(7):
                f[k] = rows[i, k] % p
            deg = _deg(f)
            top = 6
            while top >= 0 and rows[i, top] == 0:
                top -= 1
            if deg != top or deg < 5:
                continue  # bad reduction at p (leading coefficient vanishes)
            df = np.zeros(PL, np.int64)
            for k in range(1, deg + 1):
                df[k - 1] = k * f[k] % p
            g, _, _ = _xgcd(f, df, p)
            if _deg(g) > 0:
                continue  # repeated root mod p
            total = 0
            for x in range(p):
                acc = 0
                for k in range(deg, -1, -1):
                    acc = (acc * x + f[k]) % p
                if acc == 0:
                    total += 1
                elif sq[acc]:
                    total += 2
            if deg == 5:
                total += 1
            elif sq[f[6]]:
                total += 2
            if total != p + 1:
                keep[i] = False
    return keep


def box(bounds: Sequence[int]) -> Iterator[tuple[int, ...]]:
    if len(bounds) != 7:
        raise ValueError("need seven bounds B_0..B_6")
    ranges = [range(-b, b + 1) for b in bounds]
    for c in itertools.product(*ranges):
        if c[6] != 0 or c[5] != 0:
            yield c


def search_box(bounds: Sequence[int], d: int, chunk: int = 1 << 16) -> list[tuple[int, ...]]:
    """All twists of C0_d in the box, in lexicographic order of (c0, ..., c6)."""
    primes = np.array(inert_primes(d), dtype=np.int64)
    found = []
    it = box(bounds)
    while True:
        rows = list(itertools.islice(it, chunk))
        if not rows:
            break
        arr = np.array(rows, dtype=np.int64)
        for i in np.flatnonzero(_passes(arr, primes)):
            c = tuple(int(v) for v in arr[i])
            if binary_discriminant(c) == 0:
                continue
            if igusa_twist_check(CurveSextic.from_coeffs(c, d), d):
                found.append(c)
    return sorted(found)
