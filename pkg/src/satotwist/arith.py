"""Modular arithmetic over F_p: residues, square roots, polynomials, primes, factoring."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def sqrt_mod(a: int, p: int) -> int | None:
    """A square root of a mod the odd prime p (Tonelli-Shanks), or None for non-residues."""
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def nonresidue(p: int) -> int:
    """Smallest quadratic non-residue mod p."""
    g = 2
    while legendre(g, p) != -1:
        g += 1
    return g


def factor(n: int) -> dict[int, int]:
    """Prime factorization {prime: exponent}; trial division then Pollard rho (Brent)."""
    if n < 1:
        raise ValueError(f"factor expects a positive integer, got {n}")
    from sympy import factorint

    return {int(q): int(e) for q, e in sorted(factorint(n).items())}


def primes_up_to(bound: int) -> list[int]:
    if bound < 2:
        return []
    sieve = np.ones(bound + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, int(bound ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = False
    return np.flatnonzero(sieve).tolist()


@lru_cache(maxsize=8)
def _prime_array(bound: int) -> np.ndarray:
    return np.array(primes_up_to(bound), dtype=np.int64)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 1 << 20:
        arr = _prime_array(1 << 20)
        i = np.searchsorted(arr, n)
        return i < len(arr) and arr[i] == n
    from sympy import isprime

    return bool(isprime(n))


@dataclass(frozen=True)
class FpPoly:
    """Polynomial over F_p; coeffs[i] is the coefficient of x^i, trailing zeros stripped."""

    p: int
    coeffs: tuple[int, ...]

    @classmethod
    def make(cls, coeffs, p: int) -> "FpPoly":
        c = [int(x) % p for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        return cls(p, tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def __add__(self, other: "FpPoly") -> "FpPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return FpPoly.make([x + y for x, y in zip(a, b)], self.p)

    def __neg__(self) -> "FpPoly":
        return FpPoly.make([-x for x in self.coeffs], self.p)

    def __sub__(self, other: "FpPoly") -> "FpPoly":
        return self + (-other)

    def __mul__(self, other: "FpPoly") -> "FpPoly":
        if self.is_zero() or other.is_zero():
            return FpPoly(self.p, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return FpPoly.make(out, self.p)

    def scale(self, c: int) -> "FpPoly":
        return FpPoly.make([c * x for x in self.coeffs], self.p)

    def monic(self) -> "FpPoly":
        return self.scale(pow(self.lead(), -1, self.p)) if self.coeffs else self

    def divmod(self, other: "FpPoly") -> tuple["FpPoly", "FpPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        r = list(self.coeffs)
        inv = pow(other.lead(), -1, p)
        dq = len(r) - len(other.coeffs)
        q = [0] * max(dq + 1, 0)
        for k in range(dq, -1, -1):
            c = r[k + other.degree] * inv % p
            q[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    r[k + j] = (r[k + j] - c * b) % p
        return FpPoly.make(q, p), FpPoly.make(r, p)

    def __mod__(self, other: "FpPoly") -> "FpPoly":
        return self.divmod(other)[1]

    def derivative(self) -> "FpPoly":
        return FpPoly.make([i * c for i, c in enumerate(self.coeffs)][1:], self.p)


def poly_gcd(a: FpPoly, b: FpPoly) -> FpPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()
