"""Exact arithmetic in Q(sqrt(-d)), d in {2, 3}, on half-integral coordinates.

Everything the automorphism groups need lives in (1/2)Z[sqrt(-d)], so an
element is stored as a pair of integer numerators over a denominator of 1 or 2.
Single products of two half-integral numbers can need a denominator of 4, so
matrix entries are computed as fused dot products over 4 and only then brought
back to the half-integral lattice; an entry that does not fit raises, because
it means a generator was mistyped.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

SUPPORTED_D = (2, 3)


class QuadError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class QuadElem:
    """The number (a + b*sqrt(-d)) / den, always in canonical form."""

    a: int
    b: int
    den: int
    d: int

    @classmethod
    def make(cls, a: int, b: int, den: int, d: int) -> "QuadElem":
        if d not in SUPPORTED_D:
            raise QuadError(f"unsupported discriminant tag d={d}")
        if den not in (1, 2):
            raise QuadError(f"denominator {den} outside (1/2)Z[sqrt(-{d})]")
        if den == 2 and a % 2 == 0 and b % 2 == 0:
            a, b, den = a // 2, b // 2, 1
        return cls(a, b, den, d)

    @classmethod
    def from_halves(cls, a2: int, b2: int, d: int) -> "QuadElem":
        """Build (a2 + b2*sqrt(-d)) / 2."""
        return cls.make(a2, b2, 2, d)

    @classmethod
    def integer(cls, n: int, d: int) -> "QuadElem":
        return cls.make(n, 0, 1, d)

    def halves(self) -> tuple[int, int]:
        """Numerators over the fixed denominator 2."""
        k = 2 // self.den
        return self.a * k, self.b * k

    def canonical(self) -> "QuadElem":
        return QuadElem.make(self.a, self.b, self.den, self.d)

    def _check(self, other: "QuadElem") -> None:
        if self.d != other.d:
            raise QuadError(f"mismatched fields: d={self.d} vs d={other.d}")

    def __add__(self, other: "QuadElem") -> "QuadElem":
        self._check(other)
        a1, b1 = self.halves()
        a2, b2 = other.halves()
        return QuadElem.from_halves(a1 + a2, b1 + b2, self.d)

    def __neg__(self) -> "QuadElem":
        return QuadElem(-self.a, -self.b, self.den, self.d)

    def __sub__(self, other: "QuadElem") -> "QuadElem":
        return self + (-other)

    def __mul__(self, other: "QuadElem") -> "QuadElem":
        return quad_mul(self, other)

    def conj(self) -> "QuadElem":
        """Galois conjugation sqrt(-d) -> -sqrt(-d)."""
        return QuadElem(self.a, -self.b, self.den, self.d)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __str__(self) -> str:
        s = f"{self.a}{self.b:+d}*sqrt(-{self.d})"
        return s if self.den == 1 else f"({s})/2"


def quad_mul(x: QuadElem, y: QuadElem) -> QuadElem:
    x._check(y)
    a1, b1 = x.halves()
    a2, b2 = y.halves()
    # (a1 + b1 s)(a2 + b2 s) / 4 with s^2 = -d, written back over 2
    re = a1 * a2 - x.d * b1 * b2
    im = a1 * b2 + a2 * b1
    if re % 2 or im % 2:
        raise QuadError(f"product {x} * {y} leaves (1/2)Z[sqrt(-{x.d})]")
    return QuadElem.from_halves(re // 2, im // 2, x.d)


class Mat2(NamedTuple):
    e11: QuadElem
    e12: QuadElem
    e21: QuadElem
    e22: QuadElem

    @classmethod
    def identity(cls, d: int) -> "Mat2":
        one, zero = QuadElem.integer(1, d), QuadElem.integer(0, d)
        return cls(one, zero, zero, one)

    @classmethod
    def scalar(cls, n: int, d: int) -> "Mat2":
        c, zero = QuadElem.integer(n, d), QuadElem.integer(0, d)
        return cls(c, zero, zero, c)

    @property
    def d(self) -> int:
        return self.e11.d

    def det(self) -> QuadElem:
        return _dot2(self.e11, self.e22, -self.e12, self.e21)

    def trace(self) -> QuadElem:
        return self.e11 + self.e22

    def conj(self) -> "Mat2":
        return Mat2(*(e.conj() for e in self))

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return mat_mul(self, other)


def _dot2(a: QuadElem, b: QuadElem, c: QuadElem, e: QuadElem) -> QuadElem:
    """a*b + c*e, exact, with the result required to lie in (1/2)Z[sqrt(-d)]."""
    d = a.d
    for other in (b, c, e):
        a._check(other)
    re4 = im4 = 0
    for x, y in ((a, b), (c, e)):
        x1, x2 = x.halves()
        y1, y2 = y.halves()
        re4 += x1 * y1 - d * x2 * y2
        im4 += x1 * y2 + x2 * y1
    if re4 % 2 or im4 % 2:
        raise QuadError(f"matrix entry ({re4}+{im4}*sqrt(-{d}))/4 leaves (1/2)Z[sqrt(-{d})]")
    return QuadElem.from_halves(re4 // 2, im4 // 2, d)


def mat_mul(x: Mat2, y: Mat2) -> Mat2:
    return Mat2(
        _dot2(x.e11, y.e11, x.e12, y.e21),
        _dot2(x.e11, y.e12, x.e12, y.e22),
        _dot2(x.e21, y.e11, x.e22, y.e21),
        _dot2(x.e21, y.e12, x.e22, y.e22),
    )


def mat_pow(x: Mat2, n: int) -> Mat2:
    out = Mat2.identity(x.d)
    for _ in range(n):
        out = out @ x
    return out


class GrpElem(NamedTuple):
    """Element (matrix, gal) of Aut(C0_M) x| Gal(M/Q); gal is 0 (id) or 1 (conjugation)."""

    mat: Mat2
    gal: int

    @classmethod
    def identity(cls, d: int) -> "GrpElem":
        return cls(Mat2.identity(d), 0)

    def __mul__(self, other: "GrpElem") -> "GrpElem":
        return grp_mul(self, other)


def grp_mul(x: GrpElem, y: GrpElem) -> GrpElem:
    """(m1, g1)(m2, g2) = (m1 * g1(m2), g1 g2)."""
    m2 = y.mat.conj() if x.gal else y.mat
    return GrpElem(x.mat @ m2, x.gal ^ y.gal)


MAX_ORDER = 96


def elem_order(x: GrpElem) -> int:
    one = GrpElem.identity(x.mat.d)
    acc = x
    for n in range(1, MAX_ORDER + 1):
        if acc == one:
            return n
        acc = acc * x
    raise RuntimeError(f"element {x} has no order <= {MAX_ORDER}; not in a finite group")


def generators(d: int) -> tuple[Mat2, Mat2]:
    """The matrices U_d, V_d generating Aut(C0_d) over M."""
    h = QuadElem.from_halves
    if d == 3:
        zero, one = QuadElem.integer(0, 3), QuadElem.integer(1, 3)
        u = Mat2(zero, one, one, zero)
        v = Mat2(zero, h(-1, 1, 3), h(1, 1, 3), zero)
    elif d == 2:
        u = Mat2(h(-1, 1, 2), h(1, 0, 2), h(1, 0, 2), h(1, 1, 2))
        v = Mat2(h(1, 0, 2), h(1, -1, 2), h(-1, -1, 2), h(1, 0, 2))
    else:
        raise QuadError(f"unsupported discriminant tag d={d}")
    return u, v
