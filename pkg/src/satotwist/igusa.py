"""Igusa-Clebsch invariants of binary sextics, computed exactly from Clebsch transvectants."""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import NamedTuple, Sequence

# A binary form of degree n is a list a with a[i] the coefficient of x^i z^(n-i).
Form = list


def _dx(a: Form) -> Form:
    return [i * a[i] for i in range(1, len(a))]


def _dz(a: Form) -> Form:
    n = len(a) - 1
    return [(n - i) * a[i] for i in range(n)]


def _mul(a: Form, b: Form) -> Form:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _partial(a: Form, nx: int, nz: int) -> Form:
    for _ in range(nx):
        a = _dx(a)
    for _ in range(nz):
        a = _dz(a)
    return a


def transvectant(f: Form, g: Form, k: int) -> Form:
    m, n = len(f) - 1, len(g) - 1
    out = [Fraction(0)] * (m + n - 2 * k + 1)
    for i in range(k + 1):
        term = _mul(_partial(f, k - i, i), _partial(g, i, k - i))
        sgn = (-1) ** i * comb(k, i)
        for j, t in enumerate(term):
            out[j] += sgn * t
    scale = Fraction(factorial(m - k) * factorial(n - k), factorial(m) * factorial(n))
    return [scale * x for x in out]


class ClebschInvariants(NamedTuple):
    A: Fraction
    B: Fraction
    C: Fraction
    D: Fraction


class IgusaClebsch(NamedTuple):
    I2: Fraction
    I4: Fraction
    I6: Fraction
    I10: Fraction


WEIGHTS = (1, 2, 3, 5)


def _sextic(coeffs: Sequence[int]) -> Form:
    c = [Fraction(x) for x in coeffs] + [Fraction(0)] * (7 - len(coeffs))
    if len(c) != 7:
        raise ValueError("expected at most 7 coefficients")
    return c


def clebsch(coeffs: Sequence[int]) -> ClebschInvariants:
    f = _sextic(coeffs)
    i = transvectant(f, f, 4)
    delta = transvectant(i, i, 2)
    y1 = transvectant(f, i, 4)
    y2 = transvectant(i, y1, 2)
    y3 = transvectant(i, y2, 2)
    A = transvectant(f, f, 6)[0]
    B = transvectant(i, i, 4)[0]
    C = transvectant(i, delta, 4)[0]
    D = transvectant(y3, y1, 2)[0]
    return ClebschInvariants(A, B, C, D)


def igusa_clebsch(coeffs: Sequence[int]) -> IgusaClebsch:
    A, B, C, D = clebsch(coeffs)
    I2 = -120 * A
    I4 = -720 * A ** 2 + 6750 * B
    I6 = 8640 * A ** 3 - 108000 * A * B + 72900 * C
    I10 = (-62208 * A ** 5 + 972000 * A ** 3 * B + 1620000 * A ** 2 * C
           - 3037500 * A * B ** 2 - 6075000 * B * C - 4556250 * D)
    return IgusaClebsch(I2, I4, I6, I10)


def absolute_invariants(coeffs: Sequence[int]) -> tuple[Fraction, Fraction, Fraction]:
    """(I2^5/I10, I2^3 I4/I10, I2^2 I6/I10); only a complete set when I2 != 0."""
    I2, I4, I6, I10 = igusa_clebsch(coeffs)
    if I10 == 0:
        raise ValueError("singular sextic (I10 = 0)")
    return I2 ** 5 / I10, I2 ** 3 * I4 / I10, I2 ** 2 * I6 / I10


def weighted_equal(a: Sequence[Fraction], b: Sequence[Fraction], weights=WEIGHTS) -> bool:
    """Equality in weighted projective space: a_i = lam^w_i b_i for one lam over Qbar."""
    if any((x == 0) != (y == 0) for x, y in zip(a, b)):
        return False
    idx = [k for k, x in enumerate(a) if x != 0]
    for s, i in enumerate(idx):
        for j in idx[s + 1:]:
            wi, wj = weights[i], weights[j]
            if a[i] ** wj * b[j] ** wi != b[i] ** wj * a[j] ** wi:
                return False
    return True


def binary_discriminant(coeffs: Sequence[int]) -> int:
    """Discriminant of the binary sextic (degree-5 inputs get the factor lead^2)."""
    from sympy import Poly, discriminant, symbols

    x = symbols("x")
    c = list(coeffs) + [0] * (7 - len(coeffs))
    if c[6] != 0:
        return int(discriminant(Poly(list(reversed(c)), x)))
    return int(c[5]) ** 2 * int(discriminant(Poly(list(reversed(c[:6])), x)))


def is_squarefree(coeffs: Sequence[int]) -> bool:
    return binary_discriminant(coeffs) != 0


def same_geometric_class(c1: Sequence[int], c2: Sequence[int]) -> bool:
    """True iff the two genus-2 curves are isomorphic over Qbar."""
    return weighted_equal(igusa_clebsch(c1), igusa_clebsch(c2))
