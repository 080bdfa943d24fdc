"""Reference data: candidate triples for each family and the example twists.

The group identifiers are Small Groups Library labels <order, id>.  They are
metadata attached to a computed z-vector; nothing here is used to decide which
subgroups exist.
"""
from __future__ import annotations

from typing import NamedTuple


class TableRow(NamedTuple):
    st_group: str
    gal_LQ: tuple[int, int]
    gal_KQ: tuple[int, int]
    gal_LM: tuple[int, int]
    galois_type: str
    z: tuple[int, ...]
    realizable: bool


_R = TableRow

CANDIDATES: dict[int, tuple[TableRow, ...]] = {
    2: (
        _R("J(C_1)", (4, 1), (2, 1), (2, 1), "F[C_2,C_1,H]", (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0), False),
        _R("J(C_2)", (8, 2), (4, 2), (4, 1), "F[D_2,C_2,H]", (1, 1, 0, 0, 2, 0, 0, 0, 0, 2, 2, 0, 0, 0), True),
        _R("J(C_2)", (8, 3), (4, 2), (4, 2), "F[D_2,C_2,H]", (1, 1, 2, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 0), True),
        _R("J(C_3)", (12, 2), (6, 2), (6, 2), "F[C_6,C_3,H]", (1, 1, 0, 2, 0, 2, 0, 0, 0, 0, 2, 0, 0, 4), False),
        _R("J(C_4)", (16, 6), (8, 2), (8, 1), "F[C_4xC_2,C_4]", (1, 1, 0, 0, 2, 0, 0, 4, 0, 2, 2, 0, 4, 0), True),
        _R("J(D_2)", (16, 11), (8, 5), (8, 3), "F[D_2xC_2,D_2]", (1, 1, 4, 0, 2, 0, 0, 0, 0, 6, 2, 0, 0, 0), True),
        _R("J(D_2)", (16, 13), (8, 5), (8, 4), "F[D_2xC_2,D_2]", (1, 1, 0, 0, 6, 0, 0, 0, 0, 6, 2, 0, 0, 0), True),
        _R("J(D_3)", (24, 6), (12, 4), (12, 4), "F[D_6,D_3,H]", (1, 1, 6, 2, 0, 2, 0, 0, 0, 6, 2, 0, 0, 4), True),
        _R("J(D_4)", (32, 43), (16, 11), (16, 8), "F[D_4xC_2,D_4]", (1, 1, 4, 0, 6, 0, 0, 4, 0, 10, 2, 0, 4, 0), True),
        _R("J(T)", (48, 33), (24, 13), (24, 3), "F[A_4xC_2,A_4]", (1, 1, 0, 8, 6, 8, 0, 0, 0, 6, 2, 0, 0, 16), True),
        _R("J(O)", (96, 193), (48, 48), (48, 29), "F[S_4xC_2,S_4]", (1, 1, 12, 8, 6, 8, 0, 12, 0, 18, 2, 0, 12, 16), True),
        _R("C_{2,1}", (2, 1), (2, 1), (1, 1), "F[C_2,C_1,M_2(R)]", (1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0), True),
        _R("C_{2,1}", (4, 2), (2, 1), (2, 1), "F[C_2,C_1,M_2(R)]", (1, 1, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0), True),
        _R("C_{4,1}", (8, 1), (4, 1), (4, 1), "F[C_4,C_2]", (1, 1, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 4, 0), False),
        _R("D_{2,1}", (4, 2), (4, 2), (2, 1), "F[D_2,C_2,M_2(R)]", (1, 0, 1, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0), True),
        _R("D_{2,1}", (8, 3), (4, 2), (4, 1), "F[D_2,C_2,M_2(R)]", (1, 1, 0, 0, 2, 0, 0, 0, 0, 4, 0, 0, 0, 0), True),
        _R("D_{2,1}", (8, 5), (4, 2), (4, 2), "F[D_2,C_2,M_2(R)]", (1, 1, 2, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0), True),
        _R("D_{3,2}", (6, 1), (6, 1), (3, 1), "F[D_3,C_3]", (1, 0, 0, 2, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0), True),
        _R("D_{3,2}", (12, 4), (6, 1), (6, 2), "F[D_3,C_3]", (1, 1, 0, 2, 0, 2, 0, 0, 0, 6, 0, 0, 0, 0), True),
        _R("D_{4,1}", (16, 7), (8, 3), (8, 3), "F[D_4,D_2]", (1, 1, 4, 0, 2, 0, 0, 0, 0, 4, 0, 0, 4, 0), True),
        _R("D_{4,1}", (16, 8), (8, 3), (8, 4), "F[D_4,D_2]", (1, 1, 0, 0, 6, 0, 0, 0, 0, 4, 0, 0, 4, 0), True),
        _R("D_{4,2}", (16, 7), (8, 3), (8, 1), "F[D_4,C_4]", (1, 1, 0, 0, 2, 0, 0, 4, 0, 8, 0, 0, 0, 0), True),
        _R("O_1", (48, 29), (24, 12), (24, 3), "F[S_4,A_4]", (1, 1, 0, 8, 6, 8, 0, 0, 0, 12, 0, 0, 12, 0), True),
    ),
    3: (
        _R("J(C_1)", (4, 1), (2, 1), (2, 1), "F[C_2,C_1,H]", (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0), False),
        _R("J(C_2)", (8, 2), (4, 2), (4, 1), "F[D_2,C_2,H]", (1, 1, 0, 0, 2, 0, 0, 0, 0, 2, 2, 0, 0, 0), True),
        _R("J(C_2)", (8, 3), (4, 2), (4, 2), "F[D_2,C_2,H]", (1, 1, 2, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 0), True),
        _R("J(C_3)", (12, 2), (6, 2), (6, 2), "F[C_6,C_3,H]", (1, 1, 0, 2, 0, 2, 0, 0, 0, 0, 2, 0, 0, 4), False),
        _R("J(C_6)", (24, 10), (12, 5), (12, 5), "F[C_6xC_2,C_6]", (1, 1, 2, 2, 0, 2, 4, 0, 0, 2, 2, 4, 0, 4), True),
        _R("J(D_2)", (16, 11), (8, 5), (8, 3), "F[D_2xC_2,D_2]", (1, 1, 4, 0, 2, 0, 0, 0, 0, 6, 2, 0, 0, 0), True),
        _R("J(D_3)", (24, 5), (12, 4), (12, 1), "F[D_6,D_3,H]", (1, 1, 0, 2, 6, 2, 0, 0, 0, 6, 2, 0, 0, 4), True),
        _R("J(D_3)", (24, 6), (12, 4), (12, 4), "F[D_6,D_3,H]", (1, 1, 6, 2, 0, 2, 0, 0, 0, 6, 2, 0, 0, 4), True),
        _R("J(D_6)", (48, 38), (24, 14), (24, 8), "F[D_6xC_2,D_6]", (1, 1, 8, 2, 6, 2, 4, 0, 0, 14, 2, 4, 0, 4), True),
        _R("C_{2,1}", (2, 1), (2, 1), (1, 1), "F[C_2,C_1,M_2(R)]", (1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0), True),
        _R("C_{2,1}", (4, 2), (2, 1), (2, 1), "F[C_2,C_1,M_2(R)]", (1, 1, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0), True),
        _R("C_{6,1}", (6, 2), (6, 2), (3, 1), "F[C_6,C_3,M_2(R)]", (1, 0, 0, 2, 0, 0, 0, 0, 0, 1, 0, 2, 0, 0), True),
        _R("C_{6,1}", (12, 5), (6, 2), (6, 2), "F[C_6,C_3,M_2(R)]", (1, 1, 0, 2, 0, 2, 0, 0, 0, 2, 0, 4, 0, 0), True),
        _R("D_{2,1}", (4, 2), (4, 2), (2, 1), "F[D_2,C_2,M_2(R)]", (1, 0, 1, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0), True),
        _R("D_{2,1}", (8, 3), (4, 2), (4, 1), "F[D_2,C_2,M_2(R)]", (1, 1, 0, 0, 2, 0, 0, 0, 0, 4, 0, 0, 0, 0), True),
        _R("D_{2,1}", (8, 5), (4, 2), (4, 2), "F[D_2,C_2,M_2(R)]", (1, 1, 2, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0), True),
        _R("D_{3,2}", (6, 1), (6, 1), (3, 1), "F[D_3,C_3]", (1, 0, 0, 2, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0), True),
        _R("D_{3,2}", (12, 4), (6, 1), (6, 2), "F[D_3,C_3]", (1, 1, 0, 2, 0, 2, 0, 0, 0, 6, 0, 0, 0, 0), True),
        _R("D_{6,1}", (12, 4), (12, 4), (6, 1), "F[D_6,D_3,M_2(R)]", (1, 0, 3, 2, 0, 0, 0, 0, 0, 4, 0, 2, 0, 0), True),
        _R("D_{6,1}", (24, 8), (12, 4), (12, 1), "F[D_6,D_3,M_2(R)]", (1, 1, 0, 2, 6, 2, 0, 0, 0, 8, 0, 4, 0, 0), True),
        _R("D_{6,1}", (24, 14), (12, 4), (12, 4), "F[D_6,D_3,M_2(R)]", (1, 1, 6, 2, 0, 2, 0, 0, 0, 8, 0, 4, 0, 0), True),
        _R("D_{6,2}", (12, 4), (12, 4), (6, 2), "F[D_6,C_6]", (1, 0, 1, 2, 0, 0, 2, 0, 0, 6, 0, 0, 0, 0), True),
        _R("D_{6,2}", (24, 14), (12, 4), (12, 5), "F[D_6,C_6]", (1, 1, 2, 2, 0, 2, 4, 0, 0, 12, 0, 0, 0, 0), True),
    ),
}


class ExampleCurve(NamedTuple):
    """A twist y^2 = c0 + c1 x + ... + c6 x^6 with its known Galois triple."""

    d: int
    coeffs: tuple[int, ...]
    st_group: str
    triple: tuple[tuple[int, int], tuple[int, int], tuple[int, int]]


def _curves(d, rows):
    return tuple(ExampleCurve(d, c, g, t) for g, t, c in rows)


EXAMPLE_CURVES: dict[int, tuple[ExampleCurve, ...]] = {
    2: _curves(2, [
        ("J(C_2)", ((8, 2), (4, 2), (4, 1)), (0, -1, 0, 0, 0, 1, 0)),
        ("J(C_2)", ((8, 3), (4, 2), (4, 2)), (0, 4, 0, 0, 0, 1, 0)),
        ("J(C_4)", ((16, 6), (8, 2), (8, 1)), (1, -1, -5, 0, -5, 1, 1)),
        ("J(D_2)", ((16, 11), (8, 5), (8, 3)), (0, 9, 0, 0, 0, 1, 0)),
        ("J(D_2)", ((16, 13), (8, 5), (8, 4)), (0, -9, 0, 0, 0, 1, 0)),
        ("J(D_3)", ((24, 6), (12, 4), (12, 4)), (-2, 0, 0, 10, 0, 0, 1)),
        ("J(D_4)", ((32, 43), (16, 11), (16, 8)), (0, 3, 0, 0, 0, 1, 0)),
        ("J(T)", ((48, 33), (24, 13), (24, 3)), (8, -8, -20, 20, -20, 6, 1)),
        ("J(O)", ((96, 193), (48, 48), (48, 29)), (-1, 2, -5, 10, -5, 0, 1)),
        ("C_{2,1}", ((2, 1), (2, 1), (1, 1)), (1, 0, -5, 0, -5, 0, 1)),
        ("C_{2,1}", ((4, 2), (2, 1), (2, 1)), (-1, 0, 5, 0, 5, 0, -1)),
        ("D_{2,1}", ((4, 2), (4, 2), (2, 1)), (0, 1, 0, 0, 0, 1, 0)),
        ("D_{2,1}", ((8, 3), (4, 2), (4, 1)), (10, 3, -35, 30, -20, 3, 1)),
        ("D_{2,1}", ((8, 5), (4, 2), (4, 2)), (0, 81, 0, 0, 0, 1, 0)),
        ("D_{3,2}", ((6, 1), (6, 1), (3, 1)), (-89, -498, 135, -20, -15, -18, 1)),
        ("D_{3,2}", ((12, 4), (6, 1), (6, 2)), (-184, 144, 140, 80, -10, 4, 1)),
        ("D_{4,1}", ((16, 7), (8, 3), (8, 3)), (0, -2, 0, 0, 0, 1, 0)),
        ("D_{4,1}", ((16, 8), (8, 3), (8, 4)), (0, 2, 0, 0, 0, 1, 0)),
        ("D_{4,2}", ((16, 7), (8, 3), (8, 1)), (-2, 1, 5, 10, 0, 1, 1)),
        ("O_1", ((48, 29), (24, 12), (24, 3)), (4, 17, 15, 10, 10, 7, 1)),
    ]),
    3: _curves(3, [
        ("J(C_2)", ((8, 2), (4, 2), (4, 1)), (64, -96, 120, 0, 30, 6, 1)),
        ("J(C_2)", ((8, 3), (4, 2), (4, 2)), (0, 9, 0, 10, 0, 1, 0)),
        ("J(C_6)", ((24, 10), (12, 5), (12, 5)), (1, 6, 0, -20, -15, 0, 1)),
        ("J(D_2)", ((16, 11), (8, 5), (8, 3)), (0, 36, 0, 20, 0, 1, 0)),
        ("J(D_3)", ((24, 5), (12, 4), (12, 1)), (5, 18, 30, 20, 15, 0, 1)),
        ("J(D_3)", ((24, 6), (12, 4), (12, 4)), (-32, 72, -60, 40, 0, 6, 1)),
        ("J(D_6)", ((48, 38), (24, 14), (24, 8)), (-6, 15, -15, 10, 0, 3, 1)),
        ("C_{2,1}", ((2, 1), (2, 1), (1, 1)), (1, 0, 0, 0, 0, 0, 1)),
        ("C_{2,1}", ((4, 2), (2, 1), (2, 1)), (1, 0, 15, 0, 15, 0, 1)),
        ("C_{6,1}", ((6, 2), (6, 2), (3, 1)), (-1, 12, -15, -20, 30, -6, -1)),
        ("C_{6,1}", ((12, 5), (6, 2), (6, 2)), (1, -12, 15, 20, -30, 6, 1)),
        ("D_{2,1}", ((4, 2), (4, 2), (2, 1)), (-1, 0, 0, 0, 0, 0, 1)),
        ("D_{2,1}", ((8, 3), (4, 2), (4, 1)), (-88, 120, -60, 40, 30, 30, 11)),
        ("D_{2,1}", ((8, 5), (4, 2), (4, 2)), (-1, 0, 15, 0, -15, 0, 1)),
        ("D_{3,2}", ((6, 1), (6, 1), (3, 1)), (4, 0, 0, 0, 0, 0, 1)),
        ("D_{3,2}", ((12, 4), (6, 1), (6, 2)), (1, 12, 15, 40, 15, 12, 1)),
        ("D_{6,1}", ((12, 4), (12, 4), (6, 1)), (-64, 144, 240, -120, -60, 9, 1)),
        ("D_{6,1}", ((24, 8), (12, 4), (12, 1)), (-8, 24, 60, -40, -30, 6, 1)),
        ("D_{6,1}", ((24, 14), (12, 4), (12, 4)), (28, -60, 60, -20, 15, 3, 1)),
        ("D_{6,2}", ((12, 4), (12, 4), (6, 2)), (2, 0, 0, 0, 0, 0, 1)),
        ("D_{6,2}", ((24, 14), (12, 4), (12, 5)), (-1, 6, -15, 20, -15, 6, 1)),
    ]),
}

# Reference curves C0_d and elliptic curves E0_d (Weierstrass Y^2 = X^3 + a2 X^2 + a4 X + a6).
REFERENCE_CURVE = {2: (1, 0, -5, 0, -5, 0, 1), 3: (1, 0, 0, 0, 0, 0, 1)}
REFERENCE_ELLIPTIC = {2: (-5, -5, 1), 3: (0, 0, 1)}
