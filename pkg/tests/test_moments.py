from fractions import Fraction

import pytest

from satotwist.classify import EulerRecord
from satotwist.groups import ZVector, candidate_table
from satotwist.moments import (INTERVALS, ArcComponent, b_coeff, b_coeff_sum, empirical_compare,
                               histogram, measure_from_z, theoretical_moments)

C21 = ZVector.from_flat([1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0])
ALL_Z = [r.z for d in (2, 3) for r in candidate_table(d).records]


def test_b_coeff_examples():
    assert all(b_coeff(m, 0) == 1 for m in range(5))
    assert b_coeff(0, 2) == 2
    assert b_coeff(1, 3) == 7
    assert [b_coeff(0, n) for n in range(7)] == [1, 0, 2, 0, 6, 0, 20]


def test_b_coeff_identity():
    for m in range(5):
        for n in range(21):
            assert b_coeff(m, n) == b_coeff_sum(m, n)


def test_c21_moments():
    tab = theoretical_moments(C21, 4)
    assert tab.m1[0] == tab.m2[0] == 1
    assert tab.m1[2] == 4
    assert tab.m2[1] == 3
    assert tab.m1[1] == tab.m1[3] == 0


def test_moments_rational_and_variance():
    for z in ALL_Z:
        tab = theoretical_moments(z, 8)
        assert all(isinstance(v, Fraction) for v in tab.m1 + tab.m2)
        assert tab.m2[2] >= tab.m2[1] ** 2
        assert all(v == 0 for v in tab.m1[1::2])


def test_c21_a1_measure():
    mu = measure_from_z(C21, "a1")
    assert mu.continuous_components == (ArcComponent(Fraction(1, 2), "arc-a1", 4),)
    assert mu.atoms == ((0, Fraction(1, 2)),)


def test_only_order_two_mass_is_delta():
    z = ZVector.from_flat([1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0])  # hypothetical input
    z2 = ZVector((0, 0, 1, 0, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0))
    mu = measure_from_z(z2, "a1")
    assert mu.continuous_components == () and mu.atoms == ((0, Fraction(1)),)
    assert measure_from_z(z, "a1").total_mass() == 1


@pytest.mark.parametrize("coeff", ["a1", "a2"])
def test_measures_mass_support_quadrature(coeff):
    lo, hi = INTERVALS[coeff]
    for z in ALL_Z:
        mu = measure_from_z(z, coeff)
        assert mu.total_mass() == 1
        for c in mu.continuous_components:
            a, b = c.support()
            assert lo <= a and b <= hi
        assert all(lo <= loc <= hi for loc, _ in mu.atoms)
        exact = theoretical_moments(z, 8)
        ex = exact.m1 if coeff == "a1" else exact.m2
        for n in range(9):
            q = mu.quadrature_moment(n)
            assert abs(q - float(ex[n])) <= 1e-8 * max(1.0, abs(float(ex[n])))


def test_cdf_monotone_with_jumps():
    mu = measure_from_z(C21, "a1")
    assert mu.cdf(-4.1) == 0 and mu.cdf(4.1) == pytest.approx(1)
    assert mu.cdf(0) - mu.cdf(0, left=True) == pytest.approx(0.5)
    xs = [i / 10 for i in range(-45, 46)]
    vals = [mu.cdf(x) for x in xs]
    assert vals == sorted(vals)


def _rec(p, a1, a2):
    return EulerRecord(p, 1, 0, a1, a2, (1, 1, 1))


def test_one_prime_stream():
    rep = empirical_compare([_rec(7, 8, 30)], C21, 3)
    assert rep.empirical["a1"] == pytest.approx([1, 8 / 7 ** 0.5, 64 / 7, 512 / 7 ** 1.5])
    assert rep.empirical["a2"] == pytest.approx([1, 30 / 7, (30 / 7) ** 2, (30 / 7) ** 3])
    with pytest.raises(ValueError):
        empirical_compare([], C21)


def test_histogram_inert_only():
    recs = [EulerRecord(p, 2, 0, 0, 2 * p, (2, 2, 2)) for p in (5, 11, 17, 23)]
    h = histogram(recs, "a1", 8, C21)
    assert sum(h.counts) == 4
    assert h.counts[4] == 4  # bin [0, 1)
    assert sum(h.masses) == pytest.approx(1)
    h2 = histogram(recs, "a2", 12, C21)
    assert h2.counts[8] == 4  # a2/p = 2 lies in [2, 3)
    assert h2.csv().splitlines()[0] == "bin_lo,bin_hi,empirical_count,theoretical_mass"
    with pytest.raises(ValueError):
        histogram(recs, "a1", 0, C21)
