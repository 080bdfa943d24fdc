import pytest

from satotwist.arith import primes_up_to
from satotwist.classify import (SLOTS, SRT_MAPS, Inconclusive, NotATwist, ZEstimate,
                                admissible_primes, candidate_pairs, classify_prime,
                                congruence_check, estimate_z, identify_triple, igusa_twist_check,
                                matching_maps, reference_curve, scan)
from satotwist.cm import is_split, trace_E0
from satotwist.groups import ZVector, candidate_table
from satotwist.jacobian import CurveSextic

C03 = reference_curve(3)
X6P2 = CurveSextic.from_coeffs((2, 0, 0, 0, 0, 0, 1), 3)


def test_thirteen_maps():
    assert len(SRT_MAPS) == 13 and len(SLOTS) == 14
    assert sum(m.t == 1 for m in SRT_MAPS) == 8


@pytest.mark.parametrize("d", [2, 3])
def test_split_images_disjoint(d):
    for p in primes_up_to(5000)[2:]:
        if p % d == 0 or not is_split(p, d):
            continue
        X = -trace_E0(p, d)
        seen = {}
        for m in SRT_MAPS:
            if m.t == 1:
                for pair in m.images(X, p):
                    assert seen.setdefault(pair, m.srt) == m.srt


def test_reference_curve_split_and_inert():
    for p in (7, 13, 19, 31, 37, 43):
        rec = classify_prime(C03, 3, p)
        assert rec.srt == (1, 1, 1)
        X = rec.aE_hat
        assert X == -trace_E0(p, 3)
        assert (rec.a1_hat, rec.a2_hat) == (2 * X, X * X + 2 * p)
    rec = classify_prime(C03, 3, 5)
    assert rec.srt == (2, 2, 2) and (rec.a1_hat, rec.a2_hat) == (0, 10)
    assert classify_prime(C03, 3, 7)[3:5] == (8, 30)


def test_6_6_2_row():
    curve = CurveSextic.from_coeffs((1, 6, 0, -20, -15, 0, 1), 3)
    hits = [r for r in scan(curve, 3, 600) if r.srt == (6, 6, 2)]
    assert hits and all(r.a2_hat == -r.p and r.a1_hat == 0 for r in hits)


def test_candidate_pairs_contain_truth():
    for p in (7, 11, 13):
        X = -trace_E0(p, 3)
        t = 1 if is_split(p, 3) else 2
        rec = classify_prime(X6P2, 3, p)
        assert (rec.a1_hat, rec.a2_hat) in candidate_pairs(X, p, t)
        assert len(matching_maps(X, p, t, rec.a1_hat, rec.a2_hat)) == 1


def test_not_a_twist():
    bad = CurveSextic.from_coeffs((1, 1, 0, 0, 0, 0, 1), 3)
    assert not igusa_twist_check(bad, 3)
    with pytest.raises(NotATwist):
        list(scan(bad, 3, 200))


def test_rejects_bad_p():
    with pytest.raises(ValueError):
        classify_prime(C03, 3, 3)


def test_admissible_primes():
    ps = admissible_primes(X6P2, 3, 100)
    assert 2 not in ps and 3 not in ps and 5 not in ps and 7 in ps


def test_identify_exact_vector():
    for d in (2, 3):
        for r in candidate_table(d).records:
            ident = identify_triple(r.z, d)
            assert ident.record == r and ident.distance == 0


def test_inconclusive_without_split_primes():
    with pytest.raises(Inconclusive):
        _ = ZEstimate().normalized


def test_x6_plus_2():
    est = estimate_z(X6P2, 3, 1 << 13)
    ident = identify_triple(est, 3)
    assert ident.record.st_group == "D_{6,2}"
    assert ident.record.group_ids == ((12, 4), (12, 4), (6, 2))
    assert ident.record.z == ZVector.from_flat([1, 0, 1, 2, 0, 0, 2, 0, 0, 6, 0, 0, 0, 0])


def test_quintic_d2():
    est = estimate_z(CurveSextic.from_coeffs((0, 1, 0, 0, 0, 1, 0), 2), 2, 1 << 13)
    ident = identify_triple(est, 2)
    assert ident.record.z.flat() == (1, 0, 1, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0)
    assert ident.record.st_group == "D_{2,1}"


def test_worker_independence():
    one = list(scan(X6P2, 3, 3000, workers=1))
    two = list(scan(X6P2, 3, 3000, workers=2))
    assert one == two


def test_congruences():
    assert congruence_check(C03, C03, 3, 1 << 10)
    assert congruence_check(C03, X6P2, 3, 1 << 10)
    assert not congruence_check(C03, CurveSextic.from_coeffs((1, 1, 0, 0, 0, 0, 1), 3), 3, 1 << 10)
