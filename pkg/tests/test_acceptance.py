"""Acceptance criteria 1-10.

Each test prints one line "criterion N: PASS|FAIL ..." (also collected into the
pytest terminal summary).  Run alone with

    python -m pytest tests/test_acceptance.py -s

Set SATOTWIST_FULL=1 to also classify every example curve (about 15 minutes).
"""
import os
import time
from pathlib import Path

import numpy as np
import pytest

from satotwist import groups
from satotwist.arith import primes_up_to
from satotwist.classify import (admissible_primes, classify_prime, congruence_check,
                                estimate_z, identify_triple, matching_maps, ZEstimate)
from satotwist.cm import trace_E0, trace_oracle
from satotwist.data import EXAMPLE_CURVES, REFERENCE_CURVE
from satotwist.groups import candidate_table
from satotwist.jacobian import (CurveSextic, JacobianError, cantor_add, check_good,
                                jacobian_order_naive, lpoly_values, make_rng, model_for,
                                naive_lpoly, negate, random_divisor, scalar_mul)
from satotwist.moments import (b_coeff, b_coeff_sum, empirical_compare, measure_from_z,
                               normalized_values, theoretical_moments)
from satotwist.tables import FORMATTERS

GOLDEN = Path(__file__).parent / "golden"
BOUND = 1 << 16

# tolerances
MOMENT_TOL = 0.1
KS_TOL = 0.02
MATCH_TOL = 0.15
MARGIN = 2.0
QUAD_RTOL = 1e-8

# example curves for end-to-end identification (coefficients c0..c6)
E2E = {
    2: [(1, 0, -5, 0, -5, 0, 1), (-1, 2, -5, 10, -5, 0, 1), (8, -8, -20, 20, -20, 6, 1),
        (0, 3, 0, 0, 0, 1, 0), (1, -1, -5, 0, -5, 1, 1), (-2, 1, 5, 10, 0, 1, 1),
        (4, 17, 15, 10, 10, 7, 1), (0, -1, 0, 0, 0, 1, 0), (0, 1, 0, 0, 0, 1, 0)],
    3: [(1, 0, 0, 0, 0, 0, 1), (-6, 15, -15, 10, 0, 3, 1), (1, 6, 0, -20, -15, 0, 1),
        (5, 18, 30, 20, 15, 0, 1), (2, 0, 0, 0, 0, 0, 1), (4, 0, 0, 0, 0, 0, 1),
        (-1, 12, -15, -20, 30, -6, -1), (-8, 24, 60, -40, -30, 6, 1), (0, 9, 0, 10, 0, 1, 0)],
}
# ten curves for the Euler-factor oracle, five per family
ORACLE = {2: E2E[2][:5], 3: E2E[3][:5]}
# twists paired with C0_d for the congruence property
CONGRUENCE = {2: E2E[2][1:6], 3: E2E[3][1:6]}
# (curve, d, p) samples for the group-law suite
GROUP_LAW = [((1, 0, -5, 0, -5, 0, 1), 2, 101), ((-1, 2, -5, 10, -5, 0, 1), 2, 65537),
             ((0, -1, 0, 0, 0, 1, 0), 2, 1019), ((1, 0, 0, 0, 0, 0, 1), 3, 1009),
             ((-6, 15, -15, 10, 0, 3, 1), 3, 4099), ((2, 0, 0, 0, 0, 0, 1), 3, 524287)]

_EXPECTED = {(d, e.coeffs): e for d in (2, 3) for e in EXAMPLE_CURVES[d]}


def _report(log, n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(line)
    log.append(line)
    assert ok, line


def _identify(scans, coeffs, d):
    t = time.perf_counter()
    recs = scans(coeffs, d, BOUND)
    est = ZEstimate()
    for r in recs:
        est.add(r)
    return identify_triple(est, d), time.perf_counter() - t


def test_criterion_1_tables(acceptance_log):
    groups._TABLE_CACHE.clear()
    t = time.perf_counter()
    problems = []
    for d, classes, realizable in ((2, 27, 20), (3, 38, 21)):
        tab = candidate_table(d)
        if tab.class_count != classes:
            problems.append(f"d={d} classes {tab.class_count}")
        if tab.realizable_count != realizable or len(tab.records) != 23:
            problems.append(f"d={d} records {len(tab.records)} realizable {tab.realizable_count}")
        for fmt, ext in (("json", "json"), ("csv", "csv"), ("text", "txt")):
            if FORMATTERS[fmt](tab) != (GOLDEN / f"table_d{d}.{ext}").read_text():
                problems.append(f"d={d} {fmt} differs from golden")
    dt = time.perf_counter() - t
    if dt >= 10:
        problems.append(f"runtime {dt:.1f}s")
    _report(acceptance_log, 1, not problems,
            f"23+23 rows byte-identical, classes 27/38, realizable 20/21, {dt:.1f}s {problems or ''}")


def test_criterion_2_cm_traces(acceptance_log):
    t = time.perf_counter()
    bad, checked = [], 0
    for d in (2, 3):
        for p in primes_up_to(10 ** 4):
            if p <= 3 or p % d == 0:
                continue
            checked += 1
            if trace_E0(p, d) != trace_oracle(p, d):
                bad.append((d, p))
    dt = time.perf_counter() - t
    _report(acceptance_log, 2, not bad and dt < 30,
            f"{checked} (d, p) pairs, {len(bad)} mismatches, {dt:.1f}s")


def test_criterion_3_euler_oracle(acceptance_log):
    t = time.perf_counter()
    bad, checked = [], 0
    for d, curves in ORACLE.items():
        for coeffs in curves:
            curve = CurveSextic.from_coeffs(coeffs, d)
            for p in primes_up_to(1 << 8):
                if p <= 3 or p % d == 0:
                    continue
                try:
                    check_good(curve, p)
                except JacobianError:
                    continue
                checked += 1
                rec = classify_prime(curve, d, p)
                if (rec.a1_hat, rec.a2_hat) != naive_lpoly(curve, p):
                    bad.append((coeffs, p))
    dt = time.perf_counter() - t
    _report(acceptance_log, 3, not bad and dt < 300,
            f"10 curves, {checked} good primes <= 256, {len(bad)} mismatches, {dt:.1f}s")


def test_criterion_5_identification(scans, acceptance_log):
    wrong, slowest, worst, margin = [], 0.0, 0.0, float("inf")
    for d, curves in E2E.items():
        for coeffs in curves:
            ident, dt = _identify(scans, coeffs, d)
            exp = _EXPECTED[(d, coeffs)]
            rec = ident.record
            ok = (rec.st_group == exp.st_group and rec.group_ids == exp.triple
                  and ident.distance < MATCH_TOL and ident.runner_up_distance >= MARGIN * ident.distance)
            if not ok:
                wrong.append((d, coeffs, rec.st_group, round(ident.distance, 4)))
            slowest = max(slowest, dt)
            worst = max(worst, ident.distance)
            margin = min(margin, ident.runner_up_distance / max(ident.distance, 1e-12))
    n = sum(len(c) for c in E2E.values())
    _report(acceptance_log, 5, not wrong and slowest < 600,
            f"{n} curves (9+9, incl. J(O), J(D_6)) at 2^16, max distance {worst:.4f}, "
            f"min runner-up ratio {margin:.1f}, slowest {slowest:.0f}s {wrong or ''}")


def test_criterion_4_uniqueness(scans, acceptance_log):
    violations, primes = 0, 0
    for d, curves in E2E.items():
        for coeffs in curves:
            recs = scans(coeffs, d, BOUND)
            curve = CurveSextic.from_coeffs(coeffs, d)
            if [r.p for r in recs] != admissible_primes(curve, d, BOUND):
                violations += 1
            for r in recs:
                primes += 1
                if len(matching_maps(r.aE_hat, r.p, r.t, r.a1_hat, r.a2_hat)) != 1:
                    violations += 1
    _report(acceptance_log, 4, violations == 0,
            f"{primes} admissible primes over the criterion-5 scans, {violations} violations")


def _moment_stats(scans, d):
    """(deviation, standard error) per coefficient and n = 1..4, plus the KS gaps, for C0_d."""
    recs = scans(REFERENCE_CURVE[d], d, BOUND)
    ident, _ = _identify(scans, REFERENCE_CURVE[d], d)
    rep = empirical_compare(recs, ident.record.z, 4)
    stats = {}
    for coeff in ("a1", "a2"):
        v = normalized_values(recs, coeff)
        se = [float(np.std(v ** n) / np.sqrt(len(v))) for n in range(5)]
        stats[coeff] = [(rep.deviation[coeff][n], se[n]) for n in range(1, 5)]
    return stats, rep.ks


def test_criterion_6_moments(scans, acceptance_log):
    ok, detail = True, []
    for d in (2, 3):
        stats, ks = _moment_stats(scans, d)
        for coeff, rows in stats.items():
            ok &= all(dev < MOMENT_TOL for dev, _ in rows) and ks[coeff] < KS_TOL
            devs = " ".join(f"{dev:.3f}(se {se:.3f})" for dev, se in rows)
            detail.append(f"C0_{d} {coeff}: |dM_1..4| {devs}, ks {ks[coeff]:.4f}")
    _report(acceptance_log, 6, ok, "; ".join(detail))


def test_moments_within_sampling_error(scans):
    """Companion to criterion 6 (not a substitute): deviations against their own standard errors."""
    for d in (2, 3):
        stats, ks = _moment_stats(scans, d)
        for coeff, rows in stats.items():
            assert all(dev < 3 * se for dev, se in rows), (d, coeff, rows)
            assert ks[coeff] < KS_TOL


def test_criterion_7_b_coefficients(acceptance_log):
    same = all(b_coeff(m, n) == b_coeff_sum(m, n) for m in range(5) for n in range(21))
    head = [b_coeff(0, n) for n in range(7)]
    _report(acceptance_log, 7, same and head == [1, 0, 2, 0, 6, 0, 20],
            f"expansion = double sum for m<=4, n<=20; b_0,n = {head}")


def test_criterion_8_congruences(acceptance_log):
    failed = []
    for d, curves in CONGRUENCE.items():
        ref = CurveSextic.from_coeffs(REFERENCE_CURVE[d], d)
        for coeffs in curves:
            if not congruence_check(CurveSextic.from_coeffs(coeffs, d), ref, d, 1 << 12):
                failed.append((d, coeffs))
    _report(acceptance_log, 8, not failed, f"5+5 twist pairs with C0_d at split p <= 2^12, {len(failed)} failures")


def test_criterion_9_group_laws(acceptance_log):
    failures, triples, kills = 0, 0, 0
    for coeffs, d, p in GROUP_LAW:
        curve = CurveSextic.from_coeffs(coeffs, d)
        model = model_for(curve, p)
        rng = make_rng(11, p, 3)
        ds = [random_divisor(model, rng) for _ in range(3000)]
        for a, b, c in zip(ds[0::3], ds[1::3], ds[2::3]):
            triples += 1
            ab = cantor_add(a, b, model)
            if ab != cantor_add(b, a, model):
                failures += 1
            if cantor_add(ab, c, model) != cantor_add(a, cantor_add(b, c, model), model):
                failures += 1
            if not cantor_add(a, negate(a, model), model).is_identity():
                failures += 1
        if p <= 1 << 12:
            order = jacobian_order_naive(curve, p)
        else:
            rec = classify_prime(curve, d, p)
            order = lpoly_values(rec.a1_hat, rec.a2_hat, p)[0]
        for D in ds[:100]:
            kills += 1
            if not scalar_mul(order, D, model).is_identity():
                failures += 1
    _report(acceptance_log, 9, failures == 0,
            f"{len(GROUP_LAW)} (curve, p) samples, {triples} triples, {kills} L_p(1) annihilations, "
            f"{failures} failures")


def test_criterion_10_measures(acceptance_log):
    worst, bad_mass = 0.0, 0
    for d in (2, 3):
        for r in candidate_table(d).records:
            exact = theoretical_moments(r.z, 8)
            for coeff, ex in (("a1", exact.m1), ("a2", exact.m2)):
                mu = measure_from_z(r.z, coeff)
                if mu.total_mass() != 1:
                    bad_mass += 1
                for n in range(9):
                    rel = abs(mu.quadrature_moment(n) - float(ex[n])) / max(1.0, abs(float(ex[n])))
                    worst = max(worst, rel)
    _report(acceptance_log, 10, bad_mass == 0 and worst < QUAD_RTOL,
            f"46 z-vectors x 2 coefficients, mass 1 everywhere ({bad_mass} bad), "
            f"max relative quadrature error {worst:.1e}")


@pytest.mark.skipif(os.environ.get("SATOTWIST_FULL") != "1", reason="set SATOTWIST_FULL=1 for all 41 curves")
def test_all_example_curves():
    wrong = []
    for d in (2, 3):
        for e in EXAMPLE_CURVES[d]:
            ident = identify_triple(estimate_z(CurveSextic.from_coeffs(e.coeffs, d), d, BOUND), d)
            if not (ident.accepted and ident.record.st_group == e.st_group
                    and ident.record.group_ids == e.triple):
                wrong.append(e.coeffs)
    assert wrong == []


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))
