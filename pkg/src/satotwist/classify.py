"""Per-prime (s, r, t) classification, z-vector estimation and identification.

All matching is done on integer identities.  With X = aE_hat (the integer
coefficient of T in the L-polynomial 1 + X T + p T^2 of E0_d) every row of the
13-row map table becomes a statement about integers a1_hat, a2_hat, X and p.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Callable, Iterable, Iterator, NamedTuple, Sequence

from .arith import primes_up_to
from .cm import is_split, trace_E0
from .data import REFERENCE_CURVE
from .groups import Z1_SLOTS, Z2_SLOTS, TripleRecord, ZVector, candidate_table
from .igusa import binary_discriminant, same_geometric_class
from .jacobian import (NAIVE_FALLBACK, CurveSextic, InconsistentCandidates,
                       check_good, make_rng, naive_lpoly, select_pair)

WORKERS_ENV = "SATOTWIST_WORKERS"
MIN_SCAN_PRIME = 7


class NotATwist(ValueError):
    """The curve is not a twist of C0_d (raised with the offending prime when found by a scan)."""


class ClassificationError(RuntimeError):
    """Invariant violation: a prime matched several maps, or none when it should not."""


class Inconclusive(RuntimeError):
    pass


# -- the 13 maps ---------------------------------------------------------------

def _sqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


class SRTMap(NamedTuple):
    s: int
    r: int
    t: int
    # images(X, p) -> list of integer (a1_hat, a2_hat) pairs; two for the sign-ambiguous rows
    images: Callable[[int, int], list[tuple[int, int]]]
    sign_ambiguous: bool = False

    @property
    def srt(self) -> tuple[int, int, int]:
        return (self.s, self.r, self.t)

    def matches(self, X: int, p: int, a1: int, a2: int) -> bool:
        return (a1, a2) in self.images(X, p)


def _ambiguous(k: int, shift: int):
    def images(X: int, p: int):
        root = _sqrt_exact(k * (4 * p - X * X))
        if root is None:
            return []
        a2 = -X * X + shift * p
        return [(root, a2), (-root, a2)] if root else [(0, a2)]
    return images


SRT_MAPS: tuple[SRTMap, ...] = (
    SRTMap(1, 1, 1, lambda X, p: [(2 * X, X * X + 2 * p)]),
    SRTMap(2, 1, 1, lambda X, p: [(-2 * X, X * X + 2 * p)]),
    SRTMap(2, 2, 1, lambda X, p: [(0, -X * X + 2 * p)]),
    SRTMap(3, 3, 1, lambda X, p: [(-X, X * X - p)]),
    SRTMap(4, 2, 1, lambda X, p: [(0, X * X - 2 * p)]),
    SRTMap(6, 3, 1, lambda X, p: [(X, X * X - p)]),
    SRTMap(6, 6, 1, _ambiguous(3, 5), True),
    SRTMap(8, 4, 1, _ambiguous(2, 4), True),
    SRTMap(2, 2, 2, lambda X, p: [(0, 2 * p)]),
    SRTMap(4, 2, 2, lambda X, p: [(0, -2 * p)]),
    SRTMap(6, 6, 2, lambda X, p: [(0, -p)]),
    SRTMap(8, 4, 2, lambda X, p: [(0, 0)]),
    SRTMap(12, 6, 2, lambda X, p: [(0, p)]),
)

SLOTS: tuple[tuple[int, int, int], ...] = tuple(
    [(s, r, 1) for s, r in Z1_SLOTS] + [(s, r, 2) for s, r in Z2_SLOTS]
)
SLOT_INDEX = {srt: i for i, srt in enumerate(SLOTS)}


def candidate_pairs(X: int, p: int, t: int) -> list[tuple[int, int]]:
    """All integral (a1_hat, a2_hat) images of the maps for the given residue degree."""
    out = set()
    for m in SRT_MAPS:
        if m.t == t:
            out.update(m.images(X, p))
    return sorted(out)


def matching_maps(X: int, p: int, t: int, a1: int, a2: int) -> list[SRTMap]:
    return [m for m in SRT_MAPS if m.t == t and m.matches(X, p, a1, a2)]


# -- per-prime records ------------------------------------------------------------

class EulerRecord(NamedTuple):
    p: int
    t: int
    aE_hat: int
    a1_hat: int
    a2_hat: int
    srt: tuple[int, int, int]

    @property
    def split(self) -> bool:
        return self.t == 1

    def csv_row(self) -> str:
        s, r, _ = self.srt
        return f"{self.p},{self.t},{self.aE_hat},{self.a1_hat},{self.a2_hat},{s},{r}"


CSV_HEADER = "p,t,aE_hat,a1_hat,a2_hat,s,r"


def bad_primes(curve: CurveSextic, bound: int) -> set[int]:
    """Primes <= bound dividing the leading coefficient or the discriminant.

    Tested by divisibility rather than factoring, which stays cheap for large coefficients.
    """
    n = binary_discriminant(curve.coeffs) * curve.lead
    return {p for p in primes_up_to(bound) if n % p == 0}


def is_admissible(p: int, d: int, bad: set[int]) -> bool:
    return p >= MIN_SCAN_PRIME and p % d != 0 and p not in bad


def classify_prime(curve: CurveSextic, d: int, p: int, seed: int = 0) -> EulerRecord:
    if p <= 3 or p % d == 0:
        raise ValueError(f"p={p} must exceed 3 and be prime to d={d}")
    check_good(curve, p)
    t = 1 if is_split(p, d) else 2
    X = -trace_E0(p, d)
    pairs = candidate_pairs(X, p, t)
    try:
        a1, a2 = select_pair(curve, p, pairs, make_rng(seed, p))
    except InconsistentCandidates as exc:
        raise NotATwist(f"p={p}: Euler factor fits none of the maps ({exc})") from exc
    found = matching_maps(X, p, t, a1, a2)
    if len(found) != 1:
        raise ClassificationError(f"p={p}: {len(found)} maps match (a1, a2) = ({a1}, {a2})")
    return EulerRecord(p, t, X, a1, a2, found[0].srt)


# -- scans ----------------------------------------------------------------------------

def admissible_primes(curve: CurveSextic, d: int, bound: int) -> list[int]:
    bad = bad_primes(curve, bound)
    return [p for p in primes_up_to(bound) if is_admissible(p, d, bad)]


def _classify_chunk(args) -> list[EulerRecord]:
    coeffs, d, primes, seed = args
    curve = CurveSextic(tuple(coeffs), d)
    return [classify_prime(curve, d, p, seed) for p in primes]


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def scan(curve: CurveSextic, d: int, bound: int, seed: int = 0,
         workers: int | None = None) -> Iterator[EulerRecord]:
    """Classify every admissible prime <= bound, yielding records in increasing p."""
    primes = admissible_primes(curve, d, bound)
    workers = default_workers() if workers is None else workers
    if workers <= 1 or len(primes) < 64:
        for p in primes:
            yield classify_prime(curve, d, p, seed)
        return
    from concurrent.futures import ProcessPoolExecutor

    size = max(16, len(primes) // (8 * workers))
    chunks = [(curve.coeffs, d, primes[i:i + size], seed) for i in range(0, len(primes), size)]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        for recs in ex.map(_classify_chunk, chunks):
            yield from recs


@dataclass
class ZEstimate:
    counts: list[int] = field(default_factory=lambda: [0] * 14)
    primes_used: int = 0

    def add(self, rec: EulerRecord) -> None:
        self.counts[SLOT_INDEX[rec.srt]] += 1
        self.primes_used += 1

    @property
    def normalized(self) -> list[Fraction]:
        if self.counts[0] == 0:
            raise Inconclusive("no prime of type (1,1,1) yet; raise the prime bound")
        return [Fraction(c, self.counts[0]) for c in self.counts]

    def frequencies(self) -> list[float]:
        total = sum(self.counts)
        return [c / total for c in self.counts]


def estimate_z(curve: CurveSextic, d: int, bound: int, seed: int = 0, workers: int | None = None,
               sink: Callable[[EulerRecord], None] | None = None) -> ZEstimate:
    est = ZEstimate()
    for rec in scan(curve, d, bound, seed, workers):
        est.add(rec)
        if sink is not None:
            sink(rec)
    if est.counts[0] == 0:
        raise Inconclusive("no prime of type (1,1,1) yet; raise the prime bound")
    return est


# -- identification -----------------------------------------------------------------------

MATCH_THRESHOLD = 0.15
MARGIN = 2.0


def z_distance(freq: Sequence[float], z: ZVector) -> float:
    """L1 distance between frequency vectors: both scaled to total mass 1."""
    flat = z.flat()
    total = sum(flat)
    return sum(abs(f - v / total) for f, v in zip(freq, flat))


class Identification(NamedTuple):
    record: TripleRecord
    distance: float
    runner_up: TripleRecord
    runner_up_distance: float

    @property
    def accepted(self) -> bool:
        return self.distance < MATCH_THRESHOLD and self.runner_up_distance >= MARGIN * self.distance


def identify_triple(z: ZEstimate | Sequence[float] | ZVector, d: int) -> Identification:
    """Closest candidate record; check .accepted before trusting it."""
    if isinstance(z, ZEstimate):
        freq = z.frequencies()
    elif isinstance(z, ZVector):
        flat = z.flat()
        freq = [v / sum(flat) for v in flat]
    else:
        tot = sum(z)
        freq = [float(v) / tot for v in z]
    ranked = sorted(((z_distance(freq, r.z), r.sort_key(), r) for r in candidate_table(d).records),
                    key=lambda x: (x[0], x[1]))
    (d0, _, r0), (d1, _, r1) = ranked[0], ranked[1]
    return Identification(r0, d0, r1, d1)


# -- twist membership and congruences -------------------------------------------------------

def igusa_twist_check(curve: CurveSextic, d: int) -> bool:
    if binary_discriminant(curve.coeffs) == 0:
        raise ValueError("f has a repeated root")
    return same_geometric_class(curve.coeffs, REFERENCE_CURVE[d])


def _a2_hat(curve: CurveSextic, d: int, p: int, seed: int) -> int:
    try:
        return classify_prime(curve, d, p, seed).a2_hat
    except NotATwist:
        # the Euler factor has no twist shape; fall back to counting if that is cheap
        if p > NAIVE_FALLBACK:
            raise
        return naive_lpoly(curve, p)[1]


def congruence_check(c1: CurveSextic, c2: CurveSextic, d: int, bound: int, seed: int = 0) -> bool:
    """a2_hat(C1)(p) = +-a2_hat(C2)(p) mod p at every admissible split p <= bound."""
    bad = bad_primes(c1, bound) | bad_primes(c2, bound)
    for p in primes_up_to(bound):
        if not is_admissible(p, d, bad) or not is_split(p, d):
            continue
        a = _a2_hat(c1, d, p, seed)
        b = _a2_hat(c2, d, p, seed)
        if (a - b) % p and (a + b) % p:
            return False
    return True


def reference_curve(d: int) -> CurveSextic:
    return CurveSextic(REFERENCE_CURVE[d], d)


def records_from(curve: CurveSextic, d: int, primes: Iterable[int], seed: int = 0) -> list[EulerRecord]:
    return [classify_prime(curve, d, p, seed) for p in primes]
