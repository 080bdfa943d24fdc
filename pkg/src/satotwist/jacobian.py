"""Jac(C)(F_p) for genus-2 curves y^2 = f(x), deg f in {5, 6}.

The group law is Cantor's algorithm on Mumford pairs.  It is only applied to
models where it needs no balancing at infinity: either deg f = 5, or deg f = 6
with a non-square leading coefficient (the two points at infinity are then
conjugate and form one degree-2 place).  Any curve is moved to such a model by
x -> x0 + 1/X, choosing x0 with f(x0) = 0 or f(x0) a non-square.  If no such
x0 exists every fibre over P^1(F_p) holds two points, which pins #C(F_p) = 2p + 2;
that only happens for p <= 13 and is handled by the caller.

Polynomials inside the jitted kernels are int64 arrays of length PL, with
coefficient i of x^i.  The prime must stay below 2^31 so products fit in int64.
"""
from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np
from numba import njit

from .arith import FpPoly, factor, legendre, nonresidue

PL = 16
MAX_P = 1 << 31


class JacobianError(RuntimeError):
    pass


class InconsistentCandidates(JacobianError):
    """No candidate order annihilates a sampled divisor."""


# -- jitted polynomial arithmetic ---------------------------------------------

@njit(cache=True)
def _deg(a):
    for i in range(PL - 1, -1, -1):
        if a[i] != 0:
            return i
    return -1


@njit(cache=True)
def _inv(a, p):
    # p prime, a != 0 mod p
    r, e, b = 1, p - 2, a % p
    while e:
        if e & 1:
            r = r * b % p
        b = b * b % p
        e >>= 1
    return r


@njit(cache=True)
def _sub(a, b, p):
    out = np.empty(PL, np.int64)
    for i in range(PL):
        out[i] = (a[i] - b[i]) % p
    return out


@njit(cache=True)
def _add(a, b, p):
    out = np.empty(PL, np.int64)
    for i in range(PL):
        out[i] = (a[i] + b[i]) % p
    return out


@njit(cache=True)
def _mul(a, b, p):
    out = np.zeros(PL, np.int64)
    da, db = _deg(a), _deg(b)
    if da < 0 or db < 0:
        return out
    for i in range(da + 1):
        if a[i]:
            for j in range(db + 1):
                out[i + j] = (out[i + j] + a[i] * b[j]) % p
    return out


@njit(cache=True)
def _scale(a, c, p):
    out = np.empty(PL, np.int64)
    for i in range(PL):
        out[i] = a[i] * c % p
    return out


@njit(cache=True)
def _divmod(a, b, p):
    q = np.zeros(PL, np.int64)
    r = a.copy()
    db = _deg(b)
    inv = _inv(b[db], p)
    dr = _deg(r)
    while dr >= db:
        c = r[dr] * inv % p
        k = dr - db
        q[k] = c
        for j in range(db + 1):
            r[k + j] = (r[k + j] - c * b[j]) % p
        dr = _deg(r)
    return q, r


@njit(cache=True)
def _monic(a, p):
    d = _deg(a)
    if d < 0:
        return a.copy()
    return _scale(a, _inv(a[d], p), p)


@njit(cache=True)
def _xgcd(a, b, p):
    """(g, s, t) with g = s*a + t*b monic (or zero when a = b = 0)."""
    r0, r1 = a.copy(), b.copy()
    s0 = np.zeros(PL, np.int64)
    s0[0] = 1
    s1 = np.zeros(PL, np.int64)
    t0 = np.zeros(PL, np.int64)
    t1 = np.zeros(PL, np.int64)
    t1[0] = 1
    while _deg(r1) >= 0:
        q, r = _divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _sub(s0, _mul(q, s1, p), p)
        t0, t1 = t1, _sub(t0, _mul(q, t1, p), p)
    d = _deg(r0)
    if d >= 0:
        c = _inv(r0[d], p)
        r0, s0, t0 = _scale(r0, c, p), _scale(s0, c, p), _scale(t0, c, p)
    return r0, s0, t0


# -- Cantor -----------------------------------------------------------------------

@njit(cache=True)
def _reduce(u, v, f, p):
    while _deg(u) > 2:
        vv = _mul(v, v, p)
        num = _sub(f, vv, p)
        u2, rem = _divmod(num, u, p)
        if _deg(rem) >= 0:
            raise ValueError("u does not divide f - v^2")
        u = _monic(u2, p)
        neg = np.zeros(PL, np.int64)
        v = _sub(neg, v, p)
        _, v = _divmod(v, u, p)
    return u, v


@njit(cache=True)
def _compose(u1, v1, u2, v2, f, p):
    d1, e1, e2 = _xgcd(u1, u2, p)
    w = _add(v1, v2, p)
    d, c1, c2 = _xgcd(d1, w, p)
    s1 = _mul(c1, e1, p)
    s2 = _mul(c1, e2, p)
    s3 = c2
    u = _mul(u1, u2, p)
    dd = _mul(d, d, p)
    u, _ = _divmod(u, dd, p)
    t = _mul(_mul(s1, u1, p), v2, p)
    t = _add(t, _mul(_mul(s2, u2, p), v1, p), p)
    t = _add(t, _mul(s3, _add(_mul(v1, v2, p), f, p), p), p)
    vq, _ = _divmod(t, d, p)
    _, v = _divmod(vq, u, p)
    return u, v


@njit(cache=True)
def _cantor_add(u1, v1, u2, v2, f, p):
    u, v = _compose(u1, v1, u2, v2, f, p)
    return _reduce(u, v, f, p)


@njit(cache=True)
def _is_identity(u):
    return _deg(u) == 0


@njit(cache=True)
def _scalar_mul(n, u, v, f, p):
    ru = np.zeros(PL, np.int64)
    ru[0] = 1
    rv = np.zeros(PL, np.int64)
    if n == 0:
        return ru, rv
    top = 62
    while not (n >> top) & 1:
        top -= 1
    for b in range(top, -1, -1):
        ru, rv = _cantor_add(ru, rv, ru, rv, f, p)
        if (n >> b) & 1:
            ru, rv = _cantor_add(ru, rv, u, v, f, p)
    return ru, rv


@njit(cache=True)
def _powmod(b, e, p):
    r = 1
    b %= p
    while e:
        if e & 1:
            r = r * b % p
        b = b * b % p
        e >>= 1
    return r


@njit(cache=True)
def _sqrt(a, p):
    """Square root of a residue a (caller has checked a is a square)."""
    a %= p
    if a == 0:
        return 0
    if p % 4 == 3:
        return _powmod(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while _powmod(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, _powmod(z, q, p), _powmod(a, q, p), _powmod(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = _powmod(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


@njit(cache=True)
def _eval(f, x, p):
    acc = 0
    for i in range(PL - 1, -1, -1):
        acc = (acc * x + f[i]) % p
    return acc


@njit(cache=True)
def _is_square(a, p):
    a %= p
    return a == 0 or _powmod(a, (p - 1) // 2, p) == 1


@njit(cache=True)
def _mulq(c0, c1, d0, d1, a, b, p):
    """(c0 + c1 x)(d0 + d1 x) in F_p[x]/(x^2 + a x + b)."""
    t = c1 * d1 % p
    return (c0 * d0 % p - t * b % p) % p, (c0 * d1 % p + c1 * d0 % p - t * a % p) % p


@njit(cache=True)
def _sqrt_quad(r0, r1, a, b, p):
    """A square root w0 + w1 x of r0 + r1 x in the field F_p[x]/(x^2 + a x + b), or ok=False.

    With n^2 = N(z) and t^2 = Tr(z) + 2n one has ((z + n)/t)^2 = z.  When Tr(z) + 2n is
    a non-square, t = m / (2x + a) with m^2 = (Tr(z) + 2n) * disc, since (2x + a)^2 = disc.
    """
    if r0 == 0 and r1 == 0:
        return 0, 0, True
    norm = (r0 * r0 % p - a * r0 % p * r1 % p + b * r1 % p * r1) % p
    if not _is_square(norm, p):
        return 0, 0, False
    n = _sqrt(norm, p)
    tr = (2 * r0 - a * r1 % p) % p
    disc = (a * a - 4 * b) % p
    for sgn in range(2):
        nn = n if sgn == 0 else (p - n) % p
        c = (tr + 2 * nn) % p
        if c == 0:
            continue
        if _is_square(c, p):
            it = _inv(_sqrt(c, p), p)
            w0, w1 = (r0 + nn) % p * it % p, r1 * it % p
        else:
            im = _inv(_sqrt(c * disc % p, p), p)
            w0, w1 = _mulq((r0 + nn) % p, r1, a, 2, a, b, p)
            w0, w1 = w0 * im % p, w1 * im % p
        s0, s1 = _mulq(w0, w1, w0, w1, a, b, p)
        if s0 == r0 and s1 == r1:
            return w0, w1, True
    return 0, 0, False


@njit(cache=True)
def _random_divisor(f, p, rand, pos):
    """A divisor (u, v) with u = x^2 + a x + b for random a, b; rand is a stream of
    uniform words, pos the read offset.  Split u gives a sum of two affine points,
    irreducible u a conjugate pair over F_p^2."""
    while True:
        if pos + 3 > rand.shape[0]:
            return np.zeros(PL, np.int64), np.zeros(PL, np.int64), -1
        a = rand[pos] % p
        b = rand[pos + 1] % p
        signs = rand[pos + 2]
        pos += 3
        disc = (a * a - 4 * b) % p
        if disc == 0:
            continue
        u = np.zeros(PL, np.int64)
        u[0], u[1], u[2] = b, a, 1
        if _is_square(disc, p):
            # roots (-a +- sqrt(disc)) / 2, both need square f-values
            sd = _sqrt(disc, p)
            h = _inv(2, p)
            x1 = (p - a + sd) % p * h % p
            x2 = (2 * p - a - sd) % p * h % p
            y1sq, y2sq = _eval(f, x1, p), _eval(f, x2, p)
            if not (_is_square(y1sq, p) and _is_square(y2sq, p)):
                continue
            y1, y2 = _sqrt(y1sq, p), _sqrt(y2sq, p)
            if signs & 1:
                y1 = (p - y1) % p
            if signs & 2:
                y2 = (p - y2) % p
            # v = y1 + (y2 - y1)/(x2 - x1) (x - x1)
            slope = (y2 - y1) % p * _inv((x2 - x1) % p, p) % p
            v = np.zeros(PL, np.int64)
            v[1] = slope
            v[0] = (y1 - slope * x1 % p) % p
            return u, v, pos
        _, r = _divmod(f, u, p)
        w0, w1, ok = _sqrt_quad(r[0], r[1], a, b, p)
        if not ok:
            continue
        if signs & 1:
            w0, w1 = (p - w0) % p, (p - w1) % p
        v = np.zeros(PL, np.int64)
        v[0], v[1] = w0, w1
        return u, v, pos


@njit(cache=True)
def _filter_candidates(f, p, cands, alive, rand, pos, budget):
    """Drop candidates n with n*D != 0 for random D; stop at one survivor or after budget draws.

    Returns (new read offset or -1 when the stream ran out, draws used).
    """
    used = 0
    while used < budget:
        count = 0
        for i in range(cands.shape[0]):
            if alive[i]:
                count += 1
        if count <= 1:
            break
        u, v, pos = _random_divisor(f, p, rand, pos)
        if pos < 0:
            return -1, used
        used += 1
        for i in range(cands.shape[0]):
            if alive[i]:
                qu, _ = _scalar_mul(cands[i], u, v, f, p)
                if not _is_identity(qu):
                    alive[i] = False
    return pos, used


# -- Python-level API -----------------------------------------------------------------

class CurveSextic(NamedTuple):
    coeffs: tuple[int, ...]
    d: int | None = None

    @classmethod
    def parse(cls, text: str, d: int | None = None) -> "CurveSextic":
        vals = tuple(int(s) for s in text.replace(" ", "").split(","))
        return cls.from_coeffs(vals, d)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int], d: int | None = None) -> "CurveSextic":
        c = tuple(int(x) for x in coeffs)
        if len(c) > 7:
            raise ValueError("at most 7 coefficients c0..c6")
        c = c + (0,) * (7 - len(c))
        deg = max((i for i, x in enumerate(c) if x), default=-1)
        if deg not in (5, 6):
            raise ValueError(f"need degree 5 or 6, got degree {deg}")
        return cls(c, d)

    @property
    def degree(self) -> int:
        return max(i for i, x in enumerate(self.coeffs) if x)

    @property
    def lead(self) -> int:
        return self.coeffs[self.degree]

    def reduce(self, p: int) -> FpPoly:
        return FpPoly.make(self.coeffs, p)

    def __str__(self) -> str:
        return ",".join(map(str, self.coeffs))


class MumfordDiv(NamedTuple):
    """Reduced divisor class; u monic, deg v < deg u, u | f - v^2.  Identity is (1, 0)."""

    u: tuple[int, ...]
    v: tuple[int, ...]

    @classmethod
    def identity(cls) -> "MumfordDiv":
        return cls((1,), ())

    def is_identity(self) -> bool:
        return self.u == (1,)

    @classmethod
    def _from_arrays(cls, u: np.ndarray, v: np.ndarray) -> "MumfordDiv":
        return cls(_trim(u), _trim(v))

    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        return _pad(self.u), _pad(self.v)


def _trim(a: np.ndarray) -> tuple[int, ...]:
    c = [int(x) for x in a]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _pad(c: Sequence[int]) -> np.ndarray:
    out = np.zeros(PL, np.int64)
    out[: len(c)] = c
    return out


class Model(NamedTuple):
    """A Cantor-friendly model Y^2 = F(X) of a curve over F_p."""

    p: int
    f: tuple[int, ...]  # coefficients of F, low to high
    x0: int | None  # x = x0 + 1/X, or None when the input model was kept

    @property
    def farr(self) -> np.ndarray:
        return _pad(self.f)

    @property
    def degree(self) -> int:
        return len(self.f) - 1


def _moebius(f: FpPoly, x0: int) -> FpPoly:
    """X^6 f(x0 + 1/X)."""
    p = f.p
    out = FpPoly(p, ())
    lin = FpPoly.make([1, x0], p)  # 1 + x0 X
    for i, c in enumerate(f.coeffs):
        if c:
            term = FpPoly.make([0] * (6 - i) + [c], p)
            for _ in range(i):
                term = term * lin
            out = out + term
    return out


def find_model(f: FpPoly) -> Model | None:
    p = f.p
    if f.degree == 5 or (f.degree == 6 and legendre(f.lead(), p) == -1):
        return Model(p, f.coeffs, None)
    for x0 in range(p):
        y = f(x0)
        if y == 0 or legendre(y, p) == -1:
            return Model(p, _moebius(f, x0).coeffs, x0)
    return None


def check_good(curve: CurveSextic, p: int) -> None:
    if p < 3 or p >= MAX_P:
        raise JacobianError(f"p={p} outside the supported range 3 <= p < 2^31")
    f = curve.reduce(p)
    if f.degree != curve.degree:
        raise JacobianError(f"p={p} divides the leading coefficient")
    from .arith import poly_gcd

    if poly_gcd(f, f.derivative()).degree > 0:
        raise JacobianError(f"f has a repeated root mod p={p}")


def model_for(curve: CurveSextic, p: int, twist: bool = False) -> Model | None:
    f = curve.reduce(p)
    if twist:
        f = f.scale(nonresidue(p))
    return find_model(f)


def cantor_add(d1: MumfordDiv, d2: MumfordDiv, model: Model) -> MumfordDiv:
    u1, v1 = d1.arrays()
    u2, v2 = d2.arrays()
    u, v = _cantor_add(u1, v1, u2, v2, model.farr, model.p)
    return MumfordDiv._from_arrays(u, v)


def negate(D: MumfordDiv, model: Model) -> MumfordDiv:
    return MumfordDiv(D.u, tuple((-c) % model.p for c in D.v))


def scalar_mul(n: int, D: MumfordDiv, model: Model) -> MumfordDiv:
    if n < 0:
        return scalar_mul(-n, negate(D, model), model)
    u, v = D.arrays()
    ru, rv = _scalar_mul(np.int64(n), u, v, model.farr, model.p)
    return MumfordDiv._from_arrays(ru, rv)


def is_valid(D: MumfordDiv, model: Model) -> bool:
    p = model.p
    u, v = FpPoly.make(D.u, p), FpPoly.make(D.v, p)
    if u.lead() != 1 or u.degree > 2 or (not v.is_zero() and v.degree >= u.degree):
        return False
    return ((FpPoly.make(model.f, p) - v * v) % u).is_zero()


def make_rng(seed: int, p: int, stream: int = 0) -> np.random.Generator:
    """Counter-based generator keyed by (seed, p, stream)."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, p, stream])))


_WORDS = 256


def _words(rng: np.random.Generator) -> np.ndarray:
    return rng.integers(0, 1 << 62, size=_WORDS, dtype=np.int64)


def random_divisor(model: Model, rng: np.random.Generator) -> MumfordDiv:
    while True:
        u, v, pos = _random_divisor(model.farr, model.p, _words(rng), 0)
        if pos >= 0:
            return MumfordDiv._from_arrays(u, v)


def element_order_in(D: MumfordDiv, n: int, model: Model, fac: dict[int, int] | None = None) -> int:
    """Exact order of D, given n*D = 0."""
    if not scalar_mul(n, D, model).is_identity():
        raise JacobianError(f"{n} does not annihilate the divisor")
    fac = factor(n) if fac is None else fac
    order = n
    for q, e in fac.items():
        for _ in range(e):
            if order % q == 0 and scalar_mul(order // q, D, model).is_identity():
                order //= q
            else:
                break
    return order


SELECT_BUDGET = 32


def surviving_orders(candidates: Sequence[int], model: Model, rng: np.random.Generator,
                     budget: int = SELECT_BUDGET) -> list[int]:
    """Candidates n with n*D = 0 for every sampled D (sampling stops at one survivor)."""
    cands = np.array(sorted(set(int(c) for c in candidates)), dtype=np.int64)
    if len(cands) == 0:
        raise InconsistentCandidates("empty candidate list")
    alive = np.ones(len(cands), dtype=np.bool_)
    left = budget
    if len(cands) == 1:
        # a singleton is still checked once, so a wrong list is caught
        u, v = random_divisor(model, rng).arrays()
        alive[0] = _is_identity(_scalar_mul(cands[0], u, v, model.farr, model.p)[0])
        left = 0
    while left > 0:
        pos, used = _filter_candidates(model.farr, model.p, cands, alive, _words(rng), 0, left)
        left -= used
        if pos >= 0:
            break
    out = [int(c) for c, a in zip(cands, alive) if a]
    if not out:
        raise InconsistentCandidates(f"no candidate order survives at p={model.p}")
    return out


def select_order(candidates: Sequence[int], model: Model, rng: np.random.Generator,
                 budget: int = SELECT_BUDGET) -> int:
    """The group order among the candidates; raises if sampling cannot single it out."""
    out = surviving_orders(candidates, model, rng, budget)
    if len(out) > 1:
        out = _lcm_refine(out, model, rng)
    if len(out) != 1:
        raise JacobianError(f"orders {out} not separated at p={model.p}")
    return out[0]


def _lcm_refine(cands: list[int], model: Model, rng: np.random.Generator, draws: int = 8) -> list[int]:
    """Keep candidates that kill every draw and are divisible by the lcm of exact element orders."""
    from math import lcm

    ell = 1
    for _ in range(draws):
        D = random_divisor(model, rng)
        cands = [c for c in cands if scalar_mul(c, D, model).is_identity()]
        if not cands:
            raise InconsistentCandidates(f"no candidate order survives at p={model.p}")
        ell = lcm(ell, element_order_in(D, cands[0], model))
    return [c for c in cands if c % ell == 0]


# -- L-polynomial from candidate pairs ------------------------------------------------

def lpoly_values(a1: int, a2: int, p: int) -> tuple[int, int]:
    """(L_p(1), L_p(-1)) for L_p(T) = 1 + a1 T + a2 T^2 + p a1 T^3 + p^2 T^4."""
    return 1 + a1 + a2 + p * a1 + p * p, 1 - a1 + a2 - p * a1 + p * p


def pair_from_values(l1: int, lm1: int, p: int) -> tuple[int, int]:
    """Invert lpoly_values."""
    a1, r = divmod(l1 - lm1, 2 * (p + 1))
    if r:
        raise JacobianError("L(1) and L(-1) are inconsistent")
    a2 = l1 - 1 - a1 - p * a1 - p * p
    return a1, a2


def lpoly_pm1(curve: CurveSextic, p: int, pairs: Sequence[tuple[int, int]],
              rng: np.random.Generator) -> tuple[int, int]:
    """(L_p(1), L_p(-1)) for C and its quadratic twist, choosing among the given (a1, a2) pairs."""
    a1, a2 = select_pair(curve, p, pairs, rng)
    return lpoly_values(a1, a2, p)


NAIVE_FALLBACK = 1 << 10


def select_pair(curve: CurveSextic, p: int, pairs: Sequence[tuple[int, int]],
                rng: np.random.Generator) -> tuple[int, int]:
    """The (a1, a2) pair among the candidates that matches Jac(C)(F_p).

    Filters in order of cost: a1 from #C(F_p); then orders of random divisors
    on C against L(1); then on the quadratic twist against L(-1).  Element
    orders cannot separate candidates that are all multiples of the group
    exponent, so small primes fall back to counting over F_{p^2}.
    """
    pairs = sorted(set((int(a), int(b)) for a, b in pairs))
    if not pairs:
        raise InconsistentCandidates(f"no candidate pairs at p={p}")
    a1 = count_points_fp(curve, p) - p - 1
    pairs = [pr for pr in pairs if pr[0] == a1]
    if len(pairs) > 1:
        model = model_for(curve, p)
        if model is not None:
            keep = set(surviving_orders([lpoly_values(*pr, p)[0] for pr in pairs], model, rng))
            pairs = [pr for pr in pairs if lpoly_values(*pr, p)[0] in keep]
    if len(pairs) > 1:
        tmodel = model_for(curve, p, twist=True)
        if tmodel is not None:
            keep = set(surviving_orders([lpoly_values(*pr, p)[1] for pr in pairs], tmodel, rng))
            pairs = [pr for pr in pairs if lpoly_values(*pr, p)[1] in keep]
    if len(pairs) > 1 and p <= NAIVE_FALLBACK:
        exact = naive_lpoly(curve, p)
        pairs = [pr for pr in pairs if pr == exact]
    if not pairs:
        raise InconsistentCandidates(f"no candidate pair fits Jac(C)(F_{p})")
    if len(pairs) > 1:
        raise JacobianError(f"pairs {pairs} could not be separated at p={p}")
    return pairs[0]


# -- point counting ----------------------------------------------------------------------

@njit(cache=True)
def _count_affine(f, deg, p):
    """sum over x in F_p of (1 + chi(f(x)))."""
    sq = np.zeros(p, np.int8)
    for x in range(p):
        sq[x * x % p] = 1
    total = 0
    for x in range(p):
        acc = 0
        for k in range(deg, -1, -1):
            acc = (acc * x + f[k]) % p
        if acc == 0:
            total += 1
        elif sq[acc]:
            total += 2
    return total


def count_points_fp(curve: CurveSextic, p: int) -> int:
    """#C(F_p), points at infinity included, in O(p)."""
    c = np.array([x % p for x in curve.coeffs], dtype=np.int64)
    deg = curve.degree
    inf = 1 if deg == 5 else 1 + legendre(int(c[deg]), p)
    return int(_count_affine(c, deg, p)) + inf


def count_points(curve: CurveSextic, p: int) -> tuple[int, int]:
    """(#C(F_p), #C(F_{p^2})) by direct enumeration, points at infinity included."""
    c = np.array([x % p for x in curve.coeffs], dtype=np.int64)
    deg = curve.degree
    g = nonresidue(p)
    x = np.arange(p, dtype=np.int64)
    sq = np.full(p, -1, dtype=np.int64)
    sq[x * x % p] = 1
    sq[0] = 0

    val = np.zeros(p, dtype=np.int64)
    for k in range(deg, -1, -1):
        val = (val * x + c[k]) % p
    n1 = p + int(sq[val].sum())
    lead = int(c[deg])
    inf1 = 1 if deg == 5 else 1 + int(sq[lead])

    # F_{p^2} = F_p(s), s^2 = g; chi(a + b s) = legendre(a^2 - g b^2)
    a = np.repeat(x, p)
    b = np.tile(x, p)
    ra = np.zeros(p * p, dtype=np.int64)
    rb = np.zeros(p * p, dtype=np.int64)
    for k in range(deg, -1, -1):
        ra, rb = (ra * a + g * (rb * b % p) + c[k]) % p, (ra * b + rb * a) % p
    norm = (ra * ra - g * (rb * rb % p)) % p
    n2 = p * p + int(sq[norm].sum())
    inf2 = 1 if deg == 5 else 2
    return n1 + inf1, n2 + inf2


def naive_lpoly(curve: CurveSextic, p: int) -> tuple[int, int]:
    """(a1, a2) of L_p(T) = 1 + a1 T + a2 T^2 + ... from point counts over F_p and F_{p^2}."""
    n1, n2 = count_points(curve, p)
    a1 = n1 - p - 1
    # n2 = p^2 + 1 - (sum alpha^2), sum alpha^2 = a1^2 - 2 a2
    a2, r = divmod(a1 * a1 - (p * p + 1 - n2), 2)
    if r:
        raise JacobianError("point counts have the wrong parity")
    return a1, a2


def jacobian_order_naive(curve: CurveSextic, p: int) -> int:
    a1, a2 = naive_lpoly(curve, p)
    return lpoly_values(a1, a2, p)[0]
