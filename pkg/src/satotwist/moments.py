"""Limiting distributions of a1 and a2 attached to a z-vector: moments, measures, CDFs.

Split classes contribute arcsine-type laws.  For a1 the law is that of u*x with x
arcsine on [-2, 2]; for a2 it is u^2 + x.  The value of u^2 is fixed by the
order r of the class: r=1 -> 4, r=2 -> 0, r=3 -> 1, r=4 -> 2, r=6 -> 3.
Inert classes give atoms (a1 = 0 always; a2 at 2, -2, -1, 0, 1 by s).
"""
from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from fractions import Fraction
from math import comb
from typing import Iterable, NamedTuple, Sequence

import numpy as np

# u^2 for each projected order r, and a1 weight index into z1
U_SQUARED = {1: 4, 2: 0, 3: 1, 4: 2, 6: 3}
# z1 slot -> r ; z2 slot -> atom location of a2
_Z1_R = (1, 1, 2, 3, 2, 3, 6, 4, 6)
_Z2_A2 = (2, -2, -1, 0, 1)
INTERVALS = {"a1": (-4.0, 4.0), "a2": (-6.0, 6.0)}


def b_coeff(m: int, n: int) -> int:
    """Coefficient of X^n in (X^2 + m X + 1)^n."""
    poly = [1]
    for _ in range(n):
        nxt = [0] * (len(poly) + 2)
        for i, c in enumerate(poly):
            nxt[i] += c
            nxt[i + 1] += m * c
            nxt[i + 2] += c
        poly = nxt
    return poly[n]


def b_coeff_sum(m: int, n: int) -> int:
    """The same number as the double sum sum_i C(n, i) C(2i, i) (m - 2)^(n - i)."""
    return sum(comb(n, i) * comb(2 * i, i) * (m - 2) ** (n - i) for i in range(n + 1))


def _as_fractions(z) -> list[Fraction]:
    flat = z.flat() if hasattr(z, "flat") else tuple(z)
    if len(flat) != 14:
        raise ValueError(f"z-vector needs 14 entries, got {len(flat)}")
    return [Fraction(v) for v in flat]


def o_by_r(z) -> dict[int, Fraction]:
    f = _as_fractions(z)
    out = dict.fromkeys(U_SQUARED, Fraction(0))
    for v, r in zip(f[:9], _Z1_R):
        out[r] += v
    return out


def obar_by_s(z) -> dict[int, Fraction]:
    f = _as_fractions(z)
    return dict(zip((2, 4, 6, 8, 12), f[9:]))


def _total(z) -> Fraction:
    # equals [L:Q] = 2 * sum(z1) for a genuine z-vector
    t = sum(_as_fractions(z))
    if t == 0:
        raise ValueError("empty z-vector")
    return t


class MomentTable(NamedTuple):
    n_max: int
    m1: tuple[Fraction, ...]
    m2: tuple[Fraction, ...]


def _sqrt_pow(k: int, n: int) -> int:
    """k^(n/2) for even n; odd n only occurs multiplied by b_{0,n} = 0."""
    return k ** (n // 2) if n % 2 == 0 else 0


def theoretical_moments(z, n_max: int) -> MomentTable:
    o, ob, L = o_by_r(z), obar_by_s(z), _total(z)
    m1, m2 = [], []
    for n in range(n_max + 1):
        if n == 0:
            m1.append(Fraction(1))
            m2.append(Fraction(1))
            continue
        b0 = b_coeff(0, n)
        if n % 2:
            assert b0 == 0
        m1.append((o[1] * 2 ** n + o[3] + o[4] * _sqrt_pow(2, n) + o[6] * _sqrt_pow(3, n)) * b0 / L)
        split = (o[1] * b_coeff(4, n) + o[2] * b0 + o[3] * b_coeff(1, n)
                 + o[4] * b_coeff(2, n) + o[6] * b_coeff(3, n))
        inert = ob[2] * 2 ** n + ob[4] * (-2) ** n + ob[6] * (-1) ** n + ob[12]
        m2.append((split + inert) / L)
    return MomentTable(n_max, tuple(m1), tuple(m2))


class ArcComponent(NamedTuple):
    weight: Fraction
    kind: str  # "arc-a1" or "arc-a2"
    u_sq: int

    @property
    def u(self) -> float:
        return math.sqrt(self.u_sq)

    def support(self) -> tuple[float, float]:
        if self.kind == "arc-a1":
            return -2 * self.u, 2 * self.u
        return self.u_sq - 2.0, self.u_sq + 2.0

    def cdf(self, x: float) -> float:
        lo, hi = self.support()
        if x <= lo:
            return 0.0
        if x >= hi:
            return 1.0
        mid, half = (lo + hi) / 2, (hi - lo) / 2
        return 0.5 + math.asin((x - mid) / half) / math.pi

    def sample_at(self, theta: np.ndarray) -> np.ndarray:
        lo, hi = self.support()
        return (lo + hi) / 2 + (hi - lo) / 2 * np.sin(theta)


class MeasureSpec(NamedTuple):
    coeff: str
    continuous_components: tuple[ArcComponent, ...]
    atoms: tuple[tuple[int, Fraction], ...]  # (location, weight)

    def total_mass(self) -> Fraction:
        return sum((c.weight for c in self.continuous_components), Fraction(0)) + \
            sum((w for _, w in self.atoms), Fraction(0))

    def cdf(self, x: float, left: bool = False) -> float:
        """P(X <= x), or P(X < x) when left is set."""
        val = sum(float(c.weight) * c.cdf(x) for c in self.continuous_components)
        for loc, w in self.atoms:
            if loc < x or (loc == x and not left):
                val += float(w)
        return val

    def quadrature_moment(self, n: int, nodes: int = 80) -> float:
        """n-th moment by Gauss-Legendre in theta, after z = centre + half*sin(theta)."""
        t, w = np.polynomial.legendre.leggauss(nodes)
        theta = t * math.pi / 2
        wts = w / 2  # d theta / pi over [-pi/2, pi/2]
        acc = 0.0
        for c in self.continuous_components:
            acc += float(c.weight) * float(np.dot(wts, c.sample_at(theta) ** n))
        for loc, wt in self.atoms:
            acc += float(wt) * (loc ** n if n else 1)
        return acc


def measure_from_z(z, coeff: str) -> MeasureSpec:
    if coeff not in ("a1", "a2"):
        raise ValueError("coeff must be 'a1' or 'a2'")
    o, ob, L = o_by_r(z), obar_by_s(z), _total(z)
    comps, atoms = [], []
    if coeff == "a1":
        for r in (1, 3, 4, 6):
            if o[r]:
                comps.append(ArcComponent(o[r] / L, "arc-a1", U_SQUARED[r]))
        zero = o[2] + sum(ob.values())
        if zero:
            atoms.append((0, zero / L))
    else:
        for r in (1, 2, 3, 4, 6):
            if o[r]:
                comps.append(ArcComponent(o[r] / L, "arc-a2", U_SQUARED[r]))
        for s, loc in zip((2, 4, 6, 8, 12), _Z2_A2):
            if ob[s]:
                atoms.append((loc, ob[s] / L))
        atoms.sort()
    return MeasureSpec(coeff, tuple(comps), tuple(atoms))


# -- empirical side ------------------------------------------------------------------

def normalized_values(records: Iterable, coeff: str) -> np.ndarray:
    vals = []
    for r in records:
        if coeff == "a1":
            vals.append(r.a1_hat / math.sqrt(r.p))
        else:
            vals.append(r.a2_hat / r.p)
    return np.array(vals, dtype=float)


def ks_statistic(values: Sequence[float], measure: MeasureSpec) -> float:
    """sup_x |F_n(x) - F(x)|, checking both one-sided limits at each sample value."""
    xs = np.sort(np.asarray(values, dtype=float))
    n = len(xs)
    if n == 0:
        raise ValueError("empty sample")
    gap = 0.0
    uniq = np.unique(xs)
    xl = xs.tolist()
    for v in uniq.tolist():
        below = bisect_left(xl, v) / n
        upto = bisect_right(xl, v) / n
        gap = max(gap, abs(upto - measure.cdf(v)), abs(below - measure.cdf(v, left=True)))
    return gap


class CompareReport(NamedTuple):
    primes: int
    n_max: int
    empirical: dict[str, list[float]]
    theoretical: dict[str, list[Fraction]]
    deviation: dict[str, list[float]]
    ks: dict[str, float]

    def as_dict(self) -> dict:
        return {
            "primes": self.primes,
            "n_max": self.n_max,
            "empirical": self.empirical,
            "theoretical": {k: [str(v) for v in vs] for k, vs in self.theoretical.items()},
            "deviation": self.deviation,
            "ks": self.ks,
        }


def empirical_moments(values: np.ndarray, n_max: int) -> list[float]:
    return [float(np.mean(values ** n)) for n in range(n_max + 1)]


def empirical_compare(records: Sequence, z, n_max: int = 4) -> CompareReport:
    records = list(records)
    if not records:
        raise ValueError("no records to compare")
    theo = theoretical_moments(z, n_max)
    emp, dev, ks, th = {}, {}, {}, {}
    for coeff, exact in (("a1", theo.m1), ("a2", theo.m2)):
        vals = normalized_values(records, coeff)
        emp[coeff] = empirical_moments(vals, n_max)
        th[coeff] = list(exact)
        dev[coeff] = [abs(e - float(t)) for e, t in zip(emp[coeff], exact)]
        ks[coeff] = ks_statistic(vals, measure_from_z(z, coeff))
    return CompareReport(len(records), n_max, emp, th, dev, ks)


class Histogram(NamedTuple):
    edges: tuple[float, ...]
    counts: tuple[int, ...]
    masses: tuple[float, ...]

    def csv(self) -> str:
        lines = ["bin_lo,bin_hi,empirical_count,theoretical_mass"]
        for i, (c, m) in enumerate(zip(self.counts, self.masses)):
            lines.append(f"{self.edges[i]:.6f},{self.edges[i + 1]:.6f},{c},{m:.9f}")
        return "\n".join(lines) + "\n"


def histogram(records: Sequence, coeff: str, bins: int, z) -> Histogram:
    """Equal-width bins [lo, hi) over the coefficient's interval (the last bin is closed)."""
    if bins < 1:
        raise ValueError("bins must be >= 1")
    lo, hi = INTERVALS[coeff]
    edges = np.linspace(lo, hi, bins + 1)
    vals = normalized_values(records, coeff)
    counts, _ = np.histogram(vals, bins=edges)
    mu = measure_from_z(z, coeff)
    masses = []
    for i in range(bins):
        last = i == bins - 1
        upper = mu.cdf(edges[i + 1], left=not last)
        masses.append(upper - mu.cdf(edges[i], left=True))
    return Histogram(tuple(float(e) for e in edges), tuple(int(c) for c in counts), tuple(masses))
