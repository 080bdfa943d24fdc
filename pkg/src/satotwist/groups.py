"""The augmented automorphism group G = Aut(C0_M) x| Gal(M/Q) and its admissible subgroups.

Subgroups are stored as Python int bitmasks over element indices, which keeps
closure, intersection and conjugation cheap for groups of order <= 96.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import numpy as np

from .data import CANDIDATES, TableRow
from .quadratic import GrpElem, Mat2, generators

MAX_GROUP = 96

# Def. of the z-vector: the (s, r) pairs tallied over H0 and over H \ H0.
Z1_SLOTS = ((1, 1), (2, 1), (2, 2), (3, 3), (4, 2), (6, 3), (6, 6), (8, 4), (12, 6))
Z2_SLOTS = ((2, 2), (4, 2), (6, 6), (8, 4), (12, 6))


class GroupError(RuntimeError):
    """Raised when a group-theoretic invariant fails; the CLI maps it to exit code 4."""


@dataclass(frozen=True)
class FiniteGroup:
    d: int
    elements: tuple[GrpElem, ...]
    mul_table: np.ndarray  # mul_table[i, j] = index of elements[i] * elements[j]

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def identity(self) -> int:
        return self.elements.index(GrpElem.identity(self.d))

    @cached_property
    def w_hat(self) -> int:
        return self.elements.index(GrpElem(Mat2.scalar(-1, self.d), 0))

    @cached_property
    def inverse(self) -> np.ndarray:
        inv = np.empty(self.order, dtype=np.int64)
        rows, cols = np.nonzero(self.mul_table == self.identity)
        inv[rows] = cols
        return inv

    @cached_property
    def orders(self) -> np.ndarray:
        out = np.zeros(self.order, dtype=np.int64)
        for i in range(self.order):
            acc, n = i, 1
            while acc != self.identity:
                acc = self.mul_table[acc, i]
                n += 1
            out[i] = n
        return out

    @cached_property
    def aut_mask(self) -> int:
        """Indices with trivial Galois component: the subgroup A = Aut(C0_M) x {id}."""
        return sum(1 << i for i, e in enumerate(self.elements) if e.gal == 0)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    @cached_property
    def conj_perms(self) -> np.ndarray:
        """conj_perms[g, x] = g x g^-1."""
        t, inv = self.mul_table, self.inverse
        return t[t[np.arange(self.order)[:, None], np.arange(self.order)[None, :]], inv[:, None]]

    def mul(self, i: int, j: int) -> int:
        return int(self.mul_table[i, j])

    def power(self, i: int, n: int) -> int:
        acc = self.identity
        for _ in range(n):
            acc = int(self.mul_table[acc, i])
        return acc


def build_group(d: int) -> FiniteGroup:
    u, v = generators(d)
    gens = [GrpElem(u, 0), GrpElem(v, 0), GrpElem(Mat2.identity(d), 1)]
    elements = [GrpElem.identity(d)]
    index = {elements[0]: 0}
    frontier = list(elements)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in index:
                    index[y] = len(elements)
                    elements.append(y)
                    nxt.append(y)
                    if len(elements) > MAX_GROUP:
                        raise GroupError(f"closure exceeds {MAX_GROUP} elements for d={d}")
        frontier = nxt
    n = len(elements)
    table = np.empty((n, n), dtype=np.int64)
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            table[i, j] = index[x * y]
    return FiniteGroup(d, tuple(elements), table)


# -- subgroup machinery on bitmasks ------------------------------------------

def mask_indices(mask: int) -> list[int]:
    return [i for i, bit in enumerate(reversed(bin(mask)[2:])) if bit == "1"]


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << int(i)
    return m


def closure(G: FiniteGroup, mask: int) -> int:
    """Smallest subgroup containing the given elements (finite, so products suffice)."""
    idx = np.array(mask_indices(mask | (1 << G.identity)), dtype=np.int64)
    while True:
        nxt = np.unique(G.mul_table[np.ix_(idx, idx)])
        if len(nxt) == len(idx):
            return mask_of(idx)
        idx = nxt


def enumerate_subgroups(G: FiniteGroup) -> list[int]:
    """All subgroups of G, by closing cyclic subgroups under pairwise joins."""
    cyclic = sorted({closure(G, 1 << i) for i in range(G.order)})
    found = set(cyclic)
    layer = set(cyclic)
    while layer:
        new = set()
        for h in layer:
            size_h = h.bit_count()
            if size_h == G.order:
                continue
            for c in cyclic:
                if c & ~h == 0:
                    continue
                j = closure(G, h | c)
                if j not in found:
                    assert j.bit_count() % size_h == 0
                    new.add(j)
        found |= new
        layer = new
    return sorted(found, key=lambda m: (m.bit_count(), mask_indices(m)))


def conjugate_mask(G: FiniteGroup, mask: int, g: int) -> int:
    perm = G.conj_perms[g]
    return mask_of(perm[mask_indices(mask)])


def canonical_conjugate(G: FiniteGroup, mask: int) -> int:
    """Lexicographically minimal sorted-index representative of the conjugacy class."""
    best = None
    for g in range(G.order):
        c = conjugate_mask(G, mask, g)
        key = mask_indices(c)
        if best is None or key < best[0]:
            best = (key, c)
    return best[1]


class SubgroupTriple(NamedTuple):
    H: int
    N: int
    H0: int

    @property
    def order(self) -> int:
        return self.H.bit_count()


def admissible_triples(G: FiniteGroup, subgroups: list[int] | None = None,
                       aut_mask: int | None = None) -> list[SubgroupTriple]:
    """Triples (H, <w> cap H, H cap A) with |H cap A| = |H|/2, one per conjugacy class of H.

    A defaults to the Galois-trivial subgroup; pass another index-2 subgroup
    isomorphic to it to build the second list.
    """
    if subgroups is None:
        subgroups = enumerate_subgroups(G)
    a = G.aut_mask if aut_mask is None else aut_mask
    w_group = (1 << G.identity) | (1 << G.w_hat)
    reps = set()
    for h in subgroups:
        if 2 * (h & a).bit_count() == h.bit_count():
            reps.add(canonical_conjugate(G, h))
    out = []
    for h in sorted(reps, key=lambda m: (m.bit_count(), mask_indices(m))):
        h0 = h & a
        out.append(SubgroupTriple(h, w_group & h0, h0))
    return out


def automorphism_like_subgroups(G: FiniteGroup, subgroups: list[int]) -> list[int]:
    """Index-2 subgroups containing w_hat that are isomorphic (by fingerprint) to A."""
    target = fingerprint(G.aut_mask, G)
    return [h for h in subgroups
            if 2 * h.bit_count() == G.order and h >> G.w_hat & 1 and fingerprint(h, G) == target]


class ZVector(NamedTuple):
    z1: tuple[int, ...]
    z2: tuple[int, ...]

    def flat(self) -> tuple[int, ...]:
        return self.z1 + self.z2

    @classmethod
    def from_flat(cls, z) -> "ZVector":
        z = tuple(int(v) for v in z)
        if len(z) != 14:
            raise ValueError(f"z-vector needs 14 entries, got {len(z)}")
        return cls(z[:9], z[9:])


def _image_order(G: FiniteGroup, x: int, n_mask: int) -> int:
    acc, r = x, 1
    while not n_mask >> acc & 1:
        acc = int(G.mul_table[acc, x])
        r += 1
    return r


def z_vector(t: SubgroupTriple, G: FiniteGroup) -> ZVector:
    z1 = dict.fromkeys(Z1_SLOTS, 0)
    z2 = dict.fromkeys(Z2_SLOTS, 0)
    for x in mask_indices(t.H):
        key = (int(G.orders[x]), _image_order(G, x, t.N))
        slots = z1 if t.H0 >> x & 1 else z2
        if key not in slots:
            part = "H0" if slots is z1 else "H \\ H0"
            raise GroupError(f"element with (s, r) = {key} in {part} is not allowed")
        slots[key] += 1
    z = ZVector(tuple(z1.values()), tuple(z2.values()))
    half = t.order // 2
    if sum(z.z1) != half or sum(z.z2) != half or z.z1[0] != 1:
        raise GroupError(f"z-vector {z.flat()} violates the count invariants")
    return z


# -- fingerprints --------------------------------------------------------------

class GroupFingerprint(NamedTuple):
    order: int
    element_order_multiset: tuple[int, ...]
    conj_class_sizes: tuple[int, ...]
    center_order: int
    abelianization_invariants: tuple[int, ...]
    derived_subgroup_order: int


def _sub_table(G: FiniteGroup, mask: int) -> np.ndarray:
    idx = mask_indices(mask)
    pos = {g: i for i, g in enumerate(idx)}
    sub = G.mul_table[np.ix_(idx, idx)]
    return np.vectorize(pos.__getitem__, otypes=[np.int64])(sub) if idx else sub


def quotient_table(G: FiniteGroup, H: int, N: int) -> np.ndarray:
    """Multiplication table of H/N for N normal in H."""
    cosets: list[int] = []
    owner = {}
    for x in mask_indices(H):
        if x in owner:
            continue
        coset = [int(G.mul_table[x, n]) for n in mask_indices(N)]
        for y in coset:
            owner[y] = len(cosets)
        cosets.append(x)
    k = len(cosets)
    table = np.empty((k, k), dtype=np.int64)
    for i, a in enumerate(cosets):
        for j, b in enumerate(cosets):
            table[i, j] = owner[int(G.mul_table[a, b])]
    return table


def _abelian_invariants(table: np.ndarray, ident: int) -> tuple[int, ...]:
    """Invariant factors (as prime powers) of an abelian group given by its table."""
    n = table.shape[0]
    orders = []
    for i in range(n):
        acc, k = i, 1
        while acc != ident:
            acc = table[acc, i]
            k += 1
        orders.append(k)
    out = []
    m = n
    p = 2
    while m > 1:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            # #{x : x^(p^k) = 1} = p^(sum_i min(k, e_i)) determines the partition
            prev = 0
            counts = []
            for k in range(1, e + 1):
                c = sum(1 for o in orders if (p ** k) % o == 0 and _is_p_power(o, p))
                lg = round(math.log(c, p))
                counts.append(lg - prev)
                prev = lg
            # counts[k-1] = number of cyclic factors with exponent >= k
            for k in range(e, 0, -1):
                nk = counts[k - 1] - (counts[k] if k < e else 0)
                out.extend([p ** k] * nk)
        p += 1
    return tuple(sorted(out))


def _is_p_power(o: int, p: int) -> bool:
    while o % p == 0:
        o //= p
    return o == 1


def fingerprint_table(table: np.ndarray) -> GroupFingerprint:
    n = table.shape[0]
    # the identity is the row that acts trivially
    ident = next(i for i in range(n) if np.array_equal(table[i], np.arange(n)))
    inv = np.empty(n, dtype=np.int64)
    r, c = np.nonzero(table == ident)
    inv[r] = c
    orders = []
    for i in range(n):
        acc, k = i, 1
        while acc != ident:
            acc = table[acc, i]
            k += 1
        orders.append(k)
    # conj[g, x] = g x g^-1
    conj = table[table[np.arange(n)[:, None], np.arange(n)[None, :]], inv[:, None]]
    seen = np.zeros(n, dtype=bool)
    classes = []
    for x in range(n):
        if not seen[x]:
            cls = np.unique(conj[:, x])
            seen[cls] = True
            classes.append(len(cls))
    center = sum(1 for x in range(n) if np.all(conj[:, x] == x))
    # derived subgroup: closure of all commutators
    comm = {int(table[table[table[a, b], inv[a]], inv[b]]) for a in range(n) for b in range(n)}
    derived = set(comm) | {ident}
    frontier = list(derived)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(derived):
                y = int(table[a, b])
                if y not in derived:
                    derived.add(y)
                    nxt.append(y)
        frontier = nxt
    # abelianization table
    dmask = sorted(derived)
    owner = {}
    reps = []
    for x in range(n):
        if x in owner:
            continue
        for dd in dmask:
            owner[int(table[x, dd])] = len(reps)
        reps.append(x)
    k = len(reps)
    qt = np.empty((k, k), dtype=np.int64)
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            qt[i, j] = owner[int(table[a, b])]
    return GroupFingerprint(
        order=n,
        element_order_multiset=tuple(sorted(orders)),
        conj_class_sizes=tuple(sorted(classes)),
        center_order=center,
        abelianization_invariants=_abelian_invariants(qt, owner[ident]),
        derived_subgroup_order=len(derived),
    )


def fingerprint(H: int, G: FiniteGroup) -> GroupFingerprint:
    return fingerprint_table(_sub_table(G, H))


# -- labelling -----------------------------------------------------------------

class TripleRecord(NamedTuple):
    group_ids: tuple[tuple[int, int], tuple[int, int], tuple[int, int]]
    st_group: str
    galois_type: str
    z: ZVector
    realizable_over_Q: bool

    @property
    def order(self) -> int:
        return self.group_ids[0][0]

    def sort_key(self):
        return (self.st_group, self.order, self.group_ids)

    def as_dict(self) -> dict:
        lq, kq, lm = self.group_ids
        return {
            "st_group": self.st_group,
            "gal_LQ": list(lq),
            "gal_KQ": list(kq),
            "gal_LM": list(lm),
            "galois_type": self.galois_type,
            "z": list(self.z.flat()),
            "realizable": self.realizable_over_Q,
        }


def record_from_row(row: TableRow) -> TripleRecord:
    return TripleRecord(
        (row.gal_LQ, row.gal_KQ, row.gal_LM), row.st_group, row.galois_type,
        ZVector.from_flat(row.z), row.realizable,
    )


def label_triples(triples: list[SubgroupTriple], G: FiniteGroup) -> list[TripleRecord]:
    """Match each computed z-vector to its reference row; checks the labels are consistent."""
    by_z = {}
    for row in CANDIDATES[G.d]:
        if row.z in by_z:
            raise GroupError(f"reference data repeats z-vector {row.z}")
        by_z[row.z] = row
    seen: dict[tuple[int, ...], list[SubgroupTriple]] = {}
    for t in triples:
        seen.setdefault(z_vector(t, G).flat(), []).append(t)
    missing = [z for z in seen if z not in by_z]
    if missing:
        raise GroupError(f"computed z-vector(s) with no reference row: {missing}")
    unused = [r.st_group for z, r in by_z.items() if z not in seen]
    if unused:
        raise GroupError(f"reference rows never produced: {unused}")

    # Consistency of the embedded labels with fingerprints of H, H/N and H0.
    fp_by_label: dict[tuple[int, int], GroupFingerprint] = {}
    for z, ts in seen.items():
        row = by_z[z]
        for t in ts:
            fps = (
                (row.gal_LQ, fingerprint(t.H, G)),
                (row.gal_KQ, fingerprint_table(quotient_table(G, t.H, t.N))),
                (row.gal_LM, fingerprint(t.H0, G)),
            )
            for label, fp in fps:
                if fp.order != label[0]:
                    raise GroupError(f"order mismatch for label {label}: {fp.order}")
                if fp_by_label.setdefault(label, fp) != fp:
                    raise GroupError(f"label {label} attached to non-isomorphic groups")
    distinct = list(fp_by_label.items())
    for i, (la, fa) in enumerate(distinct):
        for lb, fb in distinct[i + 1:]:
            if fa == fb:
                raise GroupError(f"labels {la} and {lb} share a fingerprint")

    records = [record_from_row(by_z[z]) for z in seen]
    return sorted(records, key=TripleRecord.sort_key)


@dataclass(frozen=True)
class CandidateTable:
    d: int
    group_order: int
    class_count: int
    records: tuple[TripleRecord, ...]

    @property
    def realizable_count(self) -> int:
        return sum(r.realizable_over_Q for r in self.records)


_TABLE_CACHE: dict[int, CandidateTable] = {}


def candidate_table(d: int) -> CandidateTable:
    """Build G, enumerate admissible triples and label them. Cached per d."""
    if d not in _TABLE_CACHE:
        G = build_group(d)
        triples = admissible_triples(G)
        recs = label_triples(triples, G)
        _TABLE_CACHE[d] = CandidateTable(d, G.order, len(triples), tuple(recs))
    return _TABLE_CACHE[d]


def element_order_counts(G: FiniteGroup, mask: int) -> Counter:
    return Counter(int(G.orders[i]) for i in mask_indices(mask))
