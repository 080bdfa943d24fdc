import numpy as np
import pytest

from satotwist.groups import (GroupError, SubgroupTriple, ZVector, admissible_triples,
                              automorphism_like_subgroups, build_group, candidate_table,
                              canonical_conjugate, closure, element_order_counts,
                              enumerate_subgroups, mask_of, z_vector)
from satotwist.quadratic import GrpElem, Mat2


@pytest.fixture(scope="module", params=[2, 3])
def G(request):
    return build_group(request.param)


def test_orders(G):
    assert G.order == {2: 96, 3: 48}[G.d]
    assert G.aut_mask.bit_count() == G.order // 2


def test_table_is_a_group(G):
    t = G.mul_table
    e = G.identity
    assert (t[e] == np.arange(G.order)).all() and (t[:, e] == np.arange(G.order)).all()
    for row in t:
        assert len(set(row.tolist())) == G.order  # Latin square
    # associativity on all triples
    lhs = t[t[:, :, None], np.arange(G.order)[None, None, :]]
    rhs = t[np.arange(G.order)[:, None, None], t[None, :, :]]
    assert (lhs == rhs).all()


def test_w_hat_central_involution(G):
    w = G.w_hat
    assert G.orders[w] == 2
    assert all(G.mul(w, x) == G.mul(x, w) for x in range(G.order))
    centre = [x for x in range(G.order) if all(G.mul(x, y) == G.mul(y, x) for y in range(G.order))]
    assert sorted(centre) == sorted([G.identity, w])


def test_subgroup_enumeration(G):
    subs = enumerate_subgroups(G)
    assert mask_of([G.identity]) in subs
    assert G.full_mask in subs
    for h in subs:
        assert closure(G, h) == h
        assert G.order % h.bit_count() == 0


def test_class_counts(G):
    assert len(admissible_triples(G)) == {2: 27, 3: 38}[G.d]


def test_full_group_triple(G):
    triples = admissible_triples(G)
    full = [t for t in triples if t.H == G.full_mask]
    assert len(full) == 1
    z = z_vector(full[0], G).flat()
    expect = {3: (1, 1, 8, 2, 6, 2, 4, 0, 0, 14, 2, 4, 0, 4),
              2: (1, 1, 12, 8, 6, 8, 0, 12, 0, 18, 2, 0, 12, 16)}
    assert z == expect[G.d]


def test_w_times_tau(G):
    tau = G.elements.index(GrpElem(Mat2.identity(G.d), 1))
    H = mask_of([G.identity, G.w_hat, tau, G.mul(G.w_hat, tau)])
    w_group = mask_of([G.identity, G.w_hat])
    t = SubgroupTriple(H, w_group, H & G.aut_mask)
    assert t.H0 == w_group
    z = z_vector(t, G)
    assert z.flat() == (1, 1, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0)
    rec = [r for r in candidate_table(G.d).records if r.z == z]
    assert [(r.st_group, r.group_ids) for r in rec] == [("C_{2,1}", ((4, 2), (2, 1), (2, 1)))]


def test_z_vector_invariants(G):
    for t in admissible_triples(G):
        z = z_vector(t, G)
        assert sum(z.z1) == sum(z.z2) == t.order // 2
        assert z.z1[0] == 1


def test_z_vector_rejects_non_admissible(G):
    # H = A itself has no elements outside H0
    t = SubgroupTriple(G.aut_mask, mask_of([G.identity, G.w_hat]), G.aut_mask)
    with pytest.raises(GroupError):
        z_vector(t, G)


def test_conjugation_canonical(G):
    subs = enumerate_subgroups(G)
    for h in subs[:40]:
        c = canonical_conjugate(G, h)
        for g in range(0, G.order, 7):
            conj = mask_of(G.conj_perms[g][i] for i in range(G.order) if h >> i & 1)
            assert canonical_conjugate(G, conj) == c


def test_second_automorphism_like_subgroup(G):
    subs = enumerate_subgroups(G)
    alts = automorphism_like_subgroups(G, subs)
    assert G.aut_mask in alts and len(alts) >= 2
    base = sorted(z_vector(t, G).flat() for t in admissible_triples(G, subs))
    for a in alts:
        assert sorted(z_vector(t, G).flat() for t in admissible_triples(G, subs, a)) == base


def test_element_order_counts_small():
    G = build_group(3)
    assert element_order_counts(G, mask_of([G.identity])) == {1: 1}
    assert element_order_counts(G, mask_of([G.identity, G.w_hat])) == {1: 1, 2: 1}


@pytest.mark.parametrize("d,realizable", [(2, 20), (3, 21)])
def test_candidate_tables(d, realizable):
    tab = candidate_table(d)
    assert len(tab.records) == 23
    assert tab.realizable_count == realizable
    assert len({r.z for r in tab.records}) == 23


def test_named_rows():
    rec = {r.z.flat(): r for r in candidate_table(3).records}
    r = rec[(1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0)]
    assert r.st_group == "C_{2,1}" and r.group_ids == ((2, 1), (2, 1), (1, 1)) and r.realizable_over_Q
    rec2 = {r.z.flat(): r for r in candidate_table(2).records}
    r = rec2[(1, 1, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 4, 0)]
    assert r.st_group == "C_{4,1}" and not r.realizable_over_Q


def test_zvector_from_flat():
    with pytest.raises(ValueError):
        ZVector.from_flat(range(13))
