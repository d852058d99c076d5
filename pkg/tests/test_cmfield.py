import itertools

import pytest

from cmhodge.cmfield import (
    DegreeTooLarge,
    NotACMType,
    NotASubfieldChain,
    RhoFixesE,
    RhoNotCentral,
    RhoNotOrder2,
    SubfieldNotCM,
    closure_index_over_real_closure,
    cm_type_classes,
    enumerate_cm_types,
    factor_action,
    galois_orbits_of_cm_types,
    is_transitive_on_cm_types,
    lift_cm_type,
    make_cm_type,
    product_datum,
    project_cm_type,
    validate_datum,
)
from cmhodge.groups import cyclic_group, dihedral_group, direct_product, subgroup_closure

from oracles import brute_cm_types, brute_orbits


def test_validate_examples(c2, c4):
    assert c2.degree == 2 and c2.conj == (1, 0)
    assert c4.degree == 4 and c4.conj == (2, 3, 0, 1)


def test_validate_errors():
    D4 = dihedral_group(4)
    r = next(a for a in D4.elements if D4.element_order(a) == 4)
    s = next(a for a in D4.elements if D4.element_order(a) == 2 and not D4.is_central(a))
    with pytest.raises(RhoNotOrder2):
        validate_datum(D4, [s], r)
    with pytest.raises(RhoNotCentral):
        validate_datum(D4, [0], s)
    with pytest.raises(RhoFixesE):
        validate_datum(cyclic_group(4), [2], 2)


def test_cm_type_counts(small_data):
    for d in small_data:
        types = enumerate_cm_types(d)
        assert len(types) == 2 ** (d.degree // 2)
        assert [t.members for t in types] == brute_cm_types(d.conj)


def test_degree_cap():
    d = validate_datum(cyclic_group(26), [0], 13)
    with pytest.raises(DegreeTooLarge):
        enumerate_cm_types(d)


def test_quartic_types(c4):
    assert [t.members for t in enumerate_cm_types(c4)] == [(0, 1), (0, 3), (1, 2), (2, 3)]


def _brute_galois_orbits(d):
    perms = d.embeddings.action_table
    return brute_orbits(brute_cm_types(d.conj), perms)


def test_galois_orbits_against_brute_force(small_data):
    for d in small_data:
        got = sorted(sorted(t.members for t in o) for o in galois_orbits_of_cm_types(d))
        want = sorted(sorted(tuple(sorted(x)) for x in o) for o in _brute_galois_orbits(d))
        assert got == want


def test_transitivity(c2, c4, d4, biquad):
    # imaginary quadratic: the nontrivial element swaps the two CM-types
    assert [len(o) for o in galois_orbits_of_cm_types(c2)] == [2]
    assert is_transitive_on_cm_types(c2)
    assert [len(o) for o in galois_orbits_of_cm_types(c4)] == [4]
    assert is_transitive_on_cm_types(c4)
    # biquadratic: {e,b},{a,ab} form one orbit and {e,ab},{a,b} another
    assert not is_transitive_on_cm_types(biquad)
    # The four CM-types of the dihedral datum are the edges of a square,
    # which D4 permutes transitively.
    assert len(_brute_galois_orbits(d4)) == 1
    assert is_transitive_on_cm_types(d4)


def test_classes(c2, c4, d4):
    assert len(cm_type_classes(c2)) == 1
    assert len(cm_type_classes(c4)) == 1
    classes = cm_type_classes(d4)
    assert [[t.members for t in c] for c in classes] == [[(0, 1), (2, 3)], [(0, 3), (1, 2)]]


def test_orbits_partition_and_translates_are_cm_types(small_data):
    for d in small_data:
        types = {t.members for t in enumerate_cm_types(d)}
        for parts in (galois_orbits_of_cm_types(d), cm_type_classes(d)):
            flat = [t.members for o in parts for t in o]
            assert sorted(flat) == sorted(types) and len(flat) == len(set(flat))
        for t in enumerate_cm_types(d):
            for g in d.group.elements:
                assert t.translate(g).members in types


def test_make_cm_type_rejects(c4):
    for bad in ([0, 2], [0], [0, 9]):
        with pytest.raises(NotACMType):
            make_cm_type(c4, bad)


def test_product_datum(c2, c4):
    p2 = product_datum([c2, c2])
    assert p2.group.order == 4 and p2.group.is_abelian
    assert p2.group.element_order(p2.rho) == 2
    labels, perms = factor_action(p2)
    assert labels == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert len(perms) == 4
    p3 = product_datum([c2, c2, c2])
    assert p3.group.order == 8 and len(p3.factors) == 3
    assert all(p3.group.element_order(a) <= 2 for a in p3.group.elements)
    p = product_datum([c4, c2])
    assert p.group.order == 8 and p.group.is_abelian
    with pytest.raises(ValueError):
        product_datum([c2])


def test_factor_action_is_an_action(c4, c2):
    p = product_datum([c4, c2])
    _, perms = factor_action(p)
    G = p.group
    for g, h in itertools.product(G.elements, G.elements):
        gh = perms[G.mul(g, h)]
        assert list(gh) == [perms[g][perms[h][x]] for x in range(len(gh))]


def test_lift_identity(c4):
    t = make_cm_type(c4, [0, 1])
    assert lift_cm_type(c4, c4.fixing, t) == t


def test_lift_into_real_subfield_fails(c4):
    H1 = subgroup_closure(c4.group, [2])
    t = make_cm_type(c4, [0, 1])
    with pytest.raises(SubfieldNotCM):
        lift_cm_type(c4, H1, t)


def test_lift_from_quadratic_quotient(c2):
    p = product_datum([c2, c2])
    # (x, y) has index 2x + y; {(0,0), (1,0)} fixes the second quadratic field
    H1 = subgroup_closure(p.group, [2])
    sub = p.subfield(H1)
    assert sub.degree == 2
    for members in ([0], [1]):
        t_f = make_cm_type(sub, members)
        t_e = lift_cm_type(p, H1, t_f)
        assert len(t_e.members) == 2
        expected = [s for s, c in enumerate(p.embeddings.cosets) if sub.embeddings.coset_of(c[0]) in members]
        assert list(t_e.members) == expected
        assert project_cm_type(t_e, sub) == t_f.members


def test_lift_chain_error(d4):
    G = d4.group
    other = next(
        a for a in G.elements
        if G.element_order(a) == 2 and not G.is_central(a) and a not in d4.fixing
    )
    H1 = subgroup_closure(G, [other])
    assert not d4.fixing.issubset(H1)
    t_f = enumerate_cm_types(d4.subfield(H1))[0]
    with pytest.raises(NotASubfieldChain):
        lift_cm_type(d4, H1, t_f)


def test_lift_then_project_roundtrip(small_data):
    for d in small_data:
        G = d.group
        for extra in G.elements:
            H1 = subgroup_closure(G, list(d.fixing.members) + [extra])
            if d.rho in H1:
                continue
            sub = d.subfield(H1)
            for t_f in enumerate_cm_types(sub):
                assert project_cm_type(lift_cm_type(d, H1, t_f), sub) == t_f.members


def test_closure_index(c2, c4, d4):
    # [Ebar : Fbar] = 2^d for the quadratic and dihedral quartic data, not the cyclic one
    assert closure_index_over_real_closure(c2) == 2
    assert closure_index_over_real_closure(d4) == 4
    assert closure_index_over_real_closure(c4) == 2


def test_sextic_non_galois():
    G = direct_product(cyclic_group(2), dihedral_group(3))
    t = next(a for a in range(6) if G.element_order(a) == 2)
    d = validate_datum(G, [t], 6)
    assert d.degree == 6
    assert len(enumerate_cm_types(d)) == 8
