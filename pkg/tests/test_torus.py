import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cmhodge.cmfield import enumerate_cm_types, make_cm_type, product_datum
from cmhodge.hodge import chi, tate_twist, translate, validate_phi
from cmhodge.torus import (
    DatumNotAProduct,
    combined_hodge_dimension,
    exact_rank,
    hodge_dimension,
    is_nondegenerate,
    mt_dimension,
    product_factorization_check,
)

from conftest import fixture_datum
from oracles import left_action_perm, modular_rank, orbit_vectors, random_primes, rational_rank
from randomdata import random_datum, random_phi


def oracle_dims(phi):
    d = phi.datum
    table = d.group.table
    H = list(d.fixing.members)
    perms = [left_action_perm(table, H, g) for g in range(d.group.order)]
    primes = random_primes(random.Random(len(table)), 3)
    mt = modular_rank(orbit_vectors(perms, phi.values), primes)
    hodge = modular_rank(orbit_vectors(perms, [2 * v - phi.weight for v in phi.values]), primes)
    return mt, hodge


def test_examples(c2, c4, biquad):
    x = chi(make_cm_type(c2, [0]))
    assert (mt_dimension(c2, x), hodge_dimension(c2, x)) == (2, 1)
    y = chi(make_cm_type(c4, [0, 1]))
    assert (mt_dimension(c4, y), hodge_dimension(c4, y)) == (3, 2)
    z = chi(make_cm_type(biquad, [0, 2]))
    assert (mt_dimension(biquad, z), hodge_dimension(biquad, z)) == (2, 1)
    assert not is_nondegenerate(biquad, make_cm_type(biquad, [0, 2]))
    assert is_nondegenerate(c4, make_cm_type(c4, [0, 1]))


def test_exact_rank_small():
    assert exact_rank([]) == 0
    assert exact_rank([[0, 0], [0, 0]]) == 0
    assert exact_rank([[1, 2], [2, 4]]) == 1
    assert exact_rank([[0, 1], [1, 0], [1, 1]]) == 2
    assert exact_rank([[2, 3, 5], [7, 11, 13], [17, 19, 23]]) == 3


@given(st.lists(st.lists(st.integers(-20, 20), min_size=5, max_size=5), max_size=8))
def test_exact_rank_matches_fractions(rows):
    assert exact_rank(rows) == rational_rank(rows)


def test_mt_minus_hodge_is_one_for_cm_types(small_data):
    for d in small_data:
        for t in enumerate_cm_types(d):
            phi = chi(t)
            assert mt_dimension(d, phi) - hodge_dimension(d, phi) == 1
            assert hodge_dimension(d, phi) <= d.degree // 2


def test_invariance(small_data):
    rng = random.Random(7)
    for d in small_data:
        for _ in range(10):
            phi = random_phi(rng, d)
            dims = (mt_dimension(d, phi), hodge_dimension(d, phi))
            assert hodge_dimension(d, tate_twist(phi, 3)) == dims[1]
            for g in d.group.elements:
                gphi = translate(phi, g)
                assert (mt_dimension(d, gphi), hodge_dimension(d, gphi)) == dims


def test_random_against_oracle():
    rng = random.Random(2024)
    for _ in range(60):
        d = random_datum(rng)
        phi = random_phi(rng, d)
        assert (mt_dimension(d, phi), hodge_dimension(d, phi)) == oracle_dims(phi)


@settings(max_examples=30, deadline=None)
@given(st.randoms(use_true_random=False))
def test_random_cm_types_against_oracle(rng):
    d = random_datum(rng, max_degree=8)
    types = enumerate_cm_types(d)
    t = types[rng.randrange(len(types))]
    assert (mt_dimension(d, chi(t)), hodge_dimension(d, chi(t))) == oracle_dims(chi(t))


def test_products(c2, c4):
    p2 = fixture_datum("product-2.json")
    p3 = fixture_datum("product-3.json")
    p42 = fixture_datum("product-c4-c2.json")
    quad = make_cm_type(c2, [0])
    assert combined_hodge_dimension(p2, [quad, quad]) == 2
    assert combined_hodge_dimension(p3, [quad, quad, quad]) == 3
    assert combined_hodge_dimension(p42, [make_cm_type(c4, [0, 1]), quad]) == 3
    assert product_factorization_check(p3, [quad] * 3)
    for t in enumerate_cm_types(c4):
        for u in enumerate_cm_types(c2):
            assert product_factorization_check(product_datum([c4, c2]), [t, u])


def test_product_errors(c2, c4):
    with pytest.raises(DatumNotAProduct):
        combined_hodge_dimension(c4, [make_cm_type(c4, [0, 1])])
    p2 = product_datum([c2, c2])
    with pytest.raises(ValueError):
        combined_hodge_dimension(p2, [make_cm_type(c2, [0])])


def test_wrong_datum(c2, c4):
    with pytest.raises(ValueError):
        mt_dimension(c4, validate_phi(c2, 1, [1, 0]))
