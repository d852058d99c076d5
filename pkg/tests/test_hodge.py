import pytest
from hypothesis import given
from hypothesis import strategies as st

from cmhodge.cmfield import enumerate_cm_types, make_cm_type
from cmhodge.hodge import (
    DatumMismatch,
    WeightRelationViolated,
    chi,
    hodge_numbers,
    is_effective,
    max_effective_twist,
    tate_twist,
    tensor,
    translate,
    validate_phi,
)

from conftest import SMALL, fixture_datum

DATA = [fixture_datum(n) for n in SMALL]


@st.composite
def phis(draw, datum=None, lo=-4, hi=6):
    d = datum if datum is not None else draw(st.sampled_from(DATA))
    n = draw(st.integers(-3, 8))
    values = [0] * d.degree
    for s, t in d.conj_pairs:
        values[s] = draw(st.integers(lo, hi))
        values[t] = n - values[s]
    return validate_phi(d, n, values)


def test_validate_examples(c2, c4):
    assert validate_phi(c2, 1, [1, 0]).values == (1, 0)
    assert validate_phi(c4, 2, [2, 1, 0, 1]).values == (2, 1, 0, 1)
    with pytest.raises(WeightRelationViolated) as info:
        validate_phi(c2, 2, [2, 1])
    assert info.value.sigma == 0


def test_hodge_numbers_examples(c4):
    for t in enumerate_cm_types(c4):
        assert hodge_numbers(chi(t)) == {(1, 0): 2, (0, 1): 2}
    assert hodge_numbers(validate_phi(c4, 2, [2, 1, 0, 1])) == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    assert hodge_numbers(validate_phi(c4, 0, [0, 0, 0, 0])) == {(0, 0): 4}


def test_twist_examples(c2, c4):
    phi = validate_phi(c4, 2, [2, 1, 0, 1])
    assert tate_twist(phi, 0) == phi
    tw = tate_twist(phi, 1)
    assert tw.values == (1, 0, -1, 0) and tw.weight == 0
    up = tate_twist(validate_phi(c2, 1, [1, 0]), -1)
    assert up.values == (2, 1) and up.weight == 3


def test_effective_examples(c4):
    assert all(is_effective(chi(t)) for t in enumerate_cm_types(c4))
    assert not is_effective(validate_phi(c4, 0, [1, 0, -1, 0]))
    assert is_effective(validate_phi(c4, 0, [0, 0, 0, 0]))


def test_max_twist_examples(c4):
    assert max_effective_twist(validate_phi(c4, 2, [2, 1, 0, 1])) == 0
    phi = validate_phi(c4, 4, [3, 2, 1, 2])
    assert max_effective_twist(phi) == 1
    assert tate_twist(phi, 1).values == (2, 1, 0, 1)
    const = validate_phi(c4, 6, [3, 3, 3, 3])
    assert tate_twist(const, max_effective_twist(const)).values == (0, 0, 0, 0)


def test_tensor_examples(c2, c4):
    zero = validate_phi(c4, 0, [0] * 4)
    phi = validate_phi(c4, 2, [2, 1, 0, 1])
    assert tensor(phi, zero) == phi
    both = tensor(chi(make_cm_type(c4, [0, 1])), chi(make_cm_type(c4, [0, 3])))
    assert both.values == (2, 1, 0, 1) and both.weight == 2
    x = chi(make_cm_type(c2, [0]))
    assert tensor(x, x).values == (2, 0)
    with pytest.raises(DatumMismatch):
        tensor(x, phi)


@given(phis())
def test_roundtrip(phi):
    assert validate_phi(phi.datum, phi.weight, list(phi.values)) == phi


@given(phis())
def test_hodge_symmetry(phi):
    h = hodge_numbers(phi)
    assert sum(h.values()) == phi.datum.degree
    assert all(h.get((q, p)) == m for (p, q), m in h.items())


@given(phis(), st.integers(-5, 5), st.integers(-5, 5))
def test_twist_laws(phi, a, b):
    assert tate_twist(tate_twist(phi, a), b) == tate_twist(phi, a + b)
    assert tate_twist(tate_twist(phi, a), -a) == phi
    r = max_effective_twist(phi)
    assert is_effective(tate_twist(phi, r))
    assert not is_effective(tate_twist(phi, r + 1))
    assert 0 in tate_twist(phi, r).values


@given(st.data())
def test_tensor_laws(data):
    d = data.draw(st.sampled_from(DATA))
    x, y, z = (data.draw(phis(d)) for _ in range(3))
    assert tensor(x, y) == tensor(y, x)
    assert tensor(tensor(x, y), z) == tensor(x, tensor(y, z))
    assert tensor(x, y).weight == x.weight + y.weight


@given(phis(), st.data())
def test_translate_is_an_action(phi, data):
    G = phi.datum.group
    g = data.draw(st.sampled_from(list(G.elements)))
    h = data.draw(st.sampled_from(list(G.elements)))
    assert translate(translate(phi, h), g) == translate(phi, G.mul(g, h))
    assert translate(phi, 0) == phi
    # a Galois translate satisfies the weight relation since rho is central
    validate_phi(phi.datum, phi.weight, translate(phi, g).values)
