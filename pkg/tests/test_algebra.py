import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tld.algebra import (
    DELTA, ONE, ZERO, AlgebraElement, AlgebraKind, PolyDelta, dimension,
    elem_add, elem_mul, elem_scale, generator_element, poly_add, poly_eq,
    poly_mul, verify_presentation, word_to_element,
)
from tld.coxeter import ONE_BAR, enumerate_fc
from tld.diagram import enumerate_admissible, identity_diagram, simple_diagram
from tld.errors import DimensionError, InvalidRankError, ParseError

polys = st.dictionaries(st.integers(0, 5), st.integers(-5, 5), max_size=4).map(PolyDelta)

DTL4 = AlgebraKind("dtl-d", 4)
LFD4 = AlgebraKind("lfd-d", 4)


def test_poly_basics():
    assert poly_mul(DELTA, DELTA) == PolyDelta.monomial(2)
    assert poly_mul(DELTA + 1, ZERO) == ZERO
    assert poly_add(DELTA, -DELTA) == 0
    assert poly_eq(PolyDelta({0: 1}), ONE)
    assert PolyDelta({3: 0, 1: 2}).terms == {1: 2}
    assert str(PolyDelta({0: 1, 1: 2, 2: 1})) == "1 + 2d + d^2"
    assert str(ZERO) == "0"
    assert (DELTA + 1) ** 2 == PolyDelta({0: 1, 1: 2, 2: 1})


def test_poly_dict_roundtrip():
    p = PolyDelta({0: -3, 4: 7})
    assert p.to_dict() == {"0": -3, "4": 7}
    assert PolyDelta.from_dict(p.to_dict()) == p
    with pytest.raises(ParseError):
        PolyDelta.from_dict({"x": 1})


@settings(max_examples=200, deadline=None)
@given(polys, polys, polys)
def test_poly_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == ZERO
    assert hash(p * ONE) == hash(p)


def test_kind_validation():
    assert DTL4.strands == 4
    assert AlgebraKind("dtl-a", 4).strands == 5
    with pytest.raises(InvalidRankError):
        AlgebraKind("lfd-d", 3)
    with pytest.raises(ParseError):
        AlgebraKind("dtl-b", 4)


def test_element_arithmetic():
    x = generator_element(DTL4, 2)
    zero = AlgebraElement.zero(DTL4)
    assert elem_add(x, zero) == x
    assert (x + elem_scale(PolyDelta(-1), x)).is_zero()
    scaled = elem_scale(DELTA, x)
    assert len(scaled) == 1 and scaled.terms[simple_diagram(4, 2)] == DELTA


def test_generator_relations():
    for s in DTL4.graph.generators:
        b = generator_element(DTL4, s)
        assert elem_mul(b, b) == b.scale(DELTA)
    b1, b2 = generator_element(DTL4, 1), generator_element(DTL4, 2)
    assert b1 * b2 * b1 == b1
    assert (generator_element(LFD4, 1) * generator_element(LFD4, ONE_BAR)).is_zero()
    assert not (b1 * generator_element(DTL4, ONE_BAR)).is_zero()


def test_word_to_element():
    assert word_to_element("", DTL4) == AlgebraElement.unit(DTL4)
    assert word_to_element("1,2,1", DTL4) == word_to_element("1", DTL4)
    for word in enumerate_fc(DTL4.graph):
        x = word_to_element(word, DTL4)
        assert len(x) == 1 and list(x.terms.values()) == [ONE]


def test_kind_mismatch():
    with pytest.raises(DimensionError):
        generator_element(DTL4, 1) + generator_element(AlgebraKind("dtl-d", 5), 1)
    type1 = [d for d in enumerate_admissible(4, "I")][0]
    AlgebraElement.basis(DTL4, type1)
    with pytest.raises(DimensionError):
        AlgebraElement.basis(LFD4, type1)
    with pytest.raises(DimensionError):
        AlgebraElement.basis(DTL4, identity_diagram(5))


@pytest.mark.parametrize("name,n", [("dtl-d", 4), ("lfd-d", 4), ("dtl-a", 4), ("dtl-a", 3)])
def test_verify_presentation(name, n):
    report = verify_presentation(name, n)
    assert report["pass"]
    assert all(not fam["failed"] for fam in report["relations"].values())
    if name == "lfd-d":
        assert report["relations"]["pair_free"]["checked"] == 1


@pytest.mark.parametrize("name,n,dim", [
    ("dtl-d", 4, 48), ("dtl-d", 5, 167), ("dtl-d", 6, 593),
    ("lfd-d", 4, 35), ("lfd-d", 5, 126), ("dtl-a", 3, 14),
])
def test_dimension(name, n, dim):
    assert dimension(name, n) == dim
    assert dimension(AlgebraKind(name, n)) == dim


def test_unit_is_neutral():
    basis = [AlgebraElement.basis(LFD4, d) for d in enumerate_admissible(4, "II")]
    one = AlgebraElement.unit(LFD4)
    for x in basis:
        assert one * x == x == x * one


def test_sum_of_products_is_bilinear():
    x = generator_element(DTL4, 1) + generator_element(DTL4, 3).scale(DELTA)
    y = generator_element(DTL4, ONE_BAR) + generator_element(DTL4, 2)
    z = generator_element(DTL4, 2).scale(PolyDelta(-2))
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z
