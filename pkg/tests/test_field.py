import pytest

from finite_field import (
    DivByZero,
    FieldSpec,
    NonPrime,
    NotASubfield,
    Poly,
    SpecMismatch,
    TooLarge,
    arith,
    embed_subfield,
    enumerate_elements,
    field_create,
)


@pytest.mark.parametrize("p, k, modulus", [
    (2, 2, (1, 1, 1)),
    (2, 3, (1, 1, 0, 1)),
    (2, 4, (1, 1, 0, 0, 1)),
    (3, 2, (1, 0, 1)),
])
def test_smallest_modulus(p, k, modulus):
    assert field_create(p, k).modulus == modulus


@pytest.mark.parametrize("p, k", [(5, 1), (2, 3), (3, 2), (2, 4)])
def test_arithmetic_matches_galois(p, k, oracle):
    spec = field_create(p, k)
    GF = oracle(spec)
    q = spec.order
    for x in range(q):
        for y in range(q):
            assert spec.add(x, y) == int(GF(x) + GF(y))
            assert spec.sub(x, y) == int(GF(x) - GF(y))
            assert spec.mul(x, y) == int(GF(x) * GF(y))
        if x:
            assert spec.inv(x) == int(GF(x) ** -1)
        assert spec.neg(x) == int(-GF(x))
        assert spec.pow(x, 5) == int(GF(x) ** 5)


def test_primitive_element_generates():
    spec = field_create(3, 2)
    g = spec.primitive_value
    assert sorted(spec.pow(g, i) for i in range(spec.order - 1)) == list(range(1, spec.order))
    assert spec.order_of(g) == spec.order - 1
    assert spec.primitive_element == spec.element(g)


def test_field_create_is_cached():
    assert field_create(2, 3) is field_create(2, 3)


def test_field_create_errors():
    with pytest.raises(NonPrime):
        field_create(4)
    with pytest.raises(TooLarge):
        field_create(2, 21)
    with pytest.raises(TooLarge):
        field_create(7, 2, max_order=20)


def test_division_by_zero():
    spec = field_create(7)
    with pytest.raises(DivByZero):
        spec.inv(0)
    with pytest.raises(DivByZero):
        spec.element(3) / 0


def test_arith_dispatch(gf7):
    a, b = gf7.element(3), gf7.element(5)
    assert arith(a, b, "add") == 1
    assert arith(a, b, "sub") == 5
    assert arith(a, b, "mul") == 1
    assert arith(a, b, "div") == 2
    with pytest.raises(SpecMismatch):
        arith(a, field_create(5).element(1), "add")
    with pytest.raises(ValueError):
        arith(a, b, "pow")


def test_element_operators(gf7):
    a = gf7.element(3)
    assert a * 5 == 1
    assert a + 4 == 0
    assert a / a == 1
    assert -a == 4
    assert a ** 6 == 1
    assert 1 - a == 5


def test_elements_in_value_order():
    spec = field_create(2, 2)
    assert [e.value for e in enumerate_elements(spec)] == [0, 1, 2, 3]
    assert spec.element(2).coeffs == (0, 1)
    assert spec.element([1, 1]).value == 3


def test_json_round_trip():
    spec = field_create(3, 2)
    assert FieldSpec.from_json(spec.to_json()) == spec


@pytest.mark.parametrize("sub_k, sup_k", [(1, 4), (2, 4), (2, 6), (3, 6)])
def test_embedding_is_a_homomorphism(sub_k, sup_k):
    sub, sup = field_create(2, sub_k), field_create(2, sup_k)
    phi = embed_subfield(sub, sup)
    for x in range(sub.order):
        for y in range(sub.order):
            assert phi(sub.add(x, y)) == phi(x) + phi(y)
            assert phi(sub.mul(x, y)) == phi(x) * phi(y)
    assert sup.order_of(phi.generator_image) == sub.order - 1
    assert len(set(phi.table)) == sub.order
    assert all(phi.preimage(phi(x)).value == x for x in range(sub.order))


def test_embedding_rejects_non_subfields():
    with pytest.raises(NotASubfield):
        embed_subfield(field_create(2, 2), field_create(2, 3))
    with pytest.raises(NotASubfield):
        embed_subfield(field_create(3), field_create(2, 2))


def test_poly_from_roots_and_division():
    spec = field_create(5)
    f = Poly.from_roots(spec, [1, 2])
    assert f.coeffs == (2, 2, 1)
    assert f.roots() == [1, 2]
    quotient, remainder = divmod(f, Poly.from_roots(spec, [1]))
    assert quotient == Poly.from_roots(spec, [2])
    assert remainder.is_zero()
    assert f.derivative() == Poly(spec, [2, 2])


def test_galois_field_shares_the_packed_values():
    spec = field_create(3, 2)
    GF = spec.galois_field
    assert GF.order == 9
    for x in range(9):
        for y in range(9):
            assert int(GF(x) * GF(y)) == spec.mul(x, y)
