import galois
import pytest

from finite_field import field_create
from nets import construct_conic_line, pasch_net


def galois_field(spec):
    """The same field in galois, built on our modulus so integer values agree."""
    if spec.k == 1:
        return galois.GF(spec.p)
    modulus = galois.Poly(list(reversed(spec.modulus)), field=galois.GF(spec.p))
    return galois.GF(spec.order, irreducible_poly=modulus)


@pytest.fixture
def oracle():
    return galois_field


@pytest.fixture
def gf7():
    return field_create(7)


@pytest.fixture
def hyperbola_11_5():
    return construct_conic_line(field_create(11), "hyperbola", 5)


@pytest.fixture
def hyperbola_13_4():
    return construct_conic_line(field_create(13), "hyperbola", 4)


@pytest.fixture
def parabola_16_4():
    return construct_conic_line(field_create(2, 4), "parabola", 4)


@pytest.fixture
def pasch_5():
    return pasch_net(field_create(5))
