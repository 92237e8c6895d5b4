import pytest

from finite_field import Poly, field_create
from geometry import ProjPoint, affine_point
from nets import DualThreeNet, construct_conic_line, n3_family, trivial_net
from redei import (
    CharTooSmall,
    CNotOnLine,
    NonAffinePoint,
    OutOfRange,
    direct_moments,
    direct_power_sums,
    divisibility_certificate,
    moments_from_power_sums,
    normalised_components,
    power_sums,
    redei_certificate,
    redei_polynomial,
    sigma_k,
    sigmas,
)


@pytest.fixture
def scattered(gf7):
    return [affine_point(gf7, x, y) for x, y in ((0, 1), (2, 5), (3, 3), (6, 4), (5, 0))]


def test_redei_polynomial_is_monic(scattered):
    poly = redei_polynomial(scattered)
    assert poly.degree_t == 5
    assert poly.coefficient_t(5) == Poly.constant(scattered[0].spec, 1)
    # one point has x = 0
    assert poly.degree_x == 4
    for point in scattered:
        x, y = point.affine()
        # T = y - xX is a root for every X
        for x_value in range(7):
            t = (y - x * x_value).value
            assert poly.eval(t, x_value) == 0
            assert poly.substitute_x(x_value).eval(t) == 0


def test_newton_power_sums_match_direct_sums(scattered):
    pis = power_sums(sigmas(redei_polynomial(scattered)), 4)
    assert pis == direct_power_sums(scattered, 4)
    assert moments_from_power_sums(pis) == direct_moments(scattered, 5)


def test_power_sums_need_small_order():
    spec = field_create(3)
    points = [affine_point(spec, x, y) for x, y in ((0, 0), (1, 0), (0, 1), (1, 2))]
    with pytest.raises(CharTooSmall):
        power_sums(sigmas(redei_polynomial(points)), 3)


def test_points_at_infinity_are_rejected(gf7):
    with pytest.raises(NonAffinePoint):
        redei_polynomial([ProjPoint(gf7, (1, 2, 0))])


def test_certificate_for_hyperbola(hyperbola_11_5):
    cert = redei_certificate(hyperbola_11_5)
    assert cert.passed
    assert cert.order == 5
    assert all(check.remainder_zero for check in cert.checks)
    assert cert.top_scalar is not None
    assert cert.power_sums.power_sums_equal
    assert cert.power_sums.newton_matches_direct
    assert cert.notice is None


def test_certificate_at_the_characteristic():
    cert = redei_certificate(construct_conic_line(field_create(7), "lines_add", 7))
    assert cert.passed
    assert cert.power_sums is not None


def test_certificate_above_the_characteristic(parabola_16_4):
    cert = redei_certificate(parabola_16_4)
    assert cert.passed
    assert cert.power_sums is None
    assert "skipped" in cert.notice


def test_certificate_with_a_and_b_swapped(hyperbola_11_5):
    assert redei_certificate(hyperbola_11_5.relabel("BAC")).passed


def test_certificate_detects_a_wrong_point(hyperbola_11_5):
    net = hyperbola_11_5
    wrong = DualThreeNet(net.spec, net.A, net.B[1:] + (affine_point(net.spec, 0, 5),), net.C)
    cert = redei_certificate(wrong)
    assert not cert.passed
    assert not all(check.remainder_zero for check in cert.checks)


def test_c_must_be_collinear(gf7):
    with pytest.raises(CNotOnLine):
        redei_certificate(n3_family(gf7, 1, 2, 4))
    with pytest.raises(CNotOnLine):
        redei_certificate(trivial_net(gf7))


def test_sigma_k(scattered):
    poly = redei_polynomial(scattered)
    assert sigma_k(poly, 0) == Poly.constant(scattered[0].spec, 1)
    assert [sigma_k(poly, k) for k in range(6)] == sigmas(poly)
    with pytest.raises(OutOfRange):
        sigma_k(poly, 6)


def test_divisibility_certificate_alone(hyperbola_11_5):
    A, B, slopes = normalised_components(hyperbola_11_5)
    assert len(slopes) == 5
    cert = divisibility_certificate(A, B, slopes)
    assert cert.passed
    assert cert.order == 5
    assert cert.power_sums is None
