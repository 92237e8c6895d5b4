import pytest

from curves import (
    Conic,
    Cubic,
    CurveError,
    NotOnCurve,
    SingularMatrix,
    apply_point,
    count_points,
    curve_from_vector,
    curves_through,
    det3,
    frame_matrix,
    inverse,
    is_flex,
    is_irreducible_conic,
    is_nonsingular_cubic,
    mat_mul,
    null_space,
    rank,
    rational_points,
    tangent_line,
    veronese_row,
    weierstrass_discriminant,
)
from curves.linalg import identity
from finite_field import field_create
from geometry import ProjLine, ProjPoint


def _brute_count(spec, a4, a6):
    count = 1
    for x in range(spec.order):
        rhs = spec.add(spec.add(spec.pow(x, 3), spec.mul(a4, x)), a6)
        count += sum(1 for y in range(spec.order) if spec.mul(y, y) == rhs)
    return count


def test_conic_through_five_points(gf7):
    points = [ProjPoint(gf7, (1, y, gf7.mul(y, y))) for y in range(5)]
    cert = curves_through(points, 2)
    assert cert.nullity == 1
    conic = curve_from_vector(gf7, 2, cert.null_basis[0])
    assert conic == Conic.from_terms(gf7, {(1, 0, 1): 1, (0, 2, 0): gf7.neg(1)})
    assert is_irreducible_conic(conic)
    assert count_points(conic) == 8


def test_line_pair_is_reducible(gf7):
    pair = Conic.from_terms(gf7, {(1, 1, 0): 1})
    assert not is_irreducible_conic(pair)
    assert count_points(pair) == 2 * 8 - 1


def test_too_many_points_leave_no_conic(gf7):
    conic_points = [ProjPoint(gf7, (1, y, gf7.mul(y, y))) for y in range(5)]
    assert curves_through(conic_points + [ProjPoint(gf7, (0, 1, 0))], 2).nullity == 0


@pytest.mark.parametrize("a4, a6", [(0, 1), (1, 1), (2, 3), (3, 0), (5, 6)])
def test_weierstrass_point_counts(gf7, a4, a6):
    if not weierstrass_discriminant(gf7, a4=a4, a6=a6):
        pytest.skip("singular")
    curve = Cubic.weierstrass(gf7, a4=a4, a6=a6)
    assert count_points(curve) == len(rational_points(curve)) == _brute_count(gf7, a4, a6)


def test_weierstrass_example_over_gf5():
    spec = field_create(5)
    curve = Cubic.weierstrass(spec, a6=1)
    assert count_points(curve) == 6
    assert is_nonsingular_cubic(curve)
    infinity = ProjPoint(spec, (0, 1, 0))
    assert is_flex(curve, infinity)
    assert tangent_line(curve, infinity) == ProjLine(spec, (0, 0, 1))


def test_cusp_is_singular():
    spec = field_create(5)
    cusp = Cubic.weierstrass(spec)
    assert weierstrass_discriminant(spec) == 0
    assert not is_nonsingular_cubic(cusp)
    with pytest.raises(NotOnCurve):
        tangent_line(cusp, ProjPoint(spec, (1, 2, 1)))


def test_zero_form_is_rejected(gf7):
    with pytest.raises(CurveError):
        Conic(gf7, (0,) * 6)


def test_linear_algebra(gf7):
    m = [[1, 2, 3], [0, 1, 4], [5, 6, 0]]
    inv = inverse(gf7, m)
    assert mat_mul(gf7, m, inv) == identity(3)
    assert det3(gf7, m) != 0
    singular = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert rank(gf7, singular) == 2
    (vec,) = null_space(gf7, singular)
    assert all(sum(a * b for a, b in zip(row, vec)) % 7 == 0 for row in singular)
    with pytest.raises(SingularMatrix):
        inverse(gf7, singular)


def test_frame_matrix_sends_the_standard_frame(gf7):
    targets = [ProjPoint(gf7, v) for v in ((1, 2, 0), (0, 1, 3), (2, 0, 1), (1, 1, 1))]
    g = frame_matrix(gf7, *targets)
    standard = [ProjPoint(gf7, v) for v in ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1))]
    assert [apply_point(gf7, g, p) for p in standard] == targets


def test_veronese_row(gf7):
    assert len(veronese_row(ProjPoint(gf7, (1, 2, 3)), 2)) == 6
    assert len(veronese_row(ProjPoint(gf7, (1, 2, 3)), 3)) == 10
    # only Z^2 survives
    assert sorted(veronese_row(ProjPoint(gf7, (0, 0, 1)), 2)) == [0, 0, 0, 0, 0, 1]
    with pytest.raises(CurveError):
        veronese_row(ProjPoint(gf7, (0, 0, 1)), 4)


def test_row_reduction_over_an_extension_field():
    spec = field_create(2, 3)
    m = [[1, 2, 0], [0, 1, 3], [0, 0, 1]]
    assert mat_mul(spec, m, inverse(spec, m)) == identity(3)
    row = [1, 2, 3]
    assert rank(spec, [row, [spec.mul(5, x) for x in row], [0, 0, 1]]) == 2
