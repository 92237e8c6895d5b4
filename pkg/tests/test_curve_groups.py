import pytest

from curve_groups import (
    ConicLineGroup,
    CosetViolation,
    CubicGroup,
    IndexTooSmall,
    NoSuchSubgroup,
    NotNonsingular,
    PointOnEll,
    check_triple,
    conic_line_add,
    enumerate_points,
    find_cubic_group,
    group_add,
    subgroup_and_cosets,
    subgroups_of_order,
    third_intersection,
)
from curves import Conic, Cubic, NotOnCurve, contains
from finite_field import field_create
from geometry import ProjLine, ProjPoint, collinear
from nets import construct_subgroup_type, model_conic, verify_axioms


@pytest.fixture
def cubic_group_5():
    # y^2 = x^3 + 1 over GF(5), six points
    return CubicGroup(Cubic.weierstrass(field_create(5), a6=1))


def test_cubic_group_axioms(cubic_group_5):
    group = cubic_group_5
    assert group.order == 6
    assert group.identity == ProjPoint(group.spec, (0, 1, 0))
    assert group.zero_prime == group.identity
    assert all(group.check_axioms().values())
    assert group.is_cyclic()


def test_collinearity_law(cubic_group_5):
    law = cubic_group_5.check_collinearity_law()
    assert law["triples"] == 20
    assert law["mismatches"] == 0
    assert law["collinear"] > 0


@pytest.mark.parametrize("order", [8, 12])
def test_collinearity_law_over_gf7(order):
    group = find_cubic_group(field_create(7), order, cyclic=False)
    law = group.check_collinearity_law()
    assert law["triples"] == order * (order - 1) * (order - 2) // 6
    assert law["mismatches"] == 0


def test_group_law_matches_the_chord_construction(cubic_group_5):
    group = cubic_group_5
    for p in group.points:
        for q in group.points:
            s = group.add(p, q)
            assert contains(group.curve, s)
            assert group.add(s, group.neg(q)) == p


def test_singular_cubic_is_rejected():
    with pytest.raises(NotNonsingular):
        CubicGroup(Cubic.weierstrass(field_create(5)))


def test_find_cubic_group():
    group = find_cubic_group(field_create(7), 8, cyclic=False)
    assert group.order == 8
    assert all(group.check_axioms().values())


def test_cubic_coset_triples(cubic_group_5):
    (subgroup,) = subgroups_of_order(cubic_group_5, 2)
    assert cubic_group_5.zero_prime_index in subgroup
    triples = subgroup_and_cosets(cubic_group_5, 2)
    assert len(triples) == 1
    check_triple(triples[0])
    net = construct_subgroup_type(cubic_group_5, triples[0])
    assert net.n == 2
    assert verify_axioms(net).passed
    assert all(contains(cubic_group_5.curve, p) for p in net.points)


def test_cubic_coset_errors(cubic_group_5):
    with pytest.raises(NoSuchSubgroup):
        subgroup_and_cosets(cubic_group_5, 4)
    with pytest.raises(IndexTooSmall):
        subgroup_and_cosets(cubic_group_5, 3)


def test_broken_triple_is_detected(cubic_group_5):
    triple = subgroup_and_cosets(cubic_group_5, 2)[0]
    broken = type(triple)(triple.group, triple.subgroup, triple.a, triple.a, triple.c)
    with pytest.raises(CosetViolation):
        check_triple(broken)


def test_hyperbola_group_is_the_multiplicative_group(gf7):
    group = ConicLineGroup(model_conic(gf7, "hyperbola"), ProjLine(gf7, (0, 0, 1)))
    assert group.order == 6
    assert all(group.check_axioms().values())
    assert group.is_cyclic()


def test_parabola_group_is_additive():
    spec = field_create(2, 2)
    group = ConicLineGroup(model_conic(spec, "parabola"), ProjLine(spec, (0, 0, 1)))
    assert group.order == 4
    assert all(group.check_axioms().values())
    assert not group.is_cyclic()
    assert set(group.element_orders()) == {1, 2}


def test_conic_line_cosets_give_a_net(gf7):
    group = ConicLineGroup(model_conic(gf7, "hyperbola"), ProjLine(gf7, (0, 0, 1)))
    triples = subgroup_and_cosets(group, 3)
    assert len(triples) == 1
    net = construct_subgroup_type(group, triples[0])
    assert verify_axioms(net).passed
    assert collinear(net.C)
    assert all(p.values[2] == 0 for p in net.C)


def test_conic_line_identity_must_avoid_the_line(gf7):
    conic = model_conic(gf7, "hyperbola")
    with pytest.raises(PointOnEll):
        ConicLineGroup(conic, ProjLine(gf7, (0, 0, 1)), identity=ProjPoint(gf7, (1, 0, 0)))


def test_reducible_conic_has_no_group(gf7):
    with pytest.raises(ValueError):
        ConicLineGroup(Conic.from_terms(gf7, {(1, 1, 0): 1}), ProjLine(gf7, (0, 0, 1)))


def test_third_intersection_and_sum(cubic_group_5):
    group = cubic_group_5
    spec = group.spec
    p, q = ProjPoint(spec, (0, 1, 1)), ProjPoint(spec, (0, 4, 1))
    # the vertical line X = 0 closes at infinity
    assert third_intersection(group.curve, p, q) == group.identity
    assert group_add(group, p, q) == group.identity
    assert group_add(group, p, group.identity) == p
    with pytest.raises(NotOnCurve):
        third_intersection(group.curve, p, ProjPoint(spec, (1, 1, 1)))


def test_enumerate_points_is_sorted(cubic_group_5):
    points = enumerate_points(cubic_group_5.curve)
    assert len(points) == 6
    assert points == sorted(points)
    assert points == cubic_group_5.points


def test_conic_line_add_identity(gf7):
    group = ConicLineGroup(model_conic(gf7, "hyperbola"), ProjLine(gf7, (0, 0, 1)))
    for point in group.points:
        assert conic_line_add(group, group.identity, point) == point
    with pytest.raises(PointOnEll):
        conic_line_add(group, group.identity, ProjPoint(gf7, (1, 0, 0)))
