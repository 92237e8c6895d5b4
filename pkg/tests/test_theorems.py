from itertools import permutations

import numpy as np
import pytest

from curve_groups import CubicGroup, subgroup_and_cosets
from curves import Conic, Cubic, apply_point, contains, det3, rational_points
from finite_field import field_create
from geometry import ProjPoint, collinear
from nets import (
    DualThreeNet,
    construct_conic_line,
    construct_projection,
    construct_subgroup_type,
    n3_family,
    pasch_net,
)
from theorems import (
    IsNucleus,
    NotOrder2,
    NotOrder4,
    OnConic,
    PreconditionFailed,
    TheoremViolated,
    admissible_counts,
    check_converse,
    check_n2,
    check_n3,
    check_n4,
    check_projection_claims,
    check_theorem1,
    classify_group,
    perspectivity_from,
    waterhouse_scan,
    within_hasse,
)
from theorems import order4


def test_theorem1_on_the_hyperbola(hyperbola_11_5):
    report = check_theorem1(hyperbola_11_5)
    assert report.passed
    assert report.order == 5
    assert report.nullity == 1
    assert report.irreducible
    assert report.contains_all
    assert report.redei.passed


THEOREM1_CASES = [
    ("hyperbola", 7, 1, 3),
    ("hyperbola", 11, 1, 5),
    ("hyperbola", 13, 1, 4),
    ("hyperbola", 13, 1, 6),
    ("parabola", 5, 2, 5),
    ("parabola", 7, 2, 7),
    ("circle", 11, 1, 6),
    ("circle", 13, 1, 7),
    ("lines_mult", 7, 1, 3),
    ("lines_mult", 11, 1, 5),
    ("lines_add", 5, 1, 5),
    ("lines_add", 7, 1, 7),
]


@pytest.mark.parametrize("kind, p, k, n", THEOREM1_CASES)
def test_theorem1_on_conic_line_nets(kind, p, k, n):
    report = check_theorem1(construct_conic_line(field_create(p, k), kind, n))
    assert report.passed
    assert report.order == n
    assert report.nullity >= 1
    assert report.contains_all
    assert report.redei.passed
    assert report.irreducible == (kind not in ("lines_mult", "lines_add"))


def test_theorem1_preconditions(gf7, parabola_16_4):
    with pytest.raises(PreconditionFailed):
        check_theorem1(n3_family(gf7, 1, 2, 4))
    with pytest.raises(PreconditionFailed):
        check_theorem1(parabola_16_4)


def test_converse_on_the_hyperbola(hyperbola_11_5):
    report = check_converse(hyperbola_11_5)
    assert report.passed
    assert report.c_collinear
    assert report.phi.kind == "dihedral"
    assert report.phi.order == 10
    assert report.psi.kind == "cyclic"
    assert report.psi_transitive
    assert report.fixed_points == "two_rational"
    assert report.c_on_axis


@pytest.mark.parametrize(
    "kind, p, k, n, fixed",
    [
        ("parabola", 5, 2, 5, "tangent"),
        ("parabola", 7, 2, 7, "tangent"),
        ("circle", 13, 1, 7, "conjugate_pair"),
        ("hyperbola", 13, 1, 6, "two_rational"),
    ],
)
def test_converse_branches(kind, p, k, n, fixed):
    report = check_converse(construct_conic_line(field_create(p, k), kind, n))
    assert report.passed
    assert not report.split_conic
    assert report.phi.kind == "dihedral"
    assert report.phi.order == 2 * n
    assert report.psi.kind == "cyclic"
    assert report.psi.order == n
    assert report.psi_regular
    assert report.c_on_axis
    assert report.fixed_points == fixed
    if fixed == "tangent":
        # the translations fix only the point at infinity of the parabola
        assert len(report.rational_fixed_points) == 1
    elif fixed == "conjugate_pair":
        assert report.rational_fixed_points == []
        assert len(report.short_orbit["roots"]) == 2
        assert report.short_orbit["swapped"]


def test_converse_on_a_line_pair():
    report = check_converse(construct_conic_line(field_create(11), "lines_mult", 5))
    assert report.passed
    assert report.split_conic
    assert report.c_collinear
    assert report.phi is None


def test_converse_needs_order_five(hyperbola_13_4):
    with pytest.raises(PreconditionFailed):
        check_converse(hyperbola_13_4)


def test_n2_on_the_pasch_points(pasch_5):
    report = check_n2(pasch_5)
    assert report.passed
    assert report.projectivity == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert report.pencil_contains_all


def test_n2_on_cubic_cosets():
    group = CubicGroup(Cubic.weierstrass(field_create(5), a6=1))
    net = construct_subgroup_type(group, subgroup_and_cosets(group, 2)[0])
    report = check_n2(net)
    assert report.passed
    assert sum(len(points) for points in report.images.values()) == 6


@pytest.mark.parametrize("p, k", [(5, 1), (7, 1), (2, 3), (3, 2)])
def test_n2_on_moved_pasch_nets(p, k):
    spec = field_create(p, k)
    pasch = pasch_net(spec)
    rng = np.random.default_rng(10 * p + k)
    moved = 0
    while moved < 20:
        m = rng.integers(0, spec.order, size=(3, 3)).tolist()
        if det3(spec, m) == 0:
            continue
        A, B, C = ([apply_point(spec, m, point) for point in comp] for comp in (pasch.A, pasch.B, pasch.C))
        report = check_n2(DualThreeNet(spec, A, B, C))
        assert report.passed
        assert report.pencil_contains_all
        moved += 1


def test_n2_rejects_other_orders(hyperbola_13_4):
    with pytest.raises(NotOrder2):
        check_n2(hyperbola_13_4)


def test_n3_biconditionals(gf7):
    report = check_n3(gf7, 1, 3, 2)
    assert report.passed
    assert report.b_condition and report.b_collinear
    assert report.conic_through_a_c is not None
    assert not report.c_condition and not report.c_collinear
    assert report.conic_through_a_b is None
    assert report.cubic_nullity >= 1

    generic = check_n3(gf7, 1, 2, 4)
    assert generic.passed
    assert not (generic.b_condition or generic.b_collinear or generic.c_condition or generic.c_collinear)


@pytest.mark.parametrize("p", [7, 11])
def test_n3_biconditionals_hold_for_every_triple(p):
    spec = field_create(p)
    reports = [check_n3(spec, a, b, c) for a, b, c in permutations(range(1, p), 3)]
    assert len(reports) == (p - 1) * (p - 2) * (p - 3)
    assert all(report.passed for report in reports)
    assert any(report.b_collinear for report in reports)


def test_n4_cyclic_arc(hyperbola_13_4):
    cert = check_n4(hyperbola_13_4)
    assert cert.passed
    assert cert.nullity >= 1
    assert cert.arc
    assert cert.cyclic_case
    assert cert.isotopy == "cyclic"
    assert cert.closed_form_on_b_and_c
    assert cert.closed_form_on_fourth


def test_n4_klein_arc(parabola_16_4):
    cert = check_n4(parabola_16_4)
    assert cert.passed
    assert cert.arc
    assert cert.cyclic_case is False
    assert cert.isotopy == "klein"
    assert cert.closed_form_on_b_and_c
    assert cert.closed_form_on_fourth
    assert cert.forced_structure is None


def test_n4_closed_form_must_reach_the_fourth_point(hyperbola_13_4, monkeypatch):
    fourth = ProjPoint(hyperbola_13_4.spec, (1, 1, 1))
    monkeypatch.setattr(order4, "_vanishes", lambda spec, tail, point: point != fourth)
    with pytest.raises(TheoremViolated, match="fourth point"):
        check_n4(hyperbola_13_4)


def test_n4_klein_closed_form_is_enforced(parabola_16_4, monkeypatch):
    # XYZ is nonzero off the sides of the frame triangle
    monkeypatch.setattr(order4, "_klein_closed_form", lambda spec, values: [0, 0, 0, 0, 0, 0, 1])
    with pytest.raises(TheoremViolated, match="klein closed form misses a point of B or C"):
        check_n4(parabola_16_4)


def test_n4_three_lines():
    cert = check_n4(construct_conic_line(field_create(2, 2), "lines_add", 4))
    assert cert.passed
    assert cert.regular_lines


def test_n4_rejects_other_orders(hyperbola_11_5):
    with pytest.raises(NotOrder4):
        check_n4(hyperbola_11_5)


def test_waterhouse_exhaustive_over_gf5():
    report = waterhouse_scan(field_create(5))
    assert report.exhaustive
    assert report.passed
    assert report.hasse_violations == []
    assert report.missing == []
    assert all(within_hasse(5, n) for n in report.realized)
    assert report.curves_scanned == sum(report.histogram.values())


def test_waterhouse_exhaustive_over_gf7(gf7):
    report = waterhouse_scan(gf7)
    assert report.exhaustive
    assert report.passed
    assert report.missing == []
    assert min(report.realized) == 3
    assert max(report.realized) == 13


def test_waterhouse_sampling_is_seeded(gf7):
    first = waterhouse_scan(gf7, exhaustive_limit=100, samples=300, seed=3)
    second = waterhouse_scan(gf7, exhaustive_limit=100, samples=300, seed=3)
    assert not first.exhaustive
    assert first == second
    assert first.passed
    assert 0 < first.curves_scanned <= 300


def test_admissible_counts():
    assert admissible_counts(field_create(2, 2)) == [2, 4, 6, 8]
    assert within_hasse(5, 10)
    assert not within_hasse(5, 11)


def test_projection_claims_need_a_projection_net(hyperbola_11_5):
    with pytest.raises(PreconditionFailed):
        check_projection_claims(hyperbola_11_5)


@pytest.mark.slow
def test_projection_claims():
    report = check_projection_claims(construct_projection(4, 64))
    assert report.passed
    assert report.c_collinear
    assert report.conic_nullity == 0
    assert all(c.cubic_nullity == 0 for c in report.components.values())


def _compose(f, g):
    return tuple(f[i] for i in g)


def _invert(f):
    out = [0] * len(f)
    for i, x in enumerate(f):
        out[x] = i
    return tuple(out)


def test_classify_small_groups():
    z6 = classify_group(list(range(6)), lambda x, y: (x + y) % 6, 0, lambda x: -x % 6)
    assert z6.kind == "cyclic"
    s3 = classify_group(sorted(permutations(range(3))), _compose, (0, 1, 2), _invert)
    assert s3.kind == "dihedral"
    assert s3.derived_order == 3
    klein = classify_group([0, 1, 2, 3], lambda x, y: x ^ y, 0, lambda x: x)
    assert klein.kind == "elementary_abelian"
    assert klein.element_orders == {1: 1, 2: 3}


def _standard_conic(spec):
    # XZ = Y^2
    return Conic.from_terms(spec, {(1, 0, 1): 1, (0, 2, 0): spec.neg(1)})


def test_perspectivity_is_an_involution(gf7):
    conic = _standard_conic(gf7)
    center = ProjPoint(gf7, (0, 1, 0))
    sigma = perspectivity_from(conic, center)
    for point in rational_points(conic):
        image = sigma(point)
        assert contains(conic, image)
        assert sigma(image) == point
        if image != point:
            assert collinear([center, point, image])
    with pytest.raises(OnConic):
        perspectivity_from(conic, ProjPoint(gf7, (1, 0, 0)))


def test_nucleus_has_no_perspectivity():
    spec = field_create(2, 2)
    with pytest.raises(IsNucleus):
        perspectivity_from(_standard_conic(spec), ProjPoint(spec, (0, 1, 0)))
