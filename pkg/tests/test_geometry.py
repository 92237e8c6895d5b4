from collections import Counter
from itertools import combinations

import pytest

from finite_field import field_create
from geometry import (
    EqualPoints,
    GeometryError,
    ProjLine,
    ProjPoint,
    ProjPoint3,
    affine_point3,
    collinear,
    incident,
    is_arc,
    is_hyperoval,
    line_profile,
    line_through,
    lines_of_plane,
    meet,
    plane_coords,
    plane_incidence,
    plane_through,
    points_of_plane,
    points_on,
    project_from_point,
)


@pytest.mark.parametrize("p, k", [(2, 1), (3, 1), (2, 2), (5, 1)])
def test_plane_counts(p, k):
    spec = field_create(p, k)
    q = spec.order
    points = points_of_plane(spec)
    assert len(points) == len(set(points)) == q * q + q + 1
    assert len(lines_of_plane(spec)) == q * q + q + 1
    for line in lines_of_plane(spec)[:5]:
        on = points_on(line)
        assert len(on) == q + 1
        assert all(line.contains(pt) for pt in on)


def test_points_are_normalised(gf7):
    assert ProjPoint(gf7, (2, 4, 6)).values == (1, 2, 3)
    assert ProjPoint(gf7, (0, 3, 0)) == ProjPoint(gf7, (0, 1, 0))
    with pytest.raises(GeometryError):
        ProjPoint(gf7, (0, 0, 0))


def test_join_and_meet(gf7):
    p, q, r = ProjPoint(gf7, (1, 0, 0)), ProjPoint(gf7, (0, 1, 0)), ProjPoint(gf7, (1, 1, 0))
    line = line_through(p, q)
    assert line == ProjLine(gf7, (0, 0, 1))
    assert line.contains(r)
    assert incident(r, line)
    assert not incident(ProjPoint(gf7, (0, 0, 1)), line)
    assert collinear([p, q, r])
    assert not collinear([p, q, ProjPoint(gf7, (0, 0, 1))])
    other = ProjLine(gf7, (1, 0, 0))
    assert meet(line, other) == q
    with pytest.raises(EqualPoints):
        line_through(p, p)


def test_two_points_one_line():
    spec = field_create(3)
    points = points_of_plane(spec)
    for a, b in combinations(points[:6], 2):
        line = line_through(a, b)
        assert line.contains(a) and line.contains(b)
        assert sum(1 for x in points if line.contains(x)) == 4


def _standard_conic_points(spec):
    # XZ = Y^2
    return [ProjPoint(spec, (1, y, spec.mul(y, y))) for y in range(spec.order)] + [ProjPoint(spec, (0, 0, 1))]


def test_conic_is_an_arc_and_completes_to_a_hyperoval():
    spec = field_create(2, 2)
    conic = _standard_conic_points(spec)
    assert is_arc(conic)
    assert not is_hyperoval(conic)
    nucleus = ProjPoint(spec, (0, 1, 0))
    assert is_hyperoval(conic + [nucleus])


def test_non_arc_profile(gf7):
    points = [ProjPoint(gf7, (1, 0, 0)), ProjPoint(gf7, (0, 1, 0)), ProjPoint(gf7, (1, 1, 0)), ProjPoint(gf7, (0, 0, 1))]
    assert not is_arc(points)
    profile = line_profile(points)
    assert max(profile.values()) == 3
    assert sorted(profile.values()) == [2, 2, 2, 3]


def test_incidence_tables():
    spec = field_create(3)
    inc = plane_incidence(spec)
    assert len(inc.points) == len(inc.lines) == 13
    assert all(len(pts) == 4 for pts in inc.points_on_line)
    on_point = Counter(pi for pts in inc.points_on_line for pi in pts)
    assert set(on_point.values()) == {4}
    assert inc.point_index[inc.points[5]] == 5
    assert plane_incidence(spec) is inc


def test_projection_from_a_point():
    spec = field_create(5)
    center = ProjPoint3(spec, (0, 0, 1, 0))
    screen = plane_through([
        ProjPoint3(spec, (1, 0, 0, 0)),
        ProjPoint3(spec, (0, 1, 0, 0)),
        ProjPoint3(spec, (0, 0, 0, 1)),
    ])
    assert screen.values == (0, 0, 1, 0)
    image = project_from_point(center, affine_point3(spec, 2, 3, 4), screen)
    assert screen.contains(image)
    assert image == ProjPoint3(spec, (2, 3, 0, 1))
    chart = plane_coords(screen)
    assert chart.dropped == 2
    assert chart.to_plane(image) == ProjPoint(spec, (2, 3, 1))
    with pytest.raises(GeometryError):
        chart.to_plane(affine_point3(spec, 2, 3, 4))
