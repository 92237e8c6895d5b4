import json

import pytest

from curves import contains
from finite_field import field_create
from geometry import ProjPoint, collinear, is_arc
from nets import (
    BadParameters,
    ConditionViolated,
    DegenerateCosets,
    DualThreeNet,
    LatinSquare,
    NetError,
    NetFormatError,
    NotASubgroup,
    SizeMismatch,
    classify_regularity,
    construct_conic_line,
    construct_projection,
    dumps,
    expected_direction,
    isotopy_class,
    latin_square_of,
    load_net,
    model_conic,
    n3_family,
    net_from_json,
    net_to_json,
    pasch_net,
    pasch_partitions,
    save_net,
    trivial_net,
    verify_axioms,
)


def _points(spec, *vectors):
    return {ProjPoint(spec, v) for v in vectors}


def test_trivial_net(gf7):
    net = trivial_net(gf7)
    assert net.n == 1
    assert verify_axioms(net).passed
    assert classify_regularity(net).kind == "regular"


@pytest.mark.parametrize("p", [3, 5, 7])
def test_pasch_default_partition(p):
    spec = field_create(p)
    net = pasch_net(spec)
    assert set(net.A) == _points(spec, (0, 0, 1), (1, 1, 1))
    assert set(net.B) == _points(spec, (0, 1, 0), (1, 0, 0))
    assert set(net.C) == _points(spec, (1, 0, 1), (0, 1, 1))
    report = verify_axioms(net)
    assert report.passed
    assert report.lines_checked == 4
    # two points are always collinear
    assert classify_regularity(net).kind == "regular"


def test_pasch_partitions_are_all_nets():
    spec = field_create(5)
    options = pasch_partitions(spec)
    assert options
    for i in range(len(options)):
        assert verify_axioms(pasch_net(spec, i)).passed
    with pytest.raises(BadParameters):
        pasch_net(spec, len(options))


def test_n3_family(gf7):
    net = n3_family(gf7, 1, 3, 2)
    assert verify_axioms(net).passed
    assert collinear(net.B)
    assert not collinear(net.C)
    regularity = classify_regularity(net)
    assert regularity.kind == "irregular_one_line"
    assert regularity.collinear_components == ["B"]
    generic = n3_family(gf7, 1, 2, 4)
    assert classify_regularity(generic).kind == "completely_irregular"
    with pytest.raises(BadParameters):
        n3_family(gf7, 1, 1, 2)
    with pytest.raises(BadParameters):
        n3_family(gf7, 0, 1, 2)


def test_hyperbola_net(hyperbola_11_5):
    net = hyperbola_11_5
    assert net.n == 5
    assert net.provenance["family"] == "hyperbola"
    assert all(p.values[2] == 0 for p in net.C)
    assert classify_regularity(net).kind == "irregular_one_line"
    conic = model_conic(net.spec, "hyperbola")
    assert all(contains(conic, p) for p in net.A + net.B)


@pytest.mark.parametrize("kind, p, k, n", [
    ("parabola", 2, 4, 4),
    ("parabola", 3, 2, 3),
    ("hyperbola", 13, 1, 4),
    ("circle", 11, 1, 6),
    ("circle", 2, 3, 3),
    ("lines_mult", 7, 1, 3),
    ("lines_add", 2, 2, 4),
    ("lines_add", 7, 1, 7),
])
def test_conic_line_kinds(kind, p, k, n):
    spec = field_create(p, k)
    net = construct_conic_line(spec, kind, n)
    assert net.n == n
    assert verify_axioms(net).passed
    assert collinear(net.C)
    conic = model_conic(spec, kind)
    assert all(contains(conic, pt) for pt in net.A + net.B)


def test_slopes_follow_the_model_formula(gf7):
    net = construct_conic_line(gf7, "lines_add", 7)
    for a in range(7):
        for b in range(7):
            slope = expected_direction(gf7, "lines_add", a, b)
            assert ProjPoint(gf7, (1, slope, 0)) in net.C


def test_line_kinds_are_regular():
    net = construct_conic_line(field_create(2, 2), "lines_add", 4)
    assert classify_regularity(net).kind == "regular"
    net = construct_conic_line(field_create(7), "lines_mult", 3)
    assert classify_regularity(net).kind == "regular"


def test_conic_line_errors(gf7):
    with pytest.raises(NotASubgroup):
        construct_conic_line(gf7, "hyperbola", 4)
    with pytest.raises(NotASubgroup):
        construct_conic_line(gf7, "parabola", 7 * 7)
    with pytest.raises(DegenerateCosets):
        construct_conic_line(gf7, "hyperbola", 3, shift=1)
    with pytest.raises(BadParameters):
        construct_conic_line(gf7, "ellipse", 3)


def test_components_are_sorted_and_sized(gf7):
    a, b, c = ProjPoint(gf7, (0, 0, 1)), ProjPoint(gf7, (0, 1, 0)), ProjPoint(gf7, (1, 0, 0))
    net = DualThreeNet(gf7, [a, a], [b], [c])
    assert net.A == (a,)
    with pytest.raises(SizeMismatch):
        DualThreeNet(gf7, [a], [b, c], [c])
    with pytest.raises(NetError):
        DualThreeNet(gf7, [a], [b], [ProjPoint(field_create(5), (1, 0, 0))])


def test_axiom_failure_has_a_witness():
    spec = field_create(5)
    good = pasch_net(spec)
    broken = DualThreeNet(spec, good.A, good.B, [good.C[0], ProjPoint(spec, (1, 2, 1))])
    report = verify_axioms(broken)
    assert not report.passed
    assert report.witness["counts"]["C"] != 1
    shared = DualThreeNet(spec, good.A, good.A, good.C)
    report = verify_axioms(shared)
    assert not report.passed
    assert "share" in report.failure


def test_axioms_with_workers_agree(hyperbola_11_5):
    assert verify_axioms(hyperbola_11_5, jobs=2) == verify_axioms(hyperbola_11_5)


def test_relabel_keeps_the_net(hyperbola_11_5):
    net = hyperbola_11_5.relabel("CAB")
    assert net.A == hyperbola_11_5.C
    assert verify_axioms(net).passed


def test_latin_square_classes(hyperbola_13_4, parabola_16_4):
    assert isotopy_class(latin_square_of(hyperbola_13_4)) == "cyclic"
    assert isotopy_class(latin_square_of(parabola_16_4)) == "klein"
    assert latin_square_of(parabola_16_4).intercalates() == 12


def test_latin_square_normal_form():
    square = LatinSquare(((1, 0, 2), (2, 1, 0), (0, 2, 1)))
    normal = square.normalised()
    assert normal.rows[0] == (0, 1, 2)
    assert [row[0] for row in normal.rows] == [0, 1, 2]
    with pytest.raises(NetError):
        LatinSquare(((0, 1), (0, 1)))


def test_net_file_round_trip(tmp_path, hyperbola_11_5):
    path = tmp_path / "hyperbola.json"
    save_net(hyperbola_11_5, path)
    loaded = load_net(path)
    assert loaded == hyperbola_11_5
    assert loaded.provenance == hyperbola_11_5.provenance
    assert json.loads(dumps(loaded)) == net_to_json(hyperbola_11_5)


def test_net_file_errors(tmp_path):
    with pytest.raises(NetFormatError):
        load_net(tmp_path / "missing.json")
    with pytest.raises(NetFormatError):
        net_from_json({"field": {"p": 4, "k": 1, "modulus": [0, 1]}, "A": [], "B": [], "C": []})
    with pytest.raises(NetFormatError):
        net_from_json({"A": []})


@pytest.mark.parametrize("r, q", [(3, 27), (4, 16), (4, 81)])
def test_projection_conditions(r, q):
    with pytest.raises(ConditionViolated):
        construct_projection(r, q)


@pytest.mark.slow
def test_projection_net():
    net = construct_projection(4, 64)
    assert net.n == 16
    assert verify_axioms(net).passed
    assert collinear(net.C)
    assert not collinear(net.A)
    assert not is_arc(net.A)
    assert net.provenance["family"] == "projection"
