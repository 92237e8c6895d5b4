"""Constructors for the dual 3-net families: small orders, cubic cosets and conic models."""

import logging
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from curve_groups import CosetTriple, CubicGroup, check_triple
from curves import Conic
from finite_field import FieldSpec, embed_subfield, field_create
from geometry import ProjLine, ProjPoint, affine_point, line_through, meet
from .net import DualThreeNet, NetError, verify_axioms

logger = logging.getLogger(__name__)

LINE_AT_INFINITY = (0, 0, 1)
CONIC_KINDS = ("parabola", "hyperbola", "circle", "lines_mult", "lines_add")


class BadParameters(NetError):
    """Family parameters outside their admissible range."""


class NotASubgroup(NetError):
    """No subgroup of the requested order exists."""


class DegenerateCosets(NetError):
    """The chosen cosets do not give n directions."""


def _verified(net: DualThreeNet) -> DualThreeNet:
    report = verify_axioms(net)
    if not report.passed:
        raise RuntimeError(f"constructed {net!r} fails the axioms: {report.failure}")
    return net


def trivial_net(spec: FieldSpec, points: Optional[Sequence[ProjPoint]] = None) -> DualThreeNet:
    """Order 1: three distinct collinear points, one per component."""
    if points is None:
        points = [ProjPoint(spec, (0, 0, 1)), ProjPoint(spec, (0, 1, 0)), ProjPoint(spec, (0, 1, 1))]
    a, b, c = points
    return _verified(DualThreeNet(spec, (a,), (b,), (c,), {"family": "trivial", "params": {}}))


def pasch_points(spec: FieldSpec) -> List[ProjPoint]:
    """(0,0,1), (0,1,0), (1,0,0), (1,1,1), (1,0,1), (0,1,1) in this order."""
    vectors = [(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1), (1, 0, 1), (0, 1, 1)]
    return [ProjPoint(spec, v) for v in vectors]


def pasch_partitions(spec: FieldSpec) -> List[Tuple[Tuple[int, int], Tuple[int, int], Tuple[int, int]]]:
    """Every split of the six Pasch points into components A, B, C that is a dual 3-net."""
    points = pasch_points(spec)
    found = []
    for a in combinations(range(6), 2):
        rest = [i for i in range(6) if i not in a]
        for b in combinations(rest, 2):
            c = tuple(i for i in rest if i not in b)
            net = DualThreeNet(spec, [points[i] for i in a], [points[i] for i in b], [points[i] for i in c])
            if verify_axioms(net).passed:
                found.append((a, b, c))
    return found


def pasch_net(spec: FieldSpec, partition: int = 0) -> DualThreeNet:
    """
    The Pasch configuration as a dual 3-net of order 2.

    The default partition pairs each point with the one it shares no
    configuration line with: {(0:0:1),(1:1:1)}, {(0:1:0),(1:0:0)},
    {(1:0:1),(0:1:1)}.
    """
    options = pasch_partitions(spec)
    if not 0 <= partition < len(options):
        raise BadParameters(f"partition {partition} out of range 0..{len(options) - 1}")
    points = pasch_points(spec)
    a, b, c = options[partition]
    return DualThreeNet(
        spec,
        [points[i] for i in a],
        [points[i] for i in b],
        [points[i] for i in c],
        {"family": "pasch", "params": {"partition": partition}},
    )


def n3_family(spec: FieldSpec, a: int, b: int, c: int) -> DualThreeNet:
    """
    Order-3 net with A the coordinate triangle,
    B = {(a:1/b:1), (b:1/c:1), (c:1/a:1)} and C = {(a:1/c:1), (b:1/a:1), (c:1/b:1)}.

    Args:
        a, b, c: Pairwise distinct nonzero packed values
    """
    a, b, c = (spec.element(x).value for x in (a, b, c))
    if len({a, b, c}) != 3 or 0 in (a, b, c):
        raise BadParameters(f"need three distinct nonzero elements, got {a}, {b}, {c}")
    inv = spec.inv
    A = [ProjPoint(spec, (1, 0, 0)), ProjPoint(spec, (0, 1, 0)), ProjPoint(spec, (0, 0, 1))]
    B = [affine_point(spec, a, inv(b)), affine_point(spec, b, inv(c)), affine_point(spec, c, inv(a))]
    C = [affine_point(spec, a, inv(c)), affine_point(spec, b, inv(a)), affine_point(spec, c, inv(b))]
    return _verified(DualThreeNet(spec, A, B, C, {"family": "n3", "params": {"a": a, "b": b, "c": c}}))


def construct_subgroup_type(group, triple: CosetTriple) -> DualThreeNet:
    """
    Net from three cosets of a subgroup.

    On a cubic the components are a + H, b + H, c + H. On a conic-line
    group they are a + H, b + H and the points the chords between them
    cut out on the removed line.
    """
    if triple.group is not group:
        raise BadParameters("the coset triple belongs to another group")
    check_triple(triple)
    spec = group.spec
    a_h, b_h, c_h = triple.cosets
    if isinstance(group, CubicGroup):
        params = {
            "curve": group.curve.to_json(),
            "identity": group.identity.to_json(),
            "subgroup_order": len(triple.subgroup),
            "a": triple.a.to_json(),
            "b": triple.b.to_json(),
            "c": triple.c.to_json(),
        }
        return _verified(DualThreeNet(spec, a_h, b_h, c_h, {"family": "cubic_cosets", "params": params}))
    directions = sorted({meet(line_through(x, y), group.ell) for x in a_h for y in b_h})
    if len(directions) != len(a_h):
        raise DegenerateCosets(f"{len(directions)} points on the line for cosets of size {len(a_h)}")
    params = {
        "conic": group.conic.to_json(),
        "ell": group.ell.to_json(),
        "identity": group.identity.to_json(),
        "subgroup_order": len(triple.subgroup),
        "a": triple.a.to_json(),
        "b": triple.b.to_json(),
    }
    return _verified(DualThreeNet(spec, a_h, b_h, directions, {"family": "conic_line_cosets", "params": params}))


# ----------------------------------------------------------------------
# conic and line-pair models with C on the line at infinity


def multiplicative_subgroup(spec: FieldSpec, n: int) -> List[int]:
    """The unique subgroup of GF(q)* of order n, ascending."""
    q = spec.order
    if n < 1 or (q - 1) % n:
        raise NotASubgroup(f"GF({q})* has no subgroup of order {n}")
    g = spec.pow(spec.primitive_value, (q - 1) // n)
    return sorted(spec.pow(g, i) for i in range(n))


def additive_subgroup(spec: FieldSpec, n: int, generators: Optional[Sequence[int]] = None) -> List[int]:
    """
    The F_p-span of the generators, by default the first j powers of the
    primitive element where n = p^j.
    """
    p = spec.p
    j = 0
    while p ** j < n:
        j += 1
    if p ** j != n or j > spec.k:
        raise NotASubgroup(f"GF({spec.order}) has no additive subgroup of order {n}")
    if generators is None:
        generators = [spec.pow(spec.primitive_value, i) for i in range(j)]
    span = {0}
    for g in generators:
        span = {spec.add(s, spec.mul(spec.scalar_value(c), g)) for s in span for c in range(p)}
    if len(span) != n:
        raise NotASubgroup(f"generators {list(generators)} span {len(span)} elements, not {n}")
    return sorted(span)


def _first_outside(candidates, subgroup) -> int:
    members = set(subgroup)
    for x in candidates:
        if x not in members:
            return x
    raise DegenerateCosets("the subgroup has no second coset")


def _direction_set(spec: FieldSpec, A: Sequence[ProjPoint], B: Sequence[ProjPoint]) -> List[ProjPoint]:
    infinity = ProjLine(spec, LINE_AT_INFINITY)
    return sorted({meet(line_through(a, b), infinity) for a in A for b in B})


def circle_model(spec: FieldSpec):
    """
    GF(q^2) as the affine plane over GF(q) with basis (1, w).

    Returns:
        (ext, embedding, w, to_affine, conic) where to_affine maps a value of
        GF(q^2) to its pair of GF(q) coordinates and conic is the norm form
        X^2 + T XY + N Y^2 - Z^2 of the unit circle.
    """
    ext = field_create(spec.p, 2 * spec.k)
    phi = embed_subfield(spec, ext)
    q = spec.order
    w = next(x for x in range(ext.order) if not phi.contains(x))
    w_conj = ext.pow(w, q)
    denom = ext.inv(ext.sub(w, w_conj))

    def to_affine(u: int) -> Tuple[int, int]:
        y = ext.mul(ext.sub(u, ext.pow(u, q)), denom)
        x = ext.sub(u, ext.mul(y, w))
        return phi.preimage(x).value, phi.preimage(y).value

    trace = phi.preimage(ext.add(w, w_conj)).value
    norm = phi.preimage(ext.mul(w, w_conj)).value
    conic = Conic.from_terms(spec, {(2, 0, 0): 1, (1, 1, 0): trace, (0, 2, 0): norm, (0, 0, 2): spec.neg(1)})
    return ext, phi, w, to_affine, conic


def construct_conic_line(
    spec: FieldSpec,
    kind: str,
    subgroup_order: int,
    shift: Optional[int] = None,
    generators: Optional[Sequence[int]] = None,
) -> DualThreeNet:
    """
    Net with C the n directions on Z = 0 and A, B two cosets of a subgroup G.

    Kinds:
        parabola: A = {(a, a^2)}, directions a + b, G additive
        hyperbola: A = {(a, 1/a)}, directions -1/ab, G multiplicative
        circle: A, B on the norm-one circle of GF(q^2), directions -1/ab
        lines_mult: A on Y = 0, B on X = 0, directions -b/a, G multiplicative
        lines_add: A on X = 0, B on X = 1, directions b - a, G additive

    Args:
        spec: The plane field GF(q)
        kind: One of the kinds above
        subgroup_order: n = |G|
        shift: Packed value of the coset representative of B (of GF(q^2)
            for the circle); defaults to the first element outside G for
            the conics and to the identity of G for the line pairs
        generators: Additive generators of G for parabola and lines_add

    Returns:
        DualThreeNet with provenance recording kind, n and the shift
    """
    if kind not in CONIC_KINDS:
        raise BadParameters(f"unknown kind {kind!r}; expected one of {', '.join(CONIC_KINDS)}")
    n = subgroup_order
    q = spec.order

    if kind == "circle":
        ext, phi, _, to_affine, _ = circle_model(spec)
        if n < 1 or (q + 1) % n:
            raise NotASubgroup(f"the circle group of order {q + 1} has no subgroup of order {n}")
        h = ext.pow(ext.primitive_value, (q - 1) * ((q + 1) // n))
        circle = sorted(ext.pow(ext.primitive_value, (q - 1) * i) for i in range(q + 1))
        group = sorted(ext.pow(h, i) for i in range(n))
        beta = _first_outside(circle, group) if shift is None else shift
        if beta not in circle or beta in group:
            raise DegenerateCosets(f"shift {beta} is not on the circle outside G")
        A = [affine_point(spec, *to_affine(u)) for u in group]
        B = [affine_point(spec, *to_affine(ext.mul(beta, u))) for u in group]
    elif kind in ("hyperbola", "lines_mult"):
        group = multiplicative_subgroup(spec, n)
        nonzero = range(1, q)
        if shift is None:
            beta = _first_outside(nonzero, group) if kind == "hyperbola" else 1
        else:
            beta = shift
        if beta == 0 or (kind == "hyperbola" and beta in group):
            raise DegenerateCosets(f"shift {beta} does not give a second coset")
        coset = [spec.mul(beta, g) for g in group]
        if kind == "hyperbola":
            A = [affine_point(spec, a, spec.inv(a)) for a in group]
            B = [affine_point(spec, b, spec.inv(b)) for b in coset]
        else:
            A = [affine_point(spec, a, 0) for a in group]
            B = [affine_point(spec, 0, b) for b in coset]
    else:
        group = additive_subgroup(spec, n, generators)
        if shift is None:
            beta = _first_outside(range(q), group) if kind == "parabola" else 0
        else:
            beta = shift
        if kind == "parabola" and beta in group:
            raise DegenerateCosets(f"shift {beta} does not give a second coset")
        coset = [spec.add(beta, g) for g in group]
        if kind == "parabola":
            A = [affine_point(spec, a, spec.mul(a, a)) for a in group]
            B = [affine_point(spec, b, spec.mul(b, b)) for b in coset]
        else:
            A = [affine_point(spec, 0, a) for a in group]
            B = [affine_point(spec, 1, b) for b in coset]

    C = _direction_set(spec, A, B)
    if len(C) != n:
        raise DegenerateCosets(f"{kind}: {len(C)} directions for n = {n}")
    params: Dict[str, object] = {"subgroup_order": n, "shift": beta}
    if generators is not None:
        params["generators"] = list(generators)
    logger.info("constructed %s net of order %d over GF(%d)", kind, n, q)
    return _verified(DualThreeNet(spec, A, B, C, {"family": kind, "params": params}))


def model_conic(spec: FieldSpec, kind: str) -> Optional[Conic]:
    """The conic carrying A and B in each model (a line pair for the two line kinds)."""
    if kind == "parabola":
        return Conic.from_terms(spec, {(2, 0, 0): 1, (0, 1, 1): spec.neg(1)})
    if kind == "hyperbola":
        return Conic.from_terms(spec, {(1, 1, 0): 1, (0, 0, 2): spec.neg(1)})
    if kind == "circle":
        return circle_model(spec)[4]
    if kind == "lines_mult":
        return Conic.from_terms(spec, {(1, 1, 0): 1})
    if kind == "lines_add":
        return Conic.from_terms(spec, {(2, 0, 0): 1, (1, 0, 1): spec.neg(1)})
    raise BadParameters(f"unknown kind {kind!r}")


def expected_direction(spec: FieldSpec, kind: str, a: int, b: int) -> int:
    """Slope of the line joining the points labelled a in A and b in B."""
    if kind == "parabola":
        return spec.add(a, b)
    if kind == "hyperbola":
        return spec.neg(spec.inv(spec.mul(a, b)))
    if kind == "lines_mult":
        return spec.neg(spec.div(b, a))
    if kind == "lines_add":
        return spec.sub(b, a)
    raise BadParameters(f"no slope formula over GF(q) for {kind!r}")
