"""Orders 2 and 3: the Pasch configuration and the three-parameter family."""

import logging
from itertools import permutations, product
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel

from curves import Conic, Cubic, contains, curves_through, is_irreducible_conic
from curves.linalg import SingularMatrix, apply_point, frame_matrix, inverse, normalize_matrix, null_space
from finite_field import FieldSpec
from geometry import ProjPoint, collinear
from nets import DualThreeNet, n3_family, net_to_json, pasch_points, verify_axioms
from .reports import NoEquivalence, NotOrder2, PreconditionFailed, TheoremViolated

logger = logging.getLogger(__name__)


def pasch_pencil(spec: FieldSpec, a: int, b: int, c: int, d: int) -> Cubic:
    """aX^2Y + bXY^2 + c(X^2Z - XZ^2) + d(Y^2Z - YZ^2) - (a+b)XYZ."""
    neg = spec.neg
    return Cubic.from_terms(spec, {
        (2, 1, 0): a,
        (1, 2, 0): b,
        (2, 0, 1): c,
        (1, 0, 2): neg(c),
        (0, 2, 1): d,
        (0, 1, 2): neg(d),
        (1, 1, 1): neg(spec.add(a, b)),
    })


def pencil_basis(spec: FieldSpec) -> List[Cubic]:
    return [pasch_pencil(spec, *(1 if i == j else 0 for j in range(4))) for i in range(4)]


class N2Report(BaseModel):
    projectivity: List[List[int]]
    images: Dict[str, List[List[List[int]]]]
    pencil_contains_all: bool
    passed: bool


def check_n2(net: DualThreeNet) -> N2Report:
    """
    Find a projectivity carrying an order-2 net onto the Pasch points.

    Ordered quadruples of the six points in general position are sent to
    e1, e2, e3 and (1:1:1); the first whose image is the whole Pasch set
    wins. Each member of the cubic pencil must then vanish on the image.

    Raises:
        NotOrder2: n != 2
        PreconditionFailed: not a dual 3-net
        NoEquivalence: no quadruple works
    """
    if net.n != 2:
        raise NotOrder2(f"n = {net.n}")
    if not verify_axioms(net).passed:
        raise PreconditionFailed(f"{net!r} is not a dual 3-net")
    spec = net.spec
    target = set(pasch_points(spec))
    points = list(net.points)
    g: Optional[List[List[int]]] = None
    if set(points) == target:
        g = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    else:
        for quad in permutations(points, 4):
            if any(collinear(triple) for triple in _triples(quad)):
                continue
            try:
                candidate = inverse(spec, frame_matrix(spec, *quad))
            except SingularMatrix:
                continue
            if {apply_point(spec, candidate, p) for p in points} == target:
                g = candidate
                break
    if g is None:
        raise NoEquivalence("no projectivity carries the net onto the Pasch points", net_to_json(net))

    images = {name: [apply_point(spec, g, p) for p in comp] for name, comp in net.components.items()}
    pencil_ok = all(contains(cubic, p) for cubic in pencil_basis(spec) for comp in images.values() for p in comp)
    if not pencil_ok:
        raise TheoremViolated("the Pasch image leaves the cubic pencil", net_to_json(net))
    return N2Report(
        projectivity=[list(row) for row in normalize_matrix(spec, g)],
        images={name: [p.to_json() for p in comp] for name, comp in images.items()},
        pencil_contains_all=True,
        passed=True,
    )


def _triples(quad) -> List[Tuple[ProjPoint, ProjPoint, ProjPoint]]:
    a, b, c, d = quad
    return [(a, b, c), (a, b, d), (a, c, d), (b, c, d)]


class N3Report(BaseModel):
    params: Dict[str, int]
    b_condition: bool
    c_condition: bool
    b_collinear: bool
    c_collinear: bool
    conic_through_a_c: Optional[Dict[str, Any]] = None
    conic_through_a_b: Optional[Dict[str, Any]] = None
    cubic_nullity: int
    passed: bool


def _ratio_sum(spec: FieldSpec, x: int, y: int, z: int) -> int:
    div, add = spec.div, spec.add
    return add(add(div(x, y), div(y, z)), div(z, x))


def _triangle_conic(spec: FieldSpec, points) -> Optional[Conic]:
    """An irreducible conic aXY + bYZ + cZX through the points, if one exists."""
    rows = [[spec.mul(x, y), spec.mul(y, z), spec.mul(z, x)] for x, y, z in (p.values for p in points)]
    basis = null_space(spec, rows, 3)
    for scalars in product(range(spec.order), repeat=len(basis)):
        vec = [0, 0, 0]
        for s, v in zip(scalars, basis):
            vec = [spec.add(u, spec.mul(s, w)) for u, w in zip(vec, v)]
        if not any(vec):
            continue
        conic = Conic.from_terms(spec, {(1, 1, 0): vec[0], (0, 1, 1): vec[1], (1, 0, 1): vec[2]})
        if is_irreducible_conic(conic):
            return conic
    return None


def check_n3(spec: FieldSpec, a: int, b: int, c: int) -> N3Report:
    """
    Check both collinearity conditions of the order-3 family.

    B is collinear iff a/c + c/b + b/a = 3, iff A and C lie on an
    irreducible conic through the coordinate triangle; the same holds for C
    with a/b + b/c + c/a = 3 and the conic through A and B.

    Raises:
        BadParameters: a, b, c not distinct and nonzero
        TheoremViolated: a biconditional fails
    """
    net = n3_family(spec, a, b, c)
    a, b, c = (net.provenance["params"][k] for k in "abc")
    three = spec.scalar_value(3)
    b_condition = _ratio_sum(spec, a, c, b) == three
    c_condition = _ratio_sum(spec, a, b, c) == three
    b_collinear, c_collinear = collinear(net.B), collinear(net.C)
    conic_ac = _triangle_conic(spec, net.C)
    conic_ab = _triangle_conic(spec, net.B)

    for name, others, conic in (("A and C", net.C, conic_ac), ("A and B", net.B, conic_ab)):
        cert = curves_through(net.A + others, 2)
        general = any(is_irreducible_conic(Conic(spec, tuple(v))) for v in cert.null_basis)
        if general != (conic is not None):
            raise TheoremViolated(f"the conic through {name} is not of triangle type", net_to_json(net))

    cubic_nullity = curves_through(net.points, 3).nullity
    passed = (
        b_condition == b_collinear == (conic_ac is not None)
        and c_condition == c_collinear == (conic_ab is not None)
        and cubic_nullity >= 1
    )
    if not passed:
        raise TheoremViolated(f"order-3 biconditional fails for {(a, b, c)}", net_to_json(net))
    logger.debug("n3 (%d, %d, %d): B collinear %s, C collinear %s", a, b, c, b_collinear, c_collinear)
    return N3Report(
        params={"a": a, "b": b, "c": c},
        b_condition=b_condition,
        c_condition=c_condition,
        b_collinear=b_collinear,
        c_collinear=c_collinear,
        conic_through_a_c=conic_ac.to_json() if conic_ac else None,
        conic_through_a_b=conic_ab.to_json() if conic_ab else None,
        cubic_nullity=cubic_nullity,
        passed=passed,
    )
