"""The chord-tangent group on a non-singular plane cubic."""

import logging
from itertools import combinations, product
from typing import Dict, Iterator, List, Optional, Tuple

from tqdm import tqdm

from curves import (
    Cubic,
    CurveError,
    NotOnCurve,
    contains,
    is_flex,
    is_nonsingular_cubic,
    rational_points,
    restrict_to_line,
    tangent_line,
    weierstrass_discriminant,
)
from finite_field import FieldSpec
from geometry import ProjPoint, collinear, line_basis
from .point_group import PointGroup, combine

logger = logging.getLogger(__name__)


class NotNonsingular(CurveError):
    """The cubic has a singular point over GF(q^2)."""


def third_intersection(curve: Cubic, p: ProjPoint, q: ProjPoint) -> ProjPoint:
    """
    Third point of the cubic on the line PQ, or on the tangent at P when P = Q.

    The cubic restricted to the line is a binary cubic with known roots at
    P and Q; the remaining linear factor gives the third point.
    """
    for point in (p, q):
        if not contains(curve, point):
            raise NotOnCurve(f"{point!r} is not on {curve!r}")
    spec = curve.spec
    if p != q:
        _, c1, c2, _ = restrict_to_line(curve, p.values, q.values)
        if c1 == 0 and c2 == 0:
            raise CurveError(f"the line through {p!r} and {q!r} lies on the cubic")
        return ProjPoint(spec, combine(spec, c2, p.values, spec.neg(c1), q.values))
    tangent = tangent_line(curve, p)
    first, second = line_basis(tangent)
    other = second if ProjPoint(spec, first) == p else first
    _, _, c2, c3 = restrict_to_line(curve, p.values, other)
    if c2 == 0 and c3 == 0:
        raise CurveError(f"the tangent at {p!r} lies on the cubic")
    return ProjPoint(spec, combine(spec, c3, p.values, spec.neg(c2), other))


def group_add(group: "CubicGroup", p: ProjPoint, q: ProjPoint) -> ProjPoint:
    """P + Q = third(O, third(P, Q))."""
    curve = group.curve
    return third_intersection(curve, group.identity, third_intersection(curve, p, q))


def enumerate_points(curve: Cubic) -> List[ProjPoint]:
    """Rational points in ascending order; an empty curve is an error."""
    points = rational_points(curve)
    if not points:
        raise CurveError(f"{curve!r} has no rational points")
    return points


def flexes(curve: Cubic, points: Optional[List[ProjPoint]] = None) -> List[ProjPoint]:
    return [p for p in (points or enumerate_points(curve)) if is_flex(curve, p)]


class CubicGroup(PointGroup):
    """
    Rational points of a non-singular cubic with the chord-tangent law.

    The identity defaults to the first flex in point order; with
    ``require_flex=False`` any rational point may be passed, and the
    first point is used when the curve has no flex.
    """

    def __init__(
        self,
        curve: Cubic,
        identity: Optional[ProjPoint] = None,
        require_flex: bool = True,
        check_nonsingular: bool = True,
    ):
        if check_nonsingular and not is_nonsingular_cubic(curve):
            raise NotNonsingular(f"{curve!r} is singular")
        self.curve = curve
        self.points = enumerate_points(curve)
        if identity is None:
            found = flexes(curve, self.points)
            if found:
                identity = found[0]
            elif require_flex:
                raise CurveError(f"{curve!r} has no rational flex")
            else:
                identity = self.points[0]
                logger.info("no rational flex on %r; identity at %r", curve, identity)
        elif not contains(curve, identity):
            raise NotOnCurve(f"{identity!r} is not on {curve!r}")
        elif require_flex and not is_flex(curve, identity):
            raise CurveError(f"{identity!r} is not a flex")
        self.identity = identity
        self.zero_prime = third_intersection(curve, identity, identity)

    def _add(self, p: ProjPoint, q: ProjPoint) -> ProjPoint:
        return group_add(self, p, q)

    @property
    def zero_prime_index(self) -> int:
        return self.index[self.zero_prime]

    def check_collinearity_law(self, progress: bool = False) -> Dict[str, int]:
        """
        Count distinct triples where collinearity and P + Q + R = 0' disagree.

        Returns:
            Dict with the number of triples checked, collinear triples and mismatches
        """
        z = self.zero_prime_index
        checked = collinear_count = mismatches = 0
        triples = combinations(range(self.order), 3)
        for i, j, k in tqdm(triples, desc="collinearity law", disable=not progress):
            on_line = collinear([self.points[i], self.points[j], self.points[k]])
            sums_to_zero = self.add_index(self.add_index(i, j), k) == z
            checked += 1
            collinear_count += on_line
            mismatches += on_line != sums_to_zero
        return {"triples": checked, "collinear": collinear_count, "mismatches": mismatches}

    def __repr__(self) -> str:
        return f"CubicGroup({self.curve!r}, O={self.identity!r}, order={self.order})"


def weierstrass_curves(spec: FieldSpec) -> Iterator[Tuple[Tuple[int, ...], Cubic]]:
    """Non-singular Weierstrass cubics, coefficient tuples (a1, a2, a3, a4, a6) in value order."""
    q = spec.order
    for coeffs in product(range(q), repeat=5):
        if weierstrass_discriminant(spec, *coeffs):
            yield coeffs, Cubic.weierstrass(spec, *coeffs)


def find_cubic_group(spec: FieldSpec, order: int, cyclic: bool = True) -> CubicGroup:
    """First non-singular Weierstrass cubic whose group has the requested order."""
    for coeffs, curve in weierstrass_curves(spec):
        if len(rational_points(curve)) != order:
            continue
        group = CubicGroup(curve, check_nonsingular=False)
        if not cyclic or group.is_cyclic():
            logger.info("cubic %s over %s has a group of order %d", coeffs, spec, order)
            return group
    raise CurveError(f"no Weierstrass cubic over {spec} with {order} points")
