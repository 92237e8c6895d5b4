"""The group on the points of an irreducible conic off a line."""

from typing import Optional

from curves import Conic, CurveError, contains, is_irreducible_conic, rational_points, restrict_to_line, tangent_line
from geometry import ProjLine, ProjPoint, line_through, meet
from .point_group import PointGroup, combine


class NotOnConic(CurveError):
    """The point is not on the conic."""


class PointOnEll(CurveError):
    """The point lies on the line removed from the conic."""


def conic_line_add(group: "ConicLineGroup", a: ProjPoint, b: ProjPoint) -> ProjPoint:
    """
    Chord (or tangent) through a and b meets the line in P; the result is
    the second point of the conic on OP, or O when OP touches the conic at O.
    """
    conic, ell, o = group.conic, group.ell, group.identity
    for point in (a, b):
        if not contains(conic, point):
            raise NotOnConic(f"{point!r} is not on {conic!r}")
        if ell.contains(point):
            raise PointOnEll(f"{point!r} lies on {ell!r}")
    chord = line_through(a, b) if a != b else tangent_line(conic, a)
    p = meet(chord, ell)
    _, c1, c2 = restrict_to_line(conic, o.values, p.values)
    spec = conic.spec
    return ProjPoint(spec, combine(spec, c2, o.values, spec.neg(c1), p.values))


class ConicLineGroup(PointGroup):
    """Abelian group on the conic points not on ``ell``, with identity O."""

    def __init__(self, conic: Conic, ell: ProjLine, identity: Optional[ProjPoint] = None):
        if not is_irreducible_conic(conic):
            raise CurveError(f"{conic!r} is not irreducible")
        self.conic = conic
        self.ell = ell
        self.points = [p for p in rational_points(conic) if not ell.contains(p)]
        if identity is None:
            identity = self.points[0]
        if not contains(conic, identity):
            raise NotOnConic(f"{identity!r} is not on {conic!r}")
        if ell.contains(identity):
            raise PointOnEll(f"{identity!r} lies on {ell!r}")
        self.identity = identity

    def _add(self, a: ProjPoint, b: ProjPoint) -> ProjPoint:
        return conic_line_add(self, a, b)

    def __repr__(self) -> str:
        return f"ConicLineGroup({self.conic!r}, ell={self.ell!r}, O={self.identity!r}, order={self.order})"
