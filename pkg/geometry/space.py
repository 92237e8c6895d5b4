"""PG(3,q): points, planes, central projection and plane charts."""

import logging
from dataclasses import dataclass
from typing import Sequence, Tuple

from finite_field import FieldSpec
from .plane import GeometryError, Homogeneous, ProjPoint, dot

logger = logging.getLogger(__name__)


class PonCenter(GeometryError):
    """The projected point is the centre of projection."""


class CenterOnScreen(GeometryError):
    """The centre of projection lies on the screen plane."""


class ProjPoint3(Homogeneous):
    """Point (x:y:z:w) of PG(3,q)."""

    size = 4


class ProjPlane3(Homogeneous):
    """Plane [a:b:c:d] of PG(3,q), the zero set of aX + bY + cZ + dW."""

    size = 4

    def contains(self, point: ProjPoint3) -> bool:
        return dot(self.spec, self.values, point.values) == 0


def affine_point3(spec: FieldSpec, x: int, y: int, z: int) -> ProjPoint3:
    return ProjPoint3(spec, (x, y, z, 1))


def project_from_point(center: ProjPoint3, point: ProjPoint3, screen: ProjPlane3) -> ProjPoint3:
    """
    Intersect the line through center and point with the screen.

    Args:
        center: Centre of projection, off the screen
        point: Point to project, distinct from center
        screen: Target plane

    Returns:
        The image point on screen
    """
    if point == center:
        raise PonCenter(f"{point!r} is the centre")
    spec = center.spec
    s_c = dot(spec, screen.values, center.values)
    if s_c == 0:
        raise CenterOnScreen(f"{center!r} lies on {screen!r}")
    s_p = dot(spec, screen.values, point.values)
    image = tuple(
        spec.sub(spec.mul(s_p, c), spec.mul(s_c, x)) for c, x in zip(center.values, point.values)
    )
    return ProjPoint3(spec, image)


@dataclass(frozen=True)
class PlaneChart:
    """Linear identification of a plane of PG(3,q) with PG(2,q) by dropping one coordinate."""

    screen: ProjPlane3
    dropped: int

    def to_plane(self, point: ProjPoint3) -> ProjPoint:
        if not self.screen.contains(point):
            raise GeometryError(f"{point!r} is not on {self.screen!r}")
        kept = tuple(v for i, v in enumerate(point.values) if i != self.dropped)
        return ProjPoint(point.spec, kept)


def plane_coords(screen: ProjPlane3) -> PlaneChart:
    """Chart keeping the three smallest coordinate positions that stay invertible."""
    dropped = max(i for i, v in enumerate(screen.values) if v)
    return PlaneChart(screen, dropped)


def plane_through(points: Sequence[ProjPoint3]) -> ProjPlane3:
    """The plane spanned by three non-collinear points."""
    if len(points) != 3:
        raise GeometryError("a plane needs three points")
    spec = points[0].spec
    rows = [p.values for p in points]
    normal = []
    for j in range(4):
        minor = [[r[i] for i in range(4) if i != j] for r in rows]
        d = _det3(spec, minor)
        normal.append(d if j % 2 == 0 else spec.neg(d))
    return ProjPlane3(spec, tuple(normal))


def _det3(spec: FieldSpec, m: Sequence[Sequence[int]]) -> int:
    mul, add, sub = spec.mul, spec.add, spec.sub
    a = mul(m[0][0], sub(mul(m[1][1], m[2][2]), mul(m[1][2], m[2][1])))
    b = mul(m[0][1], sub(mul(m[1][0], m[2][2]), mul(m[1][2], m[2][0])))
    c = mul(m[0][2], sub(mul(m[1][0], m[2][1]), mul(m[1][1], m[2][0])))
    return add(sub(a, b), c)
