"""Points and lines of PG(2,q) in normalised homogeneous coordinates."""

from dataclasses import dataclass
from typing import ClassVar, Iterable, List, Sequence, Tuple, Union

from finite_field import FieldElement, FieldSpec

Coordinate = Union[int, FieldElement]


class GeometryError(ValueError):
    """Base class for degenerate geometric input."""


class ZeroVector(GeometryError):
    """All homogeneous coordinates vanish."""


class EqualPoints(GeometryError):
    """Two equal points do not span a line."""


class EqualLines(GeometryError):
    """Two equal lines do not meet in a single point."""


def _value(spec: FieldSpec, c: Coordinate) -> int:
    if isinstance(c, FieldElement):
        return spec.element(c).value
    c = int(c)
    if 0 <= c < spec.order:
        return c
    return spec.element(c).value


def normalise(spec: FieldSpec, values: Sequence[int]) -> Tuple[int, ...]:
    """Scale a vector so that its first nonzero entry is 1."""
    for v in values:
        if v:
            if v == 1:
                return tuple(values)
            inv = spec.inv(v)
            return tuple(spec.mul(inv, x) for x in values)
    raise ZeroVector(f"zero vector over {spec}")


def dot(spec: FieldSpec, u: Sequence[int], v: Sequence[int]) -> int:
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = spec.add(acc, spec.mul(a, b))
    return acc


def cross(spec: FieldSpec, u: Sequence[int], v: Sequence[int]) -> Tuple[int, int, int]:
    mul, sub = spec.mul, spec.sub
    return (
        sub(mul(u[1], v[2]), mul(u[2], v[1])),
        sub(mul(u[2], v[0]), mul(u[0], v[2])),
        sub(mul(u[0], v[1]), mul(u[1], v[0])),
    )


@dataclass(frozen=True)
class Homogeneous:
    """
    Normalised homogeneous vector over a finite field.

    Coordinates are stored as packed field values; plain ints passed to the
    constructor are packed values as well, FieldElements are unwrapped.
    """

    spec: FieldSpec
    values: Tuple[int, ...]
    size: ClassVar[int] = 3

    def __post_init__(self):
        values = tuple(_value(self.spec, c) for c in self.values)
        if len(values) != self.size:
            raise GeometryError(f"{type(self).__name__} needs {self.size} coordinates, got {len(values)}")
        object.__setattr__(self, "values", normalise(self.spec, values))

    @classmethod
    def of(cls, spec: FieldSpec, *coords: Coordinate):
        return cls(spec, tuple(coords))

    @property
    def coords(self) -> Tuple[FieldElement, ...]:
        return tuple(FieldElement(self.spec, v) for v in self.values)

    def __lt__(self, other: "Homogeneous") -> bool:
        return self.values < other.values

    def __le__(self, other: "Homogeneous") -> bool:
        return self.values <= other.values

    def __repr__(self) -> str:
        return f"{type(self).__name__}({':'.join(str(v) for v in self.values)})"

    def to_json(self) -> List[List[int]]:
        return [list(c.coeffs) for c in self.coords]

    @classmethod
    def from_json(cls, spec: FieldSpec, data: Sequence[Sequence[int]]):
        return cls(spec, tuple(spec.element(list(c)).value for c in data))


class ProjPoint(Homogeneous):
    """Point (x:y:z) of PG(2,q)."""

    def is_affine(self) -> bool:
        return self.values[2] != 0

    def affine(self) -> Tuple[FieldElement, FieldElement]:
        """Affine coordinates (x/z, y/z)."""
        x, y, z = self.values
        if z == 0:
            raise GeometryError(f"{self!r} is on the line at infinity")
        spec = self.spec
        return FieldElement(spec, spec.div(x, z)), FieldElement(spec, spec.div(y, z))


class ProjLine(Homogeneous):
    """Line [u:v:w] of PG(2,q), the zero set of uX + vY + wZ."""

    def contains(self, point: ProjPoint) -> bool:
        return dot(self.spec, self.values, point.values) == 0

    def to_json(self) -> dict:
        return {"line": super().to_json()}


def affine_point(spec: FieldSpec, x: Coordinate, y: Coordinate) -> ProjPoint:
    return ProjPoint(spec, (x, y, 1))


def line_through(p: ProjPoint, q: ProjPoint) -> ProjLine:
    if p == q:
        raise EqualPoints(f"{p!r} twice")
    return ProjLine(p.spec, cross(p.spec, p.values, q.values))


def meet(l: ProjLine, m: ProjLine) -> ProjPoint:
    if l == m:
        raise EqualLines(f"{l!r} twice")
    return ProjPoint(l.spec, cross(l.spec, l.values, m.values))


def incident(point: ProjPoint, line: ProjLine) -> bool:
    return line.contains(point)


def collinear(points: Iterable[ProjPoint]) -> bool:
    """True iff all points lie on one line."""
    points = list(points)
    if not points:
        raise GeometryError("collinearity of an empty set")
    first = points[0]
    second = next((p for p in points if p != first), None)
    if second is None:
        return True
    line = line_through(first, second)
    return all(line.contains(p) for p in points)


def line_basis(line: ProjLine) -> Tuple[Tuple[int, int, int], Tuple[int, int, int]]:
    """Two distinct points spanning a line, as raw vectors."""
    spec = line.spec
    u, v, w = line.values
    if u:
        return (spec.neg(v), u, 0), (spec.neg(w), 0, u)
    if v:
        return (1, 0, 0), (0, spec.neg(w), v)
    return (1, 0, 0), (0, 1, 0)


def points_on(line: ProjLine) -> List[ProjPoint]:
    """The q+1 points of a line, ascending."""
    spec = line.spec
    first, second = line_basis(line)
    out = [ProjPoint(spec, first)]
    for t in range(spec.order):
        out.append(ProjPoint(spec, tuple(spec.add(spec.mul(t, a), b) for a, b in zip(first, second))))
    return sorted(out)


def _vectors(spec: FieldSpec) -> List[Tuple[int, int, int]]:
    q = spec.order
    out = [(0, 0, 1)]
    out.extend((0, 1, z) for z in range(q))
    out.extend((1, y, z) for y in range(q) for z in range(q))
    return out


def points_of_plane(spec: FieldSpec) -> List[ProjPoint]:
    """All q^2+q+1 points in ascending order."""
    return [ProjPoint(spec, v) for v in _vectors(spec)]


def lines_of_plane(spec: FieldSpec) -> List[ProjLine]:
    return [ProjLine(spec, v) for v in _vectors(spec)]
