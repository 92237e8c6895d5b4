"""Plane conics and cubics over GF(q) as normalised coefficient vectors."""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import ClassVar, Dict, Iterable, List, Sequence, Tuple, Union

import numpy as np

from finite_field import FieldElement, FieldSpec, embed_subfield, field_create
from geometry import ProjLine, ProjPoint, ZeroVector, line_basis, lines_of_plane, normalise, points_of_plane
from .linalg import RankCertificate, rank_certificate

logger = logging.getLogger(__name__)

Monomial = Tuple[int, int, int]

CONIC_MONOMIALS: Tuple[Monomial, ...] = ((2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (0, 1, 1), (1, 0, 1))
CUBIC_MONOMIALS: Tuple[Monomial, ...] = (
    (3, 0, 0), (0, 3, 0), (0, 0, 3),
    (2, 1, 0), (2, 0, 1), (1, 2, 0), (0, 2, 1), (1, 0, 2), (0, 1, 2),
    (1, 1, 1),
)


class CurveError(ValueError):
    """Base class for curve errors."""


class NotOnCurve(CurveError):
    """The point does not lie on the curve."""


class SingularPoint(CurveError):
    """All partial derivatives vanish at the point."""


def monomials(degree: int) -> Tuple[Monomial, ...]:
    if degree == 2:
        return CONIC_MONOMIALS
    if degree == 3:
        return CUBIC_MONOMIALS
    raise CurveError(f"unsupported degree {degree}")


def _value(spec: FieldSpec, c: Union[int, FieldElement]) -> int:
    return spec.element(c).value if isinstance(c, FieldElement) else spec.element(int(c)).value


@dataclass(frozen=True)
class PlaneCurve:
    """Zero set of a ternary form in the fixed monomial order of its degree."""

    spec: FieldSpec
    coeffs: Tuple[int, ...]
    degree: ClassVar[int] = 0

    def __post_init__(self):
        values = tuple(_value(self.spec, c) for c in self.coeffs)
        if len(values) != len(self.monomials):
            raise CurveError(f"{type(self).__name__} needs {len(self.monomials)} coefficients")
        try:
            object.__setattr__(self, "coeffs", normalise(self.spec, values))
        except ZeroVector:
            raise CurveError("the zero form defines no curve") from None

    @property
    def monomials(self) -> Tuple[Monomial, ...]:
        return monomials(self.degree)

    @classmethod
    def from_terms(cls, spec: FieldSpec, terms: Dict[Monomial, Union[int, FieldElement]]):
        """Form from {monomial: coefficient}; unknown monomials are rejected."""
        order = monomials(cls.degree)
        unknown = set(terms) - set(order)
        if unknown:
            raise CurveError(f"monomials {sorted(unknown)} are not of degree {cls.degree}")
        return cls(spec, tuple(_value(spec, terms.get(m, 0)) for m in order))

    def terms(self) -> List[Tuple[int, Monomial]]:
        return [(c, m) for c, m in zip(self.coeffs, self.monomials) if c]

    def __call__(self, point: ProjPoint) -> int:
        return evaluate(self, point)

    def to_json(self) -> dict:
        return {"degree": self.degree, "coeffs": [list(self.spec.element(c).coeffs) for c in self.coeffs]}

    @classmethod
    def from_json(cls, spec: FieldSpec, data: dict) -> "PlaneCurve":
        kind = Conic if int(data["degree"]) == 2 else Cubic
        return kind(spec, tuple(spec.element(list(c)).value for c in data["coeffs"]))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.coeffs)} over {self.spec})"


class Conic(PlaneCurve):
    """Conic in the order X^2, Y^2, Z^2, XY, YZ, ZX."""

    degree = 2


class Cubic(PlaneCurve):
    """Cubic in the order X^3, Y^3, Z^3, X^2Y, X^2Z, Y^2X, Y^2Z, Z^2X, Z^2Y, XYZ."""

    degree = 3

    @classmethod
    def weierstrass(cls, spec: FieldSpec, a1=0, a2=0, a3=0, a4=0, a6=0) -> "Cubic":
        """Y^2Z + a1XYZ + a3YZ^2 - X^3 - a2X^2Z - a4XZ^2 - a6Z^3."""
        a1, a2, a3, a4, a6 = (_value(spec, a) for a in (a1, a2, a3, a4, a6))
        neg = spec.neg
        return cls.from_terms(spec, {
            (0, 2, 1): 1,
            (1, 1, 1): a1,
            (0, 1, 2): a3,
            (3, 0, 0): neg(1),
            (2, 0, 1): neg(a2),
            (1, 0, 2): neg(a4),
            (0, 0, 3): neg(a6),
        })


def curve_from_vector(spec: FieldSpec, degree: int, vector: Sequence[int]) -> PlaneCurve:
    return (Conic if degree == 2 else Cubic)(spec, tuple(vector))


def weierstrass_discriminant(spec: FieldSpec, a1=0, a2=0, a3=0, a4=0, a6=0) -> int:
    """Discriminant of the Weierstrass cubic; nonzero iff the curve is non-singular."""
    a1, a2, a3, a4, a6 = (_value(spec, a) for a in (a1, a2, a3, a4, a6))
    add, sub, mul, s = spec.add, spec.sub, spec.mul, spec.scalar_value
    b2 = add(mul(a1, a1), mul(s(4), a2))
    b4 = add(mul(s(2), a4), mul(a1, a3))
    b6 = add(mul(a3, a3), mul(s(4), a6))
    b8 = sub(
        add(add(mul(mul(a1, a1), a6), mul(s(4), mul(a2, a6))), mul(a2, mul(a3, a3))),
        add(mul(a1, mul(a3, a4)), mul(a4, a4)),
    )
    delta = spec.neg(mul(mul(b2, b2), b8))
    delta = sub(delta, mul(s(8), mul(b4, mul(b4, b4))))
    delta = sub(delta, mul(s(27), mul(b6, b6)))
    delta = add(delta, mul(s(9), mul(b2, mul(b4, b6))))
    return delta


def veronese_row(point: ProjPoint, degree: int) -> Tuple[int, ...]:
    """Monomial values of the point in the fixed order of the degree."""
    spec = point.spec
    x, y, z = point.values
    return tuple(
        spec.mul(spec.mul(spec.pow(x, i), spec.pow(y, j)), spec.pow(z, k)) for i, j, k in monomials(degree)
    )


def _evaluate_terms(spec: FieldSpec, terms: Iterable[Tuple[int, Monomial]], values: Sequence[int]) -> int:
    x, y, z = values
    acc = 0
    for c, (i, j, k) in terms:
        term = spec.mul(c, spec.mul(spec.mul(spec.pow(x, i), spec.pow(y, j)), spec.pow(z, k)))
        acc = spec.add(acc, term)
    return acc


def evaluate(curve: PlaneCurve, point: ProjPoint) -> int:
    return _evaluate_terms(curve.spec, curve.terms(), point.values)


def contains(curve: PlaneCurve, point: ProjPoint) -> bool:
    return evaluate(curve, point) == 0


def curves_through(points: Iterable[ProjPoint], degree: int) -> RankCertificate:
    """
    All conics or cubics through the given points.

    Stacks one Veronese row per point and eliminates exactly. Every null
    vector is evaluated again on every point before it is returned.

    Args:
        points: Points of PG(2,q)
        degree: 2 or 3

    Returns:
        RankCertificate whose null basis spans the curves through the points
    """
    points = sorted(set(points))
    if not points:
        raise CurveError("curves through an empty set")
    spec = points[0].spec
    rows = [veronese_row(p, degree) for p in points]
    cert = rank_certificate(spec, rows, len(monomials(degree)))
    for vec in cert.null_basis:
        for row in rows:
            acc = 0
            for a, b in zip(vec, row):
                acc = spec.add(acc, spec.mul(a, b))
            if acc:
                raise RuntimeError(f"null vector {vec} does not vanish on row {row}")
    logger.debug("curves of degree %d through %d points: nullity %d", degree, len(points), cert.nullity)
    return cert


def partial_terms(curve: PlaneCurve, axis: int) -> List[Tuple[int, Monomial]]:
    """Formal partial derivative, exponents reduced by one on the axis."""
    spec = curve.spec
    out = []
    for c, mono in curve.terms():
        e = mono[axis]
        factor = spec.scalar_value(e)
        if e == 0 or factor == 0:
            continue
        reduced = list(mono)
        reduced[axis] -= 1
        out.append((spec.mul(c, factor), tuple(reduced)))
    return out


def gradient(curve: PlaneCurve, point: ProjPoint) -> Tuple[int, int, int]:
    return tuple(_evaluate_terms(curve.spec, partial_terms(curve, axis), point.values) for axis in range(3))


def tangent_line(curve: PlaneCurve, point: ProjPoint) -> ProjLine:
    """Tangent line at a non-singular point of the curve."""
    if not contains(curve, point):
        raise NotOnCurve(f"{point!r} is not on {curve!r}")
    grad = gradient(curve, point)
    if not any(grad):
        raise SingularPoint(f"{point!r} is singular on {curve!r}")
    return ProjLine(curve.spec, grad)


def restrict_to_line(curve: PlaneCurve, p: Sequence[int], t: Sequence[int]) -> List[int]:
    """
    Binary form f(sP + tT).

    Returns:
        Coefficients of s^d, s^(d-1) t, ..., t^d
    """
    spec = curve.spec
    d = curve.degree
    linear = [(p[i], t[i]) for i in range(3)]
    out = [0] * (d + 1)
    for c, mono in curve.terms():
        poly = [c]
        for axis, e in enumerate(mono):
            a, b = linear[axis]
            for _ in range(e):
                nxt = [0] * (len(poly) + 1)
                for i, v in enumerate(poly):
                    if v:
                        nxt[i] = spec.add(nxt[i], spec.mul(v, a))
                        nxt[i + 1] = spec.add(nxt[i + 1], spec.mul(v, b))
                poly = nxt
        for i, v in enumerate(poly):
            out[i] = spec.add(out[i], v)
    return out


def is_flex(curve: Cubic, point: ProjPoint) -> bool:
    """The tangent at a non-singular point meets the cubic there three times."""
    tangent = tangent_line(curve, point)
    first, second = line_basis(tangent)
    other = second if ProjPoint(curve.spec, first) == point else first
    coeffs = restrict_to_line(curve, point.values, other)
    return coeffs[2] == 0


# ----------------------------------------------------------------------
# vectorised scans


@lru_cache(maxsize=8)
def _plane_arrays(spec: FieldSpec) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    points = points_of_plane(spec)
    values = np.asarray([p.values for p in points], dtype=np.int64)
    return values[:, 0], values[:, 1], values[:, 2]


def evaluate_terms_array(spec: FieldSpec, terms: Sequence[Tuple[int, Monomial]],
                         xs: np.ndarray, ys: np.ndarray, zs: np.ndarray) -> np.ndarray:
    acc = np.zeros_like(xs)
    for c, (i, j, k) in terms:
        term = spec.mul_array(spec.mul_array(spec.pow_array(xs, i), spec.pow_array(ys, j)), spec.pow_array(zs, k))
        acc = spec.add_array(acc, spec.mul_array(np.full_like(xs, c), term))
    return acc


def rational_points(curve: PlaneCurve) -> List[ProjPoint]:
    """All points of PG(2,q) on the curve, ascending."""
    spec = curve.spec
    xs, ys, zs = _plane_arrays(spec)
    hits = np.nonzero(evaluate_terms_array(spec, curve.terms(), xs, ys, zs) == 0)[0]
    return [ProjPoint(spec, (int(xs[i]), int(ys[i]), int(zs[i]))) for i in hits]


def count_points(curve: PlaneCurve) -> int:
    spec = curve.spec
    xs, ys, zs = _plane_arrays(spec)
    return int(np.count_nonzero(evaluate_terms_array(spec, curve.terms(), xs, ys, zs) == 0))


def is_irreducible_conic(conic: Conic) -> bool:
    """
    No rational line lies on the conic and it has exactly q + 1 points.

    A line lies on the conic iff f(P), f(T) and the polar value
    f(P + T) - f(P) - f(T) all vanish for two points P, T spanning it.
    """
    spec = conic.spec
    terms = conic.terms()
    for line in lines_of_plane(spec):
        p, t = line_basis(line)
        fp = _evaluate_terms(spec, terms, p)
        ft = _evaluate_terms(spec, terms, t)
        fpt = _evaluate_terms(spec, terms, [spec.add(a, b) for a, b in zip(p, t)])
        if fp == 0 and ft == 0 and fpt == 0:
            return False
    return count_points(conic) == spec.order + 1


def is_nonsingular_cubic(cubic: Cubic) -> bool:
    """No point of PG(2,q^2) annihilates the form and its three partials."""
    spec = cubic.spec
    ext = field_create(spec.p, 2 * spec.k)
    phi = embed_subfield(spec, ext)

    def lift(terms):
        return [(phi.table[c], m) for c, m in terms]

    xs, ys, zs = _plane_arrays(ext)
    singular = evaluate_terms_array(ext, lift(cubic.terms()), xs, ys, zs) == 0
    for axis in range(3):
        if not singular.any():
            break
        singular &= evaluate_terms_array(ext, lift(partial_terms(cubic, axis)), xs, ys, zs) == 0
    return not bool(singular.any())
