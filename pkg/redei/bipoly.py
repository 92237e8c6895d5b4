"""Sparse polynomials in T and X, Rédei polynomials of affine point sets and their coefficient sums."""

import logging
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from finite_field import FieldSpec, Poly
from geometry import ProjPoint

logger = logging.getLogger(__name__)

Exponent = Tuple[int, int]


class NonAffinePoint(ValueError):
    """A point of the set lies on the line at infinity."""


class OutOfRange(ValueError):
    """Coefficient index outside 0..n."""


class CharTooSmall(ValueError):
    """The power-sum stage needs n <= p."""


class BiPoly:
    """
    Polynomial in T and X over GF(q), stored as {(deg_T, deg_X): value}.

    Zero coefficients are never stored.
    """

    __slots__ = ("spec", "terms")

    def __init__(self, spec: FieldSpec, terms: Mapping[Exponent, int]):
        self.spec = spec
        self.terms: Dict[Exponent, int] = {e: int(c) for e, c in terms.items() if c}

    @classmethod
    def constant(cls, spec: FieldSpec, c: int) -> "BiPoly":
        return cls(spec, {(0, 0): c})

    @property
    def degree_t(self) -> int:
        return max((e[0] for e in self.terms), default=-1)

    @property
    def degree_x(self) -> int:
        return max((e[1] for e in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = self.spec.add(out.get(e, 0), c)
        return BiPoly(self.spec, out)

    def __neg__(self) -> "BiPoly":
        return BiPoly(self.spec, {e: self.spec.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        spec = self.spec
        out: Dict[Exponent, int] = {}
        for (i, j), a in self.terms.items():
            for (k, l), b in other.terms.items():
                e = (i + k, j + l)
                out[e] = spec.add(out.get(e, 0), spec.mul(a, b))
        return BiPoly(spec, out)

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self.spec == other.spec and self.terms == other.terms

    __hash__ = None

    def coefficient_t(self, k: int) -> Poly:
        """Coefficient of T^k as a polynomial in X."""
        degree = max((e[1] for e in self.terms if e[0] == k), default=-1)
        coeffs = [self.terms.get((k, j), 0) for j in range(degree + 1)]
        return Poly(self.spec, coeffs)

    def eval(self, t: int, x: int) -> int:
        spec = self.spec
        acc = 0
        for (i, j), c in self.terms.items():
            acc = spec.add(acc, spec.mul(c, spec.mul(spec.pow(t, i), spec.pow(x, j))))
        return acc

    def substitute_x(self, x: int) -> Poly:
        """The polynomial in T obtained by fixing X."""
        spec = self.spec
        coeffs = [0] * (self.degree_t + 1)
        for (i, j), c in self.terms.items():
            coeffs[i] = spec.add(coeffs[i], spec.mul(c, spec.pow(x, j)))
        return Poly(spec, coeffs)

    def to_json(self) -> List[List[int]]:
        return [[i, j, c] for (i, j), c in sorted(self.terms.items())]

    def __repr__(self) -> str:
        return f"BiPoly({self.spec}, {len(self.terms)} terms, deg_T={self.degree_t})"


def affine_coordinates(points: Iterable[ProjPoint]) -> List[Tuple[int, int]]:
    out = []
    for point in points:
        if not point.is_affine():
            raise NonAffinePoint(f"{point!r} is at infinity")
        x, y = point.affine()
        out.append((x.value, y.value))
    return out


def redei_polynomial(points: Sequence[ProjPoint]) -> BiPoly:
    """
    prod over the points (a1, a2) of T + a1 X - a2.

    Args:
        points: Affine points of PG(2,q)

    Returns:
        BiPoly monic of degree n in T
    """
    if not points:
        raise ValueError("Rédei polynomial of an empty set")
    spec = points[0].spec
    result = BiPoly.constant(spec, 1)
    for a1, a2 in affine_coordinates(points):
        result = result * BiPoly(spec, {(1, 0): 1, (0, 1): a1, (0, 0): spec.neg(a2)})
    return result


def sigma_k(poly: BiPoly, k: int) -> Poly:
    """k-th elementary symmetric polynomial: the coefficient of T^(n-k)."""
    n = poly.degree_t
    if not 0 <= k <= n:
        raise OutOfRange(f"k = {k} outside 0..{n}")
    return poly.coefficient_t(n - k)


def sigmas(poly: BiPoly) -> List[Poly]:
    return [sigma_k(poly, k) for k in range(poly.degree_t + 1)]


def power_sums(sigma_list: Sequence[Poly], up_to: int) -> List[Poly]:
    """
    Power sums pi_0..pi_up_to from the elementary symmetric polynomials by
    Newton's identities.

    The power sums only pin down the coefficient moments when n <= p, so
    the stage refuses larger n.

    Args:
        sigma_list: sigma_0..sigma_n
        up_to: Largest k, at most n - 1

    Returns:
        List indexed by k
    """
    spec = sigma_list[0].spec
    n = len(sigma_list) - 1
    if n > spec.p:
        raise CharTooSmall(f"n = {n} exceeds the characteristic {spec.p}")
    if not 0 <= up_to <= max(n - 1, 0):
        raise OutOfRange(f"power sums up to {up_to} with n = {n}")
    pis = [Poly.constant(spec, spec.scalar_value(n))]
    for k in range(1, up_to + 1):
        acc = sigma_list[k].scale(spec.scalar_value(k))
        if k % 2 == 0:
            acc = -acc
        for i in range(1, k):
            term = sigma_list[i] * pis[k - i]
            acc = acc + term if i % 2 == 1 else acc - term
        pis.append(acc)
    return pis


def direct_power_sums(points: Sequence[ProjPoint], up_to: int) -> List[Poly]:
    """pi_k = sum over the points of (a1 X - a2)^k, summed term by term."""
    spec = points[0].spec
    pis = []
    coords = affine_coordinates(points)
    for k in range(up_to + 1):
        acc = Poly(spec, ())
        for a1, a2 in coords:
            base = Poly(spec, (spec.neg(a2), a1))
            power = Poly.constant(spec, 1)
            for _ in range(k):
                power = power * base
            acc = acc + power
        pis.append(acc)
    return pis


def _binomial(spec: FieldSpec, k: int, i: int) -> int:
    value = 1
    for j in range(i):
        value = value * (k - j) // (j + 1)
    return spec.scalar_value(value)


def moments_from_power_sums(pis: Sequence[Poly]) -> Dict[Exponent, int]:
    """
    Read sum a1^i a2^j off the power sums, for i + j < len(pis).

    The coefficient of X^i in pi_k is C(k, i) (-1)^(k-i) times the moment
    (i, k - i); C(k, i) is invertible while k < p.
    """
    spec = pis[0].spec
    out: Dict[Exponent, int] = {}
    for k, pi in enumerate(pis):
        for i in range(k + 1):
            c = _binomial(spec, k, i)
            if c == 0:
                raise CharTooSmall(f"C({k},{i}) vanishes in characteristic {spec.p}")
            value = spec.div(pi.coefficient(i), c)
            if (k - i) % 2:
                value = spec.neg(value)
            out[(i, k - i)] = value
    return out


def direct_moments(points: Sequence[ProjPoint], below: int) -> Dict[Exponent, int]:
    """sum over the points of a1^i a2^j for all i + j < below."""
    spec = points[0].spec
    coords = affine_coordinates(points)
    out: Dict[Exponent, int] = {}
    for total in range(below):
        for i in range(total + 1):
            acc = 0
            for a1, a2 in coords:
                acc = spec.add(acc, spec.mul(spec.pow(a1, i), spec.pow(a2, total - i)))
            out[(i, total - i)] = acc
    return out
