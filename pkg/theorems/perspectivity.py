"""
Involutory perspectivities of an irreducible conic and the group they generate.

Every irreducible conic is moved onto the standard conic XZ = Y^2, whose
points are (y^2 : y w : w^2). A projectivity of the line acting on (y : w)
lifts to the plane through its symmetric square, so the group is computed
on 2 x 2 matrices and only lifted when acting on points.
"""

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from curves import Conic, CurveError, contains, is_irreducible_conic, rational_points, tangent_line
from curves.linalg import apply_line, apply_point, frame_matrix, inverse, mat_mul, normalize_matrix
from finite_field import FieldSpec, embed_subfield, field_create
from geometry import ProjLine, ProjPoint, meet
from .classify import GroupClass, classify_group

logger = logging.getLogger(__name__)

Binary = Tuple[Tuple[int, int], Tuple[int, int]]
Ternary = Tuple[Tuple[int, ...], ...]


class OnConic(ValueError):
    """The centre lies on the conic."""


class IsNucleus(ValueError):
    """In characteristic 2 the nucleus is the centre of no involution."""


def lift_binary(spec: FieldSpec, r: Sequence[Sequence[int]]) -> List[List[int]]:
    """The 3 x 3 matrix acting on (y^2, y w, w^2) as r acts on (y, w)."""
    (a, b), (c, d) = r
    mul, add = spec.mul, spec.add
    two = spec.scalar_value(2)
    return [
        [mul(a, a), mul(two, mul(a, b)), mul(b, b)],
        [mul(a, c), add(mul(a, d), mul(b, c)), mul(b, d)],
        [mul(c, c), mul(two, mul(c, d)), mul(d, d)],
    ]


def standard_point(spec: FieldSpec, y: int, w: int = 1) -> ProjPoint:
    return ProjPoint(spec, (spec.mul(y, y), spec.mul(y, w), spec.mul(w, w)))


@dataclass(frozen=True)
class ConicFrame:
    """
    Projectivity ``matrix`` carrying XZ = Y^2 onto ``conic``.

    e1, e3 and (1:1:1) go to the first three rational points, e2 to the
    meet of the tangents at the first two (the nucleus when p = 2).
    """

    conic: Conic
    matrix: Ternary
    inverse: Ternary

    def to_standard(self, point: ProjPoint) -> ProjPoint:
        return apply_point(self.conic.spec, self.inverse, point)

    def from_standard(self, point: ProjPoint) -> ProjPoint:
        return apply_point(self.conic.spec, self.matrix, point)


@lru_cache(maxsize=64)
def conic_frame(conic: Conic) -> ConicFrame:
    if not is_irreducible_conic(conic):
        raise CurveError(f"{conic!r} is not irreducible")
    spec = conic.spec
    p1, p2, p3 = rational_points(conic)[:3]
    t = meet(tangent_line(conic, p1), tangent_line(conic, p2))
    m = frame_matrix(spec, p1, t, p2, p3)
    frame = ConicFrame(conic, tuple(map(tuple, m)), tuple(map(tuple, inverse(spec, m))))
    for y in range(spec.order):
        if not contains(conic, frame.from_standard(standard_point(spec, y))):
            raise RuntimeError(f"frame of {conic!r} misses the image of y = {y}")
    return frame


def _normal2(spec: FieldSpec, m: Sequence[Sequence[int]]) -> Binary:
    return normalize_matrix(spec, m)


@dataclass(frozen=True)
class Perspectivity:
    """The involution of the conic with centre ``center``; ``binary`` acts on the standard parameter."""

    conic: Conic
    center: ProjPoint
    binary: Binary

    @cached_property
    def matrix(self) -> Ternary:
        return ternary(conic_frame(self.conic), self.binary)

    def __call__(self, point: ProjPoint) -> ProjPoint:
        return apply_point(self.conic.spec, self.matrix, point)


def ternary(frame: ConicFrame, binary: Sequence[Sequence[int]]) -> Ternary:
    """The plane projectivity of a binary matrix, in the conic's own coordinates."""
    spec = frame.conic.spec
    lifted = lift_binary(spec, binary)
    return normalize_matrix(spec, mat_mul(spec, mat_mul(spec, frame.matrix, lifted), frame.inverse))


def perspectivity_from(conic: Conic, q: ProjPoint) -> Perspectivity:
    """
    The involutory perspectivity with centre q.

    In the standard model two parameters y, z are swapped iff
    c y z - b (y + z) + a = 0 for the centre (a : b : c), that is
    z = (b y - a) / (c y - b).

    Raises:
        OnConic: q is on the conic
        IsNucleus: p = 2 and q is the nucleus
    """
    if contains(conic, q):
        raise OnConic(f"{q!r} lies on {conic!r}")
    spec = conic.spec
    frame = conic_frame(conic)
    u, v, w = frame.to_standard(q).values
    r = ((v, spec.neg(u)), (w, spec.neg(v)))
    if u == 0 and w == 0 and spec.p == 2:
        raise IsNucleus(f"{q!r} is the nucleus of {conic!r}")
    return Perspectivity(conic, q, _normal2(spec, r))


class PerspectivityGroup:
    """
    Phi, generated by the perspectivities with the given centres, and Psi,
    generated by their pairwise products.
    """

    def __init__(self, conic: Conic, centers: Sequence[ProjPoint]):
        self.conic = conic
        self.spec = conic.spec
        self.frame = conic_frame(conic)
        self.generators = [perspectivity_from(conic, c) for c in centers]
        self.identity: Binary = ((1, 0), (0, 1))
        gens = [g.binary for g in self.generators]
        self.elements: List[Binary] = self._closure(gens)
        self.psi: List[Binary] = self._closure(sorted({self.mul(g, h) for g, h in product(gens, gens)}))
        logger.debug("|Phi| = %d, |Psi| = %d", len(self.elements), len(self.psi))

    def mul(self, x: Binary, y: Binary) -> Binary:
        return _normal2(self.spec, mat_mul(self.spec, x, y))

    def inv(self, x: Binary) -> Binary:
        return _normal2(self.spec, inverse(self.spec, x))

    def _closure(self, gens: Sequence[Binary]) -> List[Binary]:
        members = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in members:
                        members.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(members)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def psi_order(self) -> int:
        return len(self.psi)

    def act(self, element: Binary, point: ProjPoint) -> ProjPoint:
        return apply_point(self.spec, ternary(self.frame, element), point)

    def orbit(self, point: ProjPoint, elements: Optional[Sequence[Binary]] = None) -> List[ProjPoint]:
        elements = self.psi if elements is None else elements
        return sorted({self.act(g, point) for g in elements})

    def is_transitive_on(self, points: Sequence[ProjPoint], elements: Optional[Sequence[Binary]] = None) -> bool:
        points = sorted(set(points))
        return self.orbit(points[0], elements) == points

    def is_regular_on(self, points: Sequence[ProjPoint]) -> bool:
        return self.is_transitive_on(points) and self.psi_order == len(set(points))

    def conic_orbits(self) -> List[List[ProjPoint]]:
        """Orbits of Phi on the rational points of the conic, as connected components."""
        graph = nx.Graph()
        points = rational_points(self.conic)
        graph.add_nodes_from(points)
        for g in self.generators:
            graph.add_edges_from((p, g(p)) for p in points)
        return sorted(sorted(c) for c in nx.connected_components(graph))

    def classify(self, psi: bool = False) -> GroupClass:
        elements = self.psi if psi else self.elements
        return classify_group(elements, self.mul, self.identity, self.inv)

    def coset_is_involutions(self) -> bool:
        """Every element of Phi outside Psi has order 2."""
        inside = set(self.psi)
        return all(self.mul(g, g) == self.identity for g in self.elements if g not in inside)

    def axis_element(self) -> Optional[Binary]:
        """Element of Psi of largest order, smallest first on ties; None for trivial Psi."""
        best, best_order = None, 1
        for g in self.psi:
            k, x = 1, g
            while x != self.identity:
                x = self.mul(x, g)
                k += 1
            if k > best_order:
                best, best_order = g, k
        return best

    def axis(self) -> Optional[ProjLine]:
        """
        The line through the fixed conic points of the axis element.

        Fixed parameters solve c y^2 + (d - a) y w - b w^2 = 0, which is the
        line [c : d - a : -b] of the standard model; it is rational even when
        the two points live over GF(q^2), and tangent when they coincide.
        """
        g = self.axis_element()
        if g is None:
            return None
        (a, b), (c, d) = g
        spec = self.spec
        line = ProjLine(spec, (c, spec.sub(d, a), spec.neg(b)))
        return apply_line(spec, self.frame.matrix, line)

    def rational_fixed_points(self) -> List[ProjPoint]:
        axis = self.axis()
        if axis is None:
            return []
        return [p for p in rational_points(self.conic) if axis.contains(p)]

    def short_orbit_over_extension(self) -> Dict[str, object]:
        """
        Fixed parameters (y : w) of the axis element over GF(q^2) and
        whether every generator swaps the two of them.
        """
        g = self.axis_element()
        if g is None:
            return {"roots": [], "swapped": False}
        spec = self.spec
        ext = field_create(spec.p, 2 * spec.k)
        phi = embed_subfield(spec, ext)
        (a, b), (c, d) = (tuple(phi.table[x] for x in row) for row in g)
        mul, add, sub = ext.mul, ext.add, ext.sub

        def form(y: int, w: int) -> int:
            return sub(add(mul(c, mul(y, y)), mul(sub(d, a), mul(y, w))), mul(b, mul(w, w)))

        roots = [(y, 1) for y in range(ext.order) if form(y, 1) == 0]
        if form(1, 0) == 0:
            roots.append((1, 0))
        as_json = [[list(ext.element(y).coeffs), list(ext.element(w).coeffs)] for y, w in roots]
        if len(roots) != 2:
            return {"roots": as_json, "swapped": False}
        (y1, w1), (y2, w2) = roots
        swapped = True
        for gen in self.generators:
            (r00, r01), (r10, r11) = (tuple(phi.table[x] for x in row) for row in gen.binary)
            image = (add(mul(r00, y1), mul(r01, w1)), add(mul(r10, y1), mul(r11, w1)))
            if sub(mul(image[0], w2), mul(image[1], y2)) != 0:
                swapped = False
                break
        return {"roots": as_json, "swapped": swapped}
