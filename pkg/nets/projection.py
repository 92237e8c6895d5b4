"""Nets obtained by projecting three parallel planes of AG(3,r) from a point of PG(3,q)."""

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import List, Tuple

from sympy import factorint

from finite_field import FieldSpec, SubfieldEmbedding, embed_subfield, field_create
from geometry import PlaneChart, ProjPlane3, ProjPoint, ProjPoint3, plane_coords, project_from_point
from .net import DualThreeNet, NetError, verify_axioms

logger = logging.getLogger(__name__)


class ConditionViolated(NetError):
    """r and q do not satisfy r > 3, q > r^2 with GF(r) a subfield of GF(q)."""


class ExhaustedPointChoices(NetError):
    """No admissible centre of projection was found."""


def _prime_power(n: int) -> Tuple[int, int]:
    factors = factorint(n)
    if len(factors) != 1:
        raise ConditionViolated(f"{n} is not a prime power")
    (p, e), = factors.items()
    return p, e


@dataclass(frozen=True)
class ProjectionSetup:
    """
    The data of the projection construction.

    ``levels`` are the z-values of the planes alpha, beta, gamma, all in the
    image of GF(r). ``center`` lies on the GF(q)-extension of gamma and off
    every line of that plane holding two points of gamma.
    """

    sub: FieldSpec
    sup: FieldSpec
    phi: SubfieldEmbedding
    levels: Tuple[int, int, int]
    center: ProjPoint3
    screen: ProjPlane3

    @property
    def r(self) -> int:
        return self.sub.order

    @property
    def q(self) -> int:
        return self.sup.order

    @cached_property
    def subfield_values(self) -> List[int]:
        """Images of the GF(r) elements in GF(q), in GF(r) order."""
        return [self.phi(x).value for x in range(self.r)]

    @cached_property
    def chart(self) -> PlaneChart:
        return plane_coords(self.screen)

    def plane_points(self, level: int) -> List[ProjPoint3]:
        """The r^2 points of AG(3,r) with z equal to ``level``."""
        s = self.subfield_values
        return [ProjPoint3(self.sup, (x, y, level, 1)) for x, y in product(s, s)]

    def project(self, point: ProjPoint3) -> ProjPoint:
        image = project_from_point(self.center, point, self.screen)
        return self.chart.to_plane(image)


def parallel_transversal_property(sub: FieldSpec, levels: Tuple[int, int, int]) -> bool:
    """
    In AG(3,r), every line through points of two of the planes z = level
    meets the third plane in exactly one point.

    ``levels`` are values of GF(r) itself.
    """
    elements = range(sub.order)
    for i, j in ((0, 1), (0, 2), (1, 2)):
        k = 3 - i - j
        zi, zj, zk = levels[i], levels[j], levels[k]
        dz = sub.sub(zj, zi)
        for x0, y0, x1, y1 in product(elements, repeat=4):
            dx, dy = sub.sub(x1, x0), sub.sub(y1, y0)
            hits = set()
            for t in elements:
                if sub.add(zi, sub.mul(t, dz)) == zk:
                    hits.add((sub.add(x0, sub.mul(t, dx)), sub.add(y0, sub.mul(t, dy))))
            if len(hits) != 1:
                return False
    return True


def _avoids_secants(spec: FieldSpec, s: List[int], u: int, v: int) -> bool:
    # the secants of gamma inside its plane are x = c and y = m x + c with m, c in GF(r)
    members = set(s)
    if u in members:
        return False
    return all(spec.sub(v, spec.mul(m, u)) not in members for m in s)


def projection_setup(r: int, q: int) -> ProjectionSetup:
    """
    Fields, planes, centre and screen for the projection net.

    Raises:
        ConditionViolated: r is not a prime power above 3, GF(r) is not a
            subfield of GF(q), or q <= r^2
        ExhaustedPointChoices: no centre avoids the secants of gamma
    """
    if r <= 3:
        raise ConditionViolated(f"r = {r} must exceed 3")
    if q <= r * r:
        raise ConditionViolated(f"q = {q} must exceed r^2 = {r * r}")
    p, e = _prime_power(r)
    p_q, m = _prime_power(q)
    if p != p_q or m % e:
        raise ConditionViolated(f"GF({r}) is not a subfield of GF({q})")
    sub = field_create(p, e)
    sup = field_create(p, m)
    phi = embed_subfield(sub, sup)
    levels_sub = (0, 1, 2)
    if not parallel_transversal_property(sub, levels_sub):
        raise ConditionViolated("the three planes are not parallel transversal-closed")
    levels = tuple(phi(z).value for z in levels_sub)
    s = [phi(x).value for x in range(r)]
    for u, v in product(range(q), repeat=2):
        if _avoids_secants(sup, s, u, v):
            center = ProjPoint3(sup, (u, v, levels[2], 1))
            break
    else:
        raise ExhaustedPointChoices(f"every point of the extended plane meets a secant for r={r}, q={q}")
    screen = ProjPlane3(sup, (0, 0, 0, 1))
    logger.debug("projection centre %r", center)
    return ProjectionSetup(sub, sup, phi, levels, center, screen)


def construct_projection(r: int, q: int) -> DualThreeNet:
    """
    Order r^2 net with C on a line while A and B lie on no cubic.

    The planes alpha, beta, gamma of AG(3,r) are projected from the centre
    onto the plane at infinity W = 0, read in the chart dropping W. The
    image of gamma is on the line Z = 0.

    Args:
        r: Order of the subfield, r > 3
        q: Order of the plane field, q > r^2

    Returns:
        Verified DualThreeNet with provenance family "projection"
    """
    setup = projection_setup(r, q)
    A, B, C = ([setup.project(x) for x in setup.plane_points(level)] for level in setup.levels)
    params = {"r": r, "q": q, "center": setup.center.to_json()}
    net = DualThreeNet(setup.sup, A, B, C, {"family": "projection", "params": params})
    if net.n != r * r:
        raise NetError(f"projection collapsed points: {net.n} distinct images for r^2 = {r * r}")
    report = verify_axioms(net)
    if not report.passed:
        raise RuntimeError(f"projection net fails the axioms: {report.failure}")
    logger.info("projection net of order %d over GF(%d)", net.n, q)
    return net
