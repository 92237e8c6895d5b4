"""Claims about nets from the projection construction: C on a line, A and B on no cubic."""

import logging
from typing import Dict

from pydantic import BaseModel

from curves import curves_through
from geometry import collinear, line_profile
from nets import DualThreeNet, net_to_json, parallel_transversal_property, projection_setup, verify_axioms
from .reports import PreconditionFailed, TheoremViolated

logger = logging.getLogger(__name__)


class ComponentProfile(BaseModel):
    cubic_nullity: int
    full_lines: int
    max_collinear: int


class ProjectionReport(BaseModel):
    r: int
    q: int
    c_collinear: bool
    conic_nullity: int
    components: Dict[str, ComponentProfile]
    transversal_closed: bool
    disjoint: bool
    axioms: bool
    passed: bool


def _profile(points, r: int) -> ComponentProfile:
    profile = line_profile(points)
    return ComponentProfile(
        cubic_nullity=curves_through(points, 3).nullity,
        full_lines=sum(1 for count in profile.values() if count == r),
        max_collinear=max(profile.values(), default=1),
    )


def check_projection_claims(net: DualThreeNet) -> ProjectionReport:
    """
    Verify a projection net against the properties that make it a counterexample.

    Each of A and B is a projected copy of AG(2,r): its r^2 + r lines keep r
    points each and no r + 1 points are collinear, yet no cubic passes
    through it. A and B together lie on no conic although C is collinear.

    Raises:
        PreconditionFailed: the net does not record a projection provenance
        TheoremViolated: one of the properties fails
    """
    if net.provenance.get("family") != "projection":
        raise PreconditionFailed(f"{net!r} was not built by the projection construction")
    params = net.provenance["params"]
    r, q = int(params["r"]), int(params["q"])
    setup = projection_setup(r, q)
    components = {"A": _profile(net.A, r), "B": _profile(net.B, r)}
    sets = [set(net.A), set(net.B), set(net.C)]
    report = ProjectionReport(
        r=r,
        q=q,
        c_collinear=collinear(net.C),
        conic_nullity=curves_through(net.A + net.B, 2).nullity,
        components=components,
        transversal_closed=parallel_transversal_property(setup.sub, (0, 1, 2)),
        disjoint=not (sets[0] & sets[1] or sets[0] & sets[2] or sets[1] & sets[2]),
        axioms=verify_axioms(net).passed,
        passed=False,
    )
    passed = (
        report.c_collinear
        and report.conic_nullity == 0
        and all(c.cubic_nullity == 0 and c.full_lines >= r * r and c.max_collinear == r for c in components.values())
        and report.transversal_closed
        and report.disjoint
        and report.axioms
    )
    if not passed:
        raise TheoremViolated("a projection claim fails", net_to_json(net))
    logger.info("projection net r=%d q=%d satisfies every claim", r, q)
    return report.model_copy(update={"passed": True})
