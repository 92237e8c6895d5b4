"""If A and B lie on an irreducible conic and n >= 5, then C lies on a line."""

import logging
from typing import Any, Dict, List, Optional

from pydantic import BaseModel

from curves import curve_from_vector, curves_through, is_irreducible_conic
from geometry import collinear, line_through
from nets import DualThreeNet, net_to_json, verify_axioms
from .classify import GroupClass
from .perspectivity import IsNucleus, OnConic, PerspectivityGroup
from .reports import PreconditionFailed, TheoremViolated

logger = logging.getLogger(__name__)


class ConverseReport(BaseModel):
    order: int
    conic: Dict[str, Any]
    split_conic: bool
    c_collinear: bool
    c_line: Optional[Dict[str, Any]] = None
    phi: Optional[GroupClass] = None
    psi: Optional[GroupClass] = None
    psi_transitive: Optional[bool] = None
    psi_regular: Optional[bool] = None
    coset_involutions: Optional[bool] = None
    axis: Optional[Dict[str, Any]] = None
    c_on_axis: Optional[bool] = None
    fixed_points: Optional[str] = None
    rational_fixed_points: List[List[List[int]]] = []
    short_orbit: Optional[Dict[str, Any]] = None
    conic_orbit_sizes: List[int] = []
    passed: bool


def _fixed_point_kind(rational: int, short: Dict[str, Any]) -> str:
    if rational == 2:
        return "two_rational"
    if rational == 1:
        return "tangent"
    if len(short["roots"]) == 2:
        return "conjugate_pair"
    return "none"


def check_converse(net: DualThreeNet) -> ConverseReport:
    """
    Certify that C is collinear and explain it through the perspectivity group.

    Phi is generated by the involutions with centres in C and Psi by their
    pairwise products. Psi must be transitive on A and on B; the line
    through the points fixed by Psi (a tangent in the unipotent case) must
    hold all of C.

    Raises:
        PreconditionFailed: not a net, n < 5, or A and B on no conic
        TheoremViolated: any of the statements above fails
    """
    if not verify_axioms(net).passed:
        raise PreconditionFailed(f"{net!r} is not a dual 3-net")
    if net.n < 5:
        raise PreconditionFailed(f"n = {net.n}; the converse needs n >= 5")
    cert = curves_through(net.A + net.B, 2)
    if cert.nullity == 0:
        raise PreconditionFailed("A and B lie on no conic")
    conic = curve_from_vector(net.spec, 2, cert.null_basis[0])
    counterexample = net_to_json(net)
    c_collinear = collinear(net.C)
    c_line = line_through(net.C[0], net.C[1]).to_json() if c_collinear else None

    if not is_irreducible_conic(conic):
        logger.info("A and B lie on a line pair; C collinear: %s", c_collinear)
        if not c_collinear:
            raise TheoremViolated("A and B on two lines but C is not collinear", counterexample)
        return ConverseReport(order=net.n, conic=conic.to_json(), split_conic=True,
                              c_collinear=True, c_line=c_line, passed=True)

    try:
        group = PerspectivityGroup(conic, net.C)
    except (OnConic, IsNucleus) as exc:
        raise TheoremViolated(f"a point of C is not the centre of an involution: {exc}", counterexample) from exc
    transitive = group.is_transitive_on(net.A) and group.is_transitive_on(net.B)
    regular = group.is_regular_on(net.A)
    axis = group.axis()
    c_on_axis = axis is not None and all(axis.contains(c) for c in net.C)
    fixed = group.rational_fixed_points()
    short = group.short_orbit_over_extension()
    kind = _fixed_point_kind(len(fixed), short)
    coset = group.coset_is_involutions() if regular else None
    passed = c_collinear and transitive and c_on_axis and coset is not False
    if kind in ("two_rational", "conjugate_pair"):
        passed = passed and bool(short["swapped"])

    report = ConverseReport(
        order=net.n,
        conic=conic.to_json(),
        split_conic=False,
        c_collinear=c_collinear,
        c_line=c_line,
        phi=group.classify(),
        psi=group.classify(psi=True),
        psi_transitive=transitive,
        psi_regular=regular,
        coset_involutions=coset,
        axis=axis.to_json() if axis is not None else None,
        c_on_axis=c_on_axis,
        fixed_points=kind,
        rational_fixed_points=[p.to_json() for p in fixed],
        short_orbit=short,
        conic_orbit_sizes=sorted(len(o) for o in group.conic_orbits()),
        passed=passed,
    )
    if not passed:
        raise TheoremViolated("the converse fails", counterexample)
    logger.info("converse holds for %r: |Phi| = %d, |Psi| = %d", net, group.order, group.psi_order)
    return report
