"""If C lies on a line and n <= p, then A and B lie on a common conic."""

import logging
from typing import Any, Dict

from pydantic import BaseModel

from curves import contains, curve_from_vector, curves_through, is_irreducible_conic
from geometry import collinear
from nets import DualThreeNet, net_to_json, verify_axioms
from redei import RedeiCertificate, redei_certificate
from .reports import PreconditionFailed, TheoremViolated

logger = logging.getLogger(__name__)


class Theorem1Report(BaseModel):
    order: int
    conic: Dict[str, Any]
    nullity: int
    irreducible: bool
    contains_all: bool
    redei: RedeiCertificate
    passed: bool


def check_theorem1(net: DualThreeNet) -> Theorem1Report:
    """
    Find the conic through A and B and certify it with the Rédei argument.

    Args:
        net: A dual 3-net of order 2 <= n <= p with C on a line (any line;
            the Rédei stage normalises it to Z = 0)

    Returns:
        Theorem1Report

    Raises:
        PreconditionFailed: the net fails the axioms, C is not collinear or n > p
        TheoremViolated: no conic, or the certificate fails
    """
    if not verify_axioms(net).passed:
        raise PreconditionFailed(f"{net!r} is not a dual 3-net")
    if net.n < 2:
        raise PreconditionFailed("order 1 nets are trivial")
    if not collinear(net.C):
        raise PreconditionFailed("C is not contained in a line")
    if net.n > net.spec.p:
        raise PreconditionFailed(f"n = {net.n} exceeds the characteristic {net.spec.p}")

    points = net.A + net.B
    cert = curves_through(points, 2)
    if cert.nullity == 0:
        raise TheoremViolated("A and B lie on no conic", net_to_json(net))
    conic = curve_from_vector(net.spec, 2, cert.null_basis[0])
    contains_all = all(contains(conic, p) for p in points)
    redei = redei_certificate(net)
    passed = contains_all and redei.passed
    report = Theorem1Report(
        order=net.n,
        conic=conic.to_json(),
        nullity=cert.nullity,
        irreducible=is_irreducible_conic(conic),
        contains_all=contains_all,
        redei=redei,
        passed=passed,
    )
    if not passed:
        raise TheoremViolated("the conic or the Rédei certificate fails", net_to_json(net))
    logger.info("A and B lie on a conic for %r", net)
    return report
