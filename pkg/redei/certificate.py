"""Divisibility certificate for the Rédei polynomials of A and B when C lies on a line."""

import logging
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel

from curves.linalg import Matrix, apply_point, det3
from finite_field import Poly
from geometry import ProjLine, ProjPoint, collinear, line_through, lines_of_plane, meet
from nets import DualThreeNet
from .bipoly import (
    CharTooSmall,
    direct_moments,
    direct_power_sums,
    moments_from_power_sums,
    power_sums,
    redei_polynomial,
    sigmas,
)

logger = logging.getLogger(__name__)

E1, E2 = (1, 0, 0), (0, 1, 0)


class CNotOnLine(ValueError):
    """Component C is not contained in a line."""


class CoefficientCheck(BaseModel):
    k: int
    degree: int
    remainder_zero: bool


class PowerSumReport(BaseModel):
    power_sums_equal: bool
    newton_matches_direct: bool
    moments_equal: bool


class RedeiCertificate(BaseModel):
    """Remainders of sigma_k(A) - sigma_k(B) modulo prod (X - m)."""

    order: int
    directions: List[List[int]]
    checks: List[CoefficientCheck]
    top_scalar: Optional[List[int]] = None
    power_sums: Optional[PowerSumReport] = None
    notice: Optional[str] = None
    passed: bool


def c_line(net: DualThreeNet) -> ProjLine:
    if net.n < 2:
        raise CNotOnLine("an order-1 net does not fix the line of C")
    if not collinear(net.C):
        raise CNotOnLine(f"C of {net!r} is not collinear")
    return line_through(net.C[0], net.C[1])


def normalising_projectivity(net: DualThreeNet) -> Matrix:
    """
    A projectivity sending the line of C to Z = 0 with (0:1:0) outside the image of C.

    Rows are (r1, r2, line of C); r1 runs through the lines of the plane in
    enumeration order starting with X = 0, r2 through X = 0 and Y = 0 and then
    the rest, first admissible choice wins. Nets already in that position get
    the identity.
    """
    spec = net.spec
    ell = c_line(net)
    members = set(net.C)
    rows = [E1, E2] + [line.values for line in lines_of_plane(spec)]
    for r1 in rows:
        if ProjLine(spec, r1) == ell:
            continue
        if meet(ProjLine(spec, r1), ell) in members:
            continue
        for r2 in rows:
            m = [list(r1), list(r2), list(ell.values)]
            if det3(spec, m) != 0:
                return m
    raise CNotOnLine("no normalising projectivity")


def normalised_components(net: DualThreeNet) -> Tuple[List[ProjPoint], List[ProjPoint], List[int]]:
    """A and B after the normalising projectivity, and the slopes m of C."""
    spec = net.spec
    m = normalising_projectivity(net)
    A = [apply_point(spec, m, p) for p in net.A]
    B = [apply_point(spec, m, p) for p in net.B]
    slopes = []
    for c in net.C:
        x, y, z = apply_point(spec, m, c).values
        if z != 0 or x == 0:
            raise CNotOnLine(f"image of {c!r} is not a finite direction")
        slopes.append(spec.div(y, x))
    return A, B, sorted(slopes)


def divisibility_certificate(
    A: Sequence[ProjPoint],
    B: Sequence[ProjPoint],
    directions: Sequence[int],
) -> RedeiCertificate:
    """
    Divide every T-coefficient of A(T,X) - B(T,X) by prod (X - m).

    Args:
        A, B: Affine components
        directions: Slopes of the points of C on Z = 0

    Returns:
        RedeiCertificate; passed when every remainder vanishes and the
        top coefficient is a scalar multiple of the product
    """
    spec = A[0].spec
    n = len(A)
    difference = redei_polynomial(A) - redei_polynomial(B)
    product = Poly.from_roots(spec, directions)
    checks = []
    top_scalar = None
    for k in range(n + 1):
        coeff = difference.coefficient_t(n - k)
        quotient, remainder = divmod(coeff, product)
        checks.append(CoefficientCheck(k=k, degree=coeff.degree, remainder_zero=remainder.is_zero()))
        if k == n and remainder.is_zero() and quotient.degree <= 0:
            top_scalar = list(spec.element(quotient.coefficient(0)).coeffs)
    passed = all(c.remainder_zero for c in checks) and top_scalar is not None
    return RedeiCertificate(
        order=n,
        directions=[list(spec.element(m).coeffs) for m in directions],
        checks=checks,
        top_scalar=top_scalar,
        passed=passed,
    )


def _power_sum_report(A: Sequence[ProjPoint], B: Sequence[ProjPoint]) -> PowerSumReport:
    n = len(A)
    up_to = n - 1
    pis_a = power_sums(sigmas(redei_polynomial(A)), up_to)
    pis_b = power_sums(sigmas(redei_polynomial(B)), up_to)
    newton_ok = pis_a == direct_power_sums(A, up_to) and pis_b == direct_power_sums(B, up_to)
    moments_a = moments_from_power_sums(pis_a)
    moments_ok = moments_a == direct_moments(A, n) and moments_a == moments_from_power_sums(pis_b)
    return PowerSumReport(
        power_sums_equal=pis_a == pis_b,
        newton_matches_direct=newton_ok,
        moments_equal=moments_ok,
    )


def redei_certificate(net: DualThreeNet) -> RedeiCertificate:
    """
    Full Rédei certificate of a net whose C lies on a line.

    The net is first moved so that C is on Z = 0 avoiding (0:1:0). The
    power-sum stage runs only when n <= p; otherwise it is skipped with a
    notice and the divisibility part stands alone.
    """
    A, B, slopes = normalised_components(net)
    cert = divisibility_certificate(A, B, slopes)
    try:
        report = _power_sum_report(A, B)
    except CharTooSmall as exc:
        logger.info("power sums skipped: %s", exc)
        return cert.model_copy(update={"notice": f"power sums skipped: {exc}"})
    passed = cert.passed and report.power_sums_equal and report.newton_matches_direct and report.moments_equal
    logger.info("Rédei certificate for %r: %s", net, "passed" if passed else "failed")
    return cert.model_copy(update={"power_sums": report, "passed": passed})
