"""Rédei polynomials of affine point sets and the divisibility certificate."""

from .bipoly import (
    BiPoly,
    CharTooSmall,
    NonAffinePoint,
    OutOfRange,
    affine_coordinates,
    direct_moments,
    direct_power_sums,
    moments_from_power_sums,
    power_sums,
    redei_polynomial,
    sigma_k,
    sigmas,
)
from .certificate import (
    CNotOnLine,
    CoefficientCheck,
    PowerSumReport,
    RedeiCertificate,
    c_line,
    divisibility_certificate,
    normalised_components,
    normalising_projectivity,
    redei_certificate,
)

__all__ = [
    'BiPoly',
    'CNotOnLine',
    'CharTooSmall',
    'CoefficientCheck',
    'NonAffinePoint',
    'OutOfRange',
    'PowerSumReport',
    'RedeiCertificate',
    'affine_coordinates',
    'c_line',
    'direct_moments',
    'direct_power_sums',
    'divisibility_certificate',
    'moments_from_power_sums',
    'normalised_components',
    'normalising_projectivity',
    'power_sums',
    'redei_certificate',
    'redei_polynomial',
    'sigma_k',
    'sigmas',
]
