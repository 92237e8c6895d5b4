"""Conics, cubics and exact linear algebra over GF(q)."""

from .forms import (
    CONIC_MONOMIALS,
    CUBIC_MONOMIALS,
    Conic,
    Cubic,
    CurveError,
    NotOnCurve,
    PlaneCurve,
    SingularPoint,
    contains,
    count_points,
    curve_from_vector,
    curves_through,
    evaluate,
    gradient,
    is_flex,
    is_irreducible_conic,
    is_nonsingular_cubic,
    rational_points,
    restrict_to_line,
    tangent_line,
    veronese_row,
    weierstrass_discriminant,
)
from .linalg import (
    RankCertificate,
    SingularMatrix,
    apply_line,
    apply_point,
    det3,
    frame_matrix,
    identity,
    inverse,
    mat_mul,
    mat_vec,
    normalize_matrix,
    null_space,
    rank,
    row_reduce,
    transpose,
)

__all__ = [
    'CONIC_MONOMIALS',
    'CUBIC_MONOMIALS',
    'Conic',
    'Cubic',
    'CurveError',
    'NotOnCurve',
    'PlaneCurve',
    'RankCertificate',
    'SingularMatrix',
    'SingularPoint',
    'apply_line',
    'apply_point',
    'contains',
    'count_points',
    'curve_from_vector',
    'curves_through',
    'det3',
    'evaluate',
    'frame_matrix',
    'gradient',
    'identity',
    'inverse',
    'is_flex',
    'is_irreducible_conic',
    'is_nonsingular_cubic',
    'mat_mul',
    'mat_vec',
    'normalize_matrix',
    'null_space',
    'rank',
    'rational_points',
    'restrict_to_line',
    'row_reduce',
    'tangent_line',
    'transpose',
    'veronese_row',
    'weierstrass_discriminant',
]
