"""Validators that check the statements about dual 3-nets on concrete instances."""

from .classify import GroupClass, classify_group, element_order, generated
from .converse import ConverseReport, check_converse
from .order4 import N4Certificate, check_n4
from .perspectivity import (
    ConicFrame,
    IsNucleus,
    OnConic,
    Perspectivity,
    PerspectivityGroup,
    conic_frame,
    lift_binary,
    perspectivity_from,
)
from .projection_claims import ProjectionReport, check_projection_claims
from .reports import (
    CanonicalizationFailed,
    NoEquivalence,
    NotOrder2,
    NotOrder4,
    PreconditionFailed,
    TheoremViolated,
)
from .small_orders import N2Report, N3Report, check_n2, check_n3, pasch_pencil, pencil_basis
from .theorem1 import Theorem1Report, check_theorem1
from .waterhouse import WaterhouseReport, admissible_counts, waterhouse_scan, within_hasse

__all__ = [
    'CanonicalizationFailed',
    'ConicFrame',
    'ConverseReport',
    'GroupClass',
    'IsNucleus',
    'N2Report',
    'N3Report',
    'N4Certificate',
    'NoEquivalence',
    'NotOrder2',
    'NotOrder4',
    'OnConic',
    'Perspectivity',
    'PerspectivityGroup',
    'PreconditionFailed',
    'ProjectionReport',
    'TheoremViolated',
    'Theorem1Report',
    'WaterhouseReport',
    'admissible_counts',
    'check_converse',
    'check_n2',
    'check_n3',
    'check_n4',
    'check_projection_claims',
    'check_theorem1',
    'classify_group',
    'conic_frame',
    'element_order',
    'generated',
    'lift_binary',
    'pasch_pencil',
    'pencil_basis',
    'perspectivity_from',
    'waterhouse_scan',
    'within_hasse',
]
