"""Dual 3-nets in PG(2,q): the type, its axiom check, constructors and file format."""

from .constructions import (
    CONIC_KINDS,
    BadParameters,
    DegenerateCosets,
    NotASubgroup,
    additive_subgroup,
    circle_model,
    construct_conic_line,
    construct_subgroup_type,
    expected_direction,
    model_conic,
    multiplicative_subgroup,
    n3_family,
    pasch_net,
    pasch_partitions,
    pasch_points,
    trivial_net,
)
from .latin import LatinSquare, isotopy_class, latin_square_of
from .net import AxiomReport, DualThreeNet, NetError, RegularityClass, SizeMismatch, classify_regularity, verify_axioms
from .netfile import NetFormatError, dumps, load_net, net_from_json, net_to_json, save_net
from .projection import (
    ConditionViolated,
    ExhaustedPointChoices,
    ProjectionSetup,
    construct_projection,
    parallel_transversal_property,
    projection_setup,
)

__all__ = [
    'CONIC_KINDS',
    'AxiomReport',
    'BadParameters',
    'ConditionViolated',
    'DegenerateCosets',
    'DualThreeNet',
    'ExhaustedPointChoices',
    'LatinSquare',
    'NetError',
    'NetFormatError',
    'NotASubgroup',
    'ProjectionSetup',
    'RegularityClass',
    'SizeMismatch',
    'additive_subgroup',
    'circle_model',
    'classify_regularity',
    'construct_conic_line',
    'construct_projection',
    'construct_subgroup_type',
    'dumps',
    'expected_direction',
    'isotopy_class',
    'latin_square_of',
    'load_net',
    'model_conic',
    'multiplicative_subgroup',
    'n3_family',
    'net_from_json',
    'net_to_json',
    'parallel_transversal_property',
    'pasch_net',
    'pasch_partitions',
    'pasch_points',
    'projection_setup',
    'save_net',
    'trivial_net',
    'verify_axioms',
]
