"""Abelian groups on cubics and on conic-minus-line, with their coset triples."""

from .conic_line import ConicLineGroup, NotOnConic, PointOnEll, conic_line_add
from .cosets import (
    CosetTriple,
    CosetViolation,
    IndexTooSmall,
    NoSuchSubgroup,
    check_triple,
    subgroup_and_cosets,
    subgroups_of_order,
)
from .cubic_group import (
    CubicGroup,
    NotNonsingular,
    enumerate_points,
    find_cubic_group,
    flexes,
    group_add,
    third_intersection,
    weierstrass_curves,
)
from .point_group import PointGroup

__all__ = [
    'ConicLineGroup',
    'CosetTriple',
    'CosetViolation',
    'CubicGroup',
    'IndexTooSmall',
    'NoSuchSubgroup',
    'NotNonsingular',
    'NotOnConic',
    'PointGroup',
    'PointOnEll',
    'check_triple',
    'conic_line_add',
    'enumerate_points',
    'find_cubic_group',
    'flexes',
    'group_add',
    'subgroup_and_cosets',
    'subgroups_of_order',
    'third_intersection',
    'weierstrass_curves',
]
