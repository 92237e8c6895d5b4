"""Incidence geometry of PG(2,q) and PG(3,q)."""

from .incidence import PlaneIncidence, is_arc, is_hyperoval, line_profile, plane_incidence
from .plane import (
    EqualLines,
    EqualPoints,
    GeometryError,
    ProjLine,
    ProjPoint,
    ZeroVector,
    affine_point,
    collinear,
    cross,
    dot,
    incident,
    line_basis,
    line_through,
    lines_of_plane,
    meet,
    normalise,
    points_of_plane,
    points_on,
)
from .space import (
    CenterOnScreen,
    PlaneChart,
    PonCenter,
    ProjPlane3,
    ProjPoint3,
    affine_point3,
    plane_coords,
    plane_through,
    project_from_point,
)

__all__ = [
    'CenterOnScreen',
    'EqualLines',
    'EqualPoints',
    'GeometryError',
    'PlaneChart',
    'PlaneIncidence',
    'PonCenter',
    'ProjLine',
    'ProjPlane3',
    'ProjPoint',
    'ProjPoint3',
    'ZeroVector',
    'affine_point',
    'affine_point3',
    'collinear',
    'cross',
    'dot',
    'incident',
    'is_arc',
    'is_hyperoval',
    'line_basis',
    'line_profile',
    'line_through',
    'lines_of_plane',
    'meet',
    'normalise',
    'plane_coords',
    'plane_incidence',
    'plane_through',
    'points_of_plane',
    'points_on',
    'project_from_point',
]
