"""Cached incidence tables of PG(2,q) and arc predicates."""

import logging
from collections import Counter
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Sequence, Tuple

from finite_field import FieldSpec
from .plane import ProjLine, ProjPoint, line_through, lines_of_plane, points_of_plane, points_on

logger = logging.getLogger(__name__)


class PlaneIncidence:
    """Points, lines and incidences of PG(2,q) with index lookups."""

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.points: List[ProjPoint] = points_of_plane(spec)
        self.lines: List[ProjLine] = lines_of_plane(spec)
        self.point_index: Dict[ProjPoint, int] = {p: i for i, p in enumerate(self.points)}
        self.line_index: Dict[ProjLine, int] = {l: i for i, l in enumerate(self.lines)}
        logger.debug("incidence tables for PG(2,%d): %d points", spec.order, len(self.points))

    @cached_property
    def points_on_line(self) -> List[Tuple[int, ...]]:
        """Point indices on each line, ascending."""
        return [tuple(self.point_index[p] for p in points_on(line)) for line in self.lines]


@lru_cache(maxsize=16)
def plane_incidence(spec: FieldSpec) -> PlaneIncidence:
    return PlaneIncidence(spec)


def line_profile(points: Sequence[ProjPoint]) -> Counter:
    """Number of given points on every line that holds at least two of them."""
    points = sorted(set(points))
    lines = {line_through(p, q) for p, q in combinations(points, 2)}
    return Counter({line: sum(1 for p in points if line.contains(p)) for line in lines})


def is_arc(points: Iterable[ProjPoint]) -> bool:
    """No three of the points are collinear."""
    seen = set()
    points = sorted(set(points))
    for p, q in combinations(points, 2):
        line = line_through(p, q)
        if line in seen:
            return False
        seen.add(line)
    return True


def is_hyperoval(points: Iterable[ProjPoint]) -> bool:
    points = list(set(points))
    if not points:
        return False
    q = points[0].spec.order
    return q % 2 == 0 and len(points) == q + 2 and is_arc(points)
