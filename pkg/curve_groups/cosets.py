"""Subgroups of curve groups and the coset triples that give dual 3-nets."""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import List, Tuple, Union

from curves import CurveError
from geometry import ProjPoint
from .conic_line import ConicLineGroup
from .cubic_group import CubicGroup

logger = logging.getLogger(__name__)

Group = Union[CubicGroup, ConicLineGroup]


class NoSuchSubgroup(CurveError):
    """No subgroup of the requested order (containing 0')."""


class IndexTooSmall(CurveError):
    """The subgroup has too few cosets for a dual 3-net."""


class CosetViolation(CurveError):
    """A coset triple fails its defining conditions."""


@dataclass(frozen=True)
class CosetTriple:
    """
    Subgroup H with coset representatives a, b, c.

    For a cubic group a + b + c = 0'. For a conic-line group c = a + b,
    the label of the coset whose chords meet the removed line.
    """

    group: Group
    subgroup: Tuple[int, ...]
    a: ProjPoint
    b: ProjPoint
    c: ProjPoint

    @property
    def H(self) -> List[ProjPoint]:
        return [self.group.points[i] for i in self.subgroup]

    def coset(self, representative: ProjPoint) -> List[ProjPoint]:
        g = self.group
        r = g.index[representative]
        return sorted(g.points[g.add_index(r, h)] for h in self.subgroup)

    @property
    def cosets(self) -> Tuple[List[ProjPoint], List[ProjPoint], List[ProjPoint]]:
        return self.coset(self.a), self.coset(self.b), self.coset(self.c)

    def to_json(self) -> dict:
        a_h, b_h, c_h = self.cosets
        return {
            "H": [p.to_json() for p in self.H],
            "a+H": [p.to_json() for p in a_h],
            "b+H": [p.to_json() for p in b_h],
            "c+H": [p.to_json() for p in c_h],
        }


def subgroups_of_order(group: Group, n: int) -> List[Tuple[int, ...]]:
    """All subgroups of order n, as ascending index tuples, in discovery order."""
    if n < 1 or group.order % n:
        raise NoSuchSubgroup(f"{n} does not divide the group order {group.order}")
    candidates = [i for i in range(group.order) if n % group.order_of_index(i) == 0]
    found: List[Tuple[int, ...]] = []
    seen = set()
    frontier = []
    for g in candidates:
        sub = group.closure([g])
        if sub not in seen:
            seen.add(sub)
            frontier.append(sub)
    while frontier:
        nxt = []
        for sub in frontier:
            if len(sub) == n:
                found.append(sub)
                continue
            for g in candidates:
                if g in sub:
                    continue
                bigger = group.closure(list(sub) + [g])
                if n % len(bigger) == 0 and bigger not in seen:
                    seen.add(bigger)
                    nxt.append(bigger)
        frontier = nxt
    return sorted(found)


def _coset_id(group: Group, subgroup: Tuple[int, ...], i: int) -> int:
    return min(group.add_index(i, h) for h in subgroup)


def subgroup_and_cosets(group: Group, n: int) -> List[CosetTriple]:
    """
    Coset triples of every subgroup of order n.

    For a cubic group H must contain 0' and have index greater than two;
    the triples are the unordered sets of three distinct cosets with
    representatives summing to 0'. For a conic-line group every ordered
    pair of distinct cosets (a + H, b + H) with a + H = H gives one triple.

    Args:
        group: CubicGroup or ConicLineGroup
        n: Subgroup order

    Returns:
        List of CosetTriple, deterministic order
    """
    if n < 1 or group.order % n:
        raise NoSuchSubgroup(f"{n} does not divide the group order {group.order}")
    index = group.order // n
    is_cubic = isinstance(group, CubicGroup)
    if (is_cubic and index <= 2) or index < 2:
        raise IndexTooSmall(f"subgroup of order {n} has index {index}")
    subgroups = subgroups_of_order(group, n)
    if is_cubic:
        z = group.zero_prime_index
        rejected = [h for h in subgroups if z not in h]
        if rejected:
            logger.debug("%d subgroups of order %d miss 0'", len(rejected), n)
        subgroups = [h for h in subgroups if z in h]
    if not subgroups:
        raise NoSuchSubgroup(f"no subgroup of order {n} in {group!r}")

    triples: List[CosetTriple] = []
    for h in subgroups:
        reps = sorted({_coset_id(group, h, i) for i in range(group.order)})
        if is_cubic:
            seen = set()
            for a, b in combinations(reps, 2):
                c = group.sub_index(group.sub_index(z, a), b)
                c_id = _coset_id(group, h, c)
                key = frozenset((a, b, c_id))
                if c_id in (a, b) or key in seen:
                    continue
                seen.add(key)
                triples.append(CosetTriple(group, h, group.points[a], group.points[b], group.points[c]))
        else:
            a = _coset_id(group, h, group.identity_index)
            for b in reps:
                if b == a:
                    continue
                c = group.add_index(a, b)
                triples.append(CosetTriple(group, h, group.points[a], group.points[b], group.points[c]))
    logger.info("%d coset triples for subgroups of order %d", len(triples), n)
    return triples


def check_triple(triple: CosetTriple) -> None:
    """Raise CosetViolation unless the triple satisfies its defining conditions."""
    g = triple.group
    h = set(triple.subgroup)
    if g.closure(list(h)) != tuple(sorted(h)):
        raise CosetViolation("H is not closed")
    ids = [_coset_id(g, triple.subgroup, g.index[p]) for p in (triple.a, triple.b, triple.c)]
    a, b, c = (g.index[p] for p in (triple.a, triple.b, triple.c))
    if isinstance(g, CubicGroup):
        if g.zero_prime_index not in h:
            raise CosetViolation("0' is not in H")
        if g.order // len(h) <= 2:
            raise IndexTooSmall("index must exceed two")
        if len(set(ids)) != 3:
            raise CosetViolation("cosets are not pairwise distinct")
        if g.add_index(g.add_index(a, b), c) != g.zero_prime_index:
            raise CosetViolation("a + b + c differs from 0'")
    else:
        if ids[0] == ids[1]:
            raise CosetViolation("a + H equals b + H")
        if g.add_index(a, b) != c:
            raise CosetViolation("c differs from a + b")
