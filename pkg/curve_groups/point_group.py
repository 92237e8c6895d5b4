"""Finite abelian groups on curve points, stored as a Cayley table over point indices."""

import logging
from collections import Counter
from functools import cached_property
from typing import Dict, List, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from finite_field import FieldSpec
from geometry import ProjPoint

logger = logging.getLogger(__name__)


def combine(spec: FieldSpec, alpha: int, u: Sequence[int], beta: int, v: Sequence[int]) -> Tuple[int, ...]:
    """alpha * u + beta * v."""
    return tuple(spec.add(spec.mul(alpha, a), spec.mul(beta, b)) for a, b in zip(u, v))


class PointGroup:
    """
    Group law on a finite point set.

    Subclasses supply ``points``, ``identity`` and ``_add``; the Cayley
    table is filled once from the geometric law and every further query
    is a table lookup.
    """

    points: List[ProjPoint]
    identity: ProjPoint

    def _add(self, p: ProjPoint, q: ProjPoint) -> ProjPoint:
        raise NotImplementedError

    @property
    def spec(self) -> FieldSpec:
        return self.identity.spec

    @property
    def order(self) -> int:
        return len(self.points)

    @cached_property
    def index(self) -> Dict[ProjPoint, int]:
        return {p: i for i, p in enumerate(self.points)}

    @cached_property
    def table(self) -> np.ndarray:
        n = self.order
        table = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            for j in range(i, n):
                k = self.index[self._add(self.points[i], self.points[j])]
                table[i, j] = table[j, i] = k
        logger.debug("Cayley table of %s with %d points", type(self).__name__, n)
        return table

    @property
    def identity_index(self) -> int:
        return self.index[self.identity]

    def add(self, p: ProjPoint, q: ProjPoint) -> ProjPoint:
        return self.points[self.table[self.index[p], self.index[q]]]

    def add_index(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def neg_index(self, i: int) -> int:
        return int(np.nonzero(self.table[i] == self.identity_index)[0][0])

    def neg(self, p: ProjPoint) -> ProjPoint:
        return self.points[self.neg_index(self.index[p])]

    def sub_index(self, i: int, j: int) -> int:
        return self.add_index(i, self.neg_index(j))

    def multiple(self, p: ProjPoint, k: int) -> ProjPoint:
        i = self.index[p]
        acc = self.identity_index
        for _ in range(k % self.order):
            acc = self.add_index(acc, i)
        return self.points[acc]

    def order_of_index(self, i: int) -> int:
        e = self.identity_index
        acc, k = i, 1
        while acc != e:
            acc = self.add_index(acc, i)
            k += 1
        return k

    def order_of(self, p: ProjPoint) -> int:
        return self.order_of_index(self.index[p])

    def element_orders(self) -> Counter:
        return Counter(self.order_of_index(i) for i in range(self.order))

    def is_cyclic(self) -> bool:
        return self.order in self.element_orders()

    def closure(self, generators: Sequence[int]) -> Tuple[int, ...]:
        """Indices of the subgroup generated by the given indices, ascending."""
        members = {self.identity_index}
        frontier = [self.identity_index]
        while frontier:
            nxt = []
            for e in frontier:
                for g in generators:
                    s = self.add_index(e, g)
                    if s not in members:
                        members.add(s)
                        nxt.append(s)
            frontier = nxt
        return tuple(sorted(members))

    def check_axioms(self, progress: bool = False) -> Dict[str, bool]:
        """Identity, inverses, commutativity and associativity over the whole table."""
        t = self.table
        n = self.order
        e = self.identity_index
        result = {
            "identity": bool(np.array_equal(t[e], np.arange(n))),
            "inverses": all(bool((t[i] == e).sum() == 1) for i in range(n)),
            "latin": all(len(set(t[i].tolist())) == n for i in range(n)),
            "commutative": bool(np.array_equal(t, t.T)),
        }
        associative = True
        for a in tqdm(range(n), desc="associativity", disable=not progress):
            if not np.array_equal(t[t[a]], t[a][t]):
                associative = False
                break
        result["associative"] = associative
        return result
