"""The latin square of a dual 3-net: A, B, C as rows, columns and symbols."""

from dataclasses import dataclass
from itertools import combinations
from typing import List, Tuple

import numpy as np

from geometry import line_through
from .net import DualThreeNet, NetError


@dataclass(frozen=True)
class LatinSquare:
    """n x n table over the symbols 0..n-1."""

    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        symbols = set(range(n))
        if any(len(row) != n or set(row) != symbols for row in self.rows):
            raise NetError("rows are not permutations of 0..n-1")
        for j in range(n):
            if {row[j] for row in self.rows} != symbols:
                raise NetError(f"column {j} is not a permutation of 0..n-1")

    @property
    def n(self) -> int:
        return len(self.rows)

    def normalised(self) -> "LatinSquare":
        """Reduced form: symbols renamed so the first row is 0..n-1, rows sorted by first entry."""
        rename = {s: j for j, s in enumerate(self.rows[0])}
        renamed = [tuple(rename[s] for s in row) for row in self.rows]
        return LatinSquare(tuple(sorted(renamed)))

    def intercalates(self) -> int:
        """Number of 2 x 2 latin subsquares."""
        count = 0
        for r1, r2 in combinations(range(self.n), 2):
            a, b = self.rows[r1], self.rows[r2]
            for c1, c2 in combinations(range(self.n), 2):
                if a[c1] == b[c2] and a[c2] == b[c1]:
                    count += 1
        return count

    def to_json(self) -> List[List[int]]:
        return [list(row) for row in self.rows]


def latin_square_of(net: DualThreeNet) -> LatinSquare:
    """L[i][j] is the index in C of the point on the line through A[i] and B[j]."""
    c_index = {c: k for k, c in enumerate(net.C)}
    rows = []
    for a in net.A:
        row = []
        for b in net.B:
            line = line_through(a, b)
            hits = [c_index[c] for c in net.C if line.contains(c)]
            if len(hits) != 1:
                raise NetError(f"the line through {a!r} and {b!r} meets C {len(hits)} times")
            row.append(hits[0])
        rows.append(tuple(row))
    return LatinSquare(tuple(rows))


def isotopy_class(square: LatinSquare) -> str:
    """
    Isotopy class of a latin square of order at most 4.

    Orders 1 to 3 have a single class ("cyclic"). Order 4 splits into
    "cyclic" (4 intercalates) and "klein" (12 intercalates).
    """
    if square.n <= 3:
        return "cyclic"
    if square.n == 4:
        count = square.intercalates()
        if count == 4:
            return "cyclic"
        if count == 12:
            return "klein"
        raise NetError(f"order-4 square with {count} intercalates")
    raise ValueError(f"isotopy classes are only tabulated up to order 4, not {square.n}")
