"""Exact linear algebra over GF(q): elimination, null spaces and projectivities."""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from finite_field import FieldSpec
from geometry import ProjLine, ProjPoint

Matrix = List[List[int]]


class SingularMatrix(ValueError):
    """The matrix has no inverse."""


@dataclass(frozen=True)
class RankCertificate:
    """Rank and null-space basis of a matrix over GF(q)."""

    spec: FieldSpec
    rows: int
    cols: int
    rank: int
    pivots: Tuple[int, ...]
    null_basis: Tuple[Tuple[int, ...], ...]

    @property
    def nullity(self) -> int:
        return len(self.null_basis)

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "rank": self.rank,
            "nullity": self.nullity,
            "null_basis": [[list(self.spec.element(v).coeffs) for v in vec] for vec in self.null_basis],
        }


def row_reduce(spec: FieldSpec, matrix: Sequence[Sequence[int]]) -> Tuple[Matrix, List[int]]:
    """
    Reduced row echelon form, computed by galois on the same field.

    The reduced form is unique, so the pivots are the leading columns of
    its nonzero rows.

    Returns:
        (reduced rows, pivot column per nonzero row)
    """
    rows = [list(r) for r in matrix]
    if not rows:
        return rows, []
    reduced = spec.galois_field(rows).row_reduce()
    out = [[int(x) for x in row] for row in reduced.view(np.ndarray)]
    pivots = [next(c for c, x in enumerate(row) if x) for row in out if any(row)]
    return out, pivots


def null_space(spec: FieldSpec, matrix: Sequence[Sequence[int]], cols: int = None) -> List[Tuple[int, ...]]:
    """Basis of {x : Mx = 0}, one vector per free column with that entry 1."""
    if cols is None:
        cols = len(matrix[0])
    reduced, pivots = row_reduce(spec, matrix)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        vec = [0] * cols
        vec[f] = 1
        for row, pc in zip(reduced, pivots):
            vec[pc] = spec.neg(row[f])
        basis.append(tuple(vec))
    return basis


def rank_certificate(spec: FieldSpec, matrix: Sequence[Sequence[int]], cols: int) -> RankCertificate:
    _, pivots = row_reduce(spec, matrix)
    basis = null_space(spec, matrix, cols)
    return RankCertificate(spec, len(matrix), cols, len(pivots), tuple(pivots), tuple(basis))


def rank(spec: FieldSpec, matrix: Sequence[Sequence[int]]) -> int:
    return len(row_reduce(spec, matrix)[1])


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*m)]


def mat_mul(spec: FieldSpec, a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    bt = transpose(b)
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = 0
            for x, y in zip(row, col):
                if x and y:
                    acc = spec.add(acc, spec.mul(x, y))
            out_row.append(acc)
        out.append(out_row)
    return out


def mat_vec(spec: FieldSpec, m: Sequence[Sequence[int]], v: Sequence[int]) -> List[int]:
    out = []
    for row in m:
        acc = 0
        for x, y in zip(row, v):
            if x and y:
                acc = spec.add(acc, spec.mul(x, y))
        out.append(acc)
    return out


def det3(spec: FieldSpec, m: Sequence[Sequence[int]]) -> int:
    mul, add, sub = spec.mul, spec.add, spec.sub
    a = mul(m[0][0], sub(mul(m[1][1], m[2][2]), mul(m[1][2], m[2][1])))
    b = mul(m[0][1], sub(mul(m[1][0], m[2][2]), mul(m[1][2], m[2][0])))
    c = mul(m[0][2], sub(mul(m[1][0], m[2][1]), mul(m[1][1], m[2][0])))
    return add(sub(a, b), c)


def inverse(spec: FieldSpec, m: Sequence[Sequence[int]]) -> Matrix:
    """Gauss-Jordan inverse."""
    n = len(m)
    augmented = [list(row) + identity(n)[i] for i, row in enumerate(m)]
    reduced, pivots = row_reduce(spec, augmented)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return [row[n:] for row in reduced[:n]]


def normalize_matrix(spec: FieldSpec, m: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], ...]:
    """Representative of a projective matrix: first nonzero entry scaled to 1."""
    flat = [x for row in m for x in row]
    lead = next((x for x in flat if x), None)
    if lead is None:
        raise SingularMatrix("zero matrix")
    inv = spec.inv(lead)
    return tuple(tuple(spec.mul(inv, x) for x in row) for row in m)


def apply_point(spec: FieldSpec, m: Sequence[Sequence[int]], point: ProjPoint) -> ProjPoint:
    return ProjPoint(spec, tuple(mat_vec(spec, m, point.values)))


def apply_line(spec: FieldSpec, m: Sequence[Sequence[int]], line: ProjLine) -> ProjLine:
    """Image of a line under the point map x -> Mx, i.e. M^-T applied to its coordinates."""
    return ProjLine(spec, tuple(mat_vec(spec, transpose(inverse(spec, m)), line.values)))


def frame_matrix(spec: FieldSpec, p1: ProjPoint, p2: ProjPoint, p3: ProjPoint, unit: ProjPoint) -> Matrix:
    """
    The projectivity sending e1, e2, e3 and (1:1:1) to p1, p2, p3 and unit.

    Args:
        p1, p2, p3, unit: Four points, no three collinear

    Returns:
        3x3 matrix of packed values
    """
    base = transpose([p1.values, p2.values, p3.values])
    try:
        base_inv = inverse(spec, base)
    except SingularMatrix:
        raise SingularMatrix("frame points are collinear") from None
    scales = mat_vec(spec, base_inv, unit.values)
    if any(s == 0 for s in scales):
        raise SingularMatrix("three of the frame points are collinear")
    return [[spec.mul(base[i][j], scales[j]) for j in range(3)] for i in range(3)]


