"""Dual 3-nets: the point-set triple, its axiom check and its regularity class."""

import logging
import multiprocessing
from dataclasses import dataclass, field
from typing import Any, Dict, List, Literal, Optional, Sequence, Tuple

from pydantic import BaseModel

from finite_field import FieldSpec
from geometry import ProjLine, ProjPoint, collinear, dot, line_through

logger = logging.getLogger(__name__)


class NetError(ValueError):
    """Base class for net construction and validation errors."""


class SizeMismatch(NetError):
    """Components are empty or of different sizes."""


@dataclass(frozen=True)
class DualThreeNet:
    """Three disjoint n-point components of PG(2,q)."""

    spec: FieldSpec
    A: Tuple[ProjPoint, ...]
    B: Tuple[ProjPoint, ...]
    C: Tuple[ProjPoint, ...]
    provenance: Dict[str, Any] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        for name in ("A", "B", "C"):
            object.__setattr__(self, name, tuple(sorted(set(getattr(self, name)))))
        sizes = {len(self.A), len(self.B), len(self.C)}
        if len(sizes) != 1 or 0 in sizes:
            raise SizeMismatch(f"component sizes {len(self.A)}, {len(self.B)}, {len(self.C)}")
        for p in self.points:
            if p.spec != self.spec:
                raise NetError(f"{p!r} is not over {self.spec}")

    @property
    def n(self) -> int:
        return len(self.A)

    @property
    def components(self) -> Dict[str, Tuple[ProjPoint, ...]]:
        return {"A": self.A, "B": self.B, "C": self.C}

    @property
    def points(self) -> Tuple[ProjPoint, ...]:
        return self.A + self.B + self.C

    def relabel(self, order: str) -> "DualThreeNet":
        """Permute component roles, e.g. 'CAB' puts C first."""
        parts = [getattr(self, name) for name in order]
        return DualThreeNet(self.spec, parts[0], parts[1], parts[2], dict(self.provenance))

    def __repr__(self) -> str:
        family = self.provenance.get("family", "net")
        return f"DualThreeNet({family}, n={self.n}, {self.spec})"


class AxiomReport(BaseModel):
    """Outcome of the dual 3-net axiom check."""

    passed: bool
    order: int
    lines_checked: int
    failure: Optional[str] = None
    witness: Optional[Dict[str, Any]] = None


class RegularityClass(BaseModel):
    """How many components lie on a line."""

    kind: Literal["regular", "irregular_one_line", "irregular_two_lines", "completely_irregular"]
    collinear_components: List[str]


def _count_on(spec: FieldSpec, line: ProjLine, points: Sequence[ProjPoint]) -> int:
    return sum(1 for p in points if dot(spec, line.values, p.values) == 0)


def _check_rows(args) -> Tuple[int, Optional[Dict[str, Any]]]:
    """Check the lines through A[i] x B for a block of rows; first failure wins."""
    net, rows = args
    checked = 0
    for i in rows:
        a = net.A[i]
        for b in net.B:
            line = line_through(a, b)
            counts = {name: _count_on(net.spec, line, comp) for name, comp in net.components.items()}
            checked += 1
            if any(c != 1 for c in counts.values()):
                return checked, {"line": line.to_json()["line"], "through": [a.to_json(), b.to_json()], "counts": counts}
    return checked, None


def verify_axioms(net: DualThreeNet, jobs: int = 1) -> AxiomReport:
    """
    Check disjointness and that every line through a point of A and a point
    of B meets each component exactly once.

    Args:
        net: The candidate net
        jobs: Worker processes; rows of A are split into blocks and the
            first failing block in row order is reported

    Returns:
        AxiomReport with the offending line as witness on failure
    """
    for x, y in (("A", "B"), ("A", "C"), ("B", "C")):
        shared = set(getattr(net, x)) & set(getattr(net, y))
        if shared:
            point = min(shared)
            return AxiomReport(
                passed=False,
                order=net.n,
                lines_checked=0,
                failure=f"components {x} and {y} share a point",
                witness={"point": point.to_json()},
            )
    rows = list(range(net.n))
    if jobs > 1 and net.n > 1:
        size = -(-net.n // jobs)
        blocks = [rows[k:k + size] for k in range(0, net.n, size)]
        with multiprocessing.Pool(processes=jobs) as pool:
            results = pool.map(_check_rows, [(net, block) for block in blocks])
    else:
        results = [_check_rows((net, rows))]
    checked = 0
    for block_checked, witness in results:
        checked += block_checked
        if witness is not None:
            logger.info("axiom failure on %r", net)
            return AxiomReport(
                passed=False,
                order=net.n,
                lines_checked=checked,
                failure="a line through A and B does not meet every component once",
                witness=witness,
            )
    return AxiomReport(passed=True, order=net.n, lines_checked=checked)


def classify_regularity(net: DualThreeNet) -> RegularityClass:
    on_line = [name for name, comp in net.components.items() if collinear(comp)]
    kind = {
        3: "regular",
        2: "irregular_two_lines",
        1: "irregular_one_line",
        0: "completely_irregular",
    }[len(on_line)]
    return RegularityClass(kind=kind, collinear_components=on_line)
