"""
Depth-first search for dual 3-nets of small order in PG(2,q).

A is pinned to a canonical frame, B is grown in ascending point order and
C is filled in cell by cell along the lines A_i B_j, so that the partial
assignment always stays a partial latin square. Every emitted net is
checked again with the axiom verifier.
"""

import logging
import multiprocessing
from collections import Counter
from functools import lru_cache
from itertools import combinations
from typing import Any, Dict, Iterator, List, Literal, Optional, Sequence, Set, Tuple

import numpy as np
from pydantic import BaseModel, Field, model_validator
from tqdm import tqdm

from curves import curves_through
from finite_field import FieldSpec, field_create
from geometry import ProjPoint, plane_incidence
from nets import DualThreeNet, classify_regularity, verify_axioms

logger = logging.getLogger(__name__)

Frame = Literal["arc", "non_arc", "collinear"]
Component = Literal["A", "B", "C"]

# e1, e2, e3, then the fourth frame point
_ARC_PREFIX = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]
_NON_ARC_PREFIX = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0)]
_COLLINEAR_PREFIX = [(1, 0, 0), (0, 1, 0), (1, 1, 0)]


class BudgetExceeded(ValueError):
    """A branch ran out of search nodes; the nets found so far were still emitted."""

    def __init__(self, message: str, summary: "SearchSummary"):
        super().__init__(message)
        self.summary = summary


class SearchTask(BaseModel):
    """What to search for: GF(p^k), the order and optional constraints."""

    p: int
    k: int = 1
    n: int = Field(ge=2)
    frames: List[Frame] = ["arc", "non_arc", "collinear"]
    require_collinear: List[Component] = []
    hyperoval: bool = False
    budget: int = Field(default=200000, ge=1)

    @model_validator(mode="after")
    def _consistent(self) -> "SearchTask":
        q = self.p ** self.k
        if self.hyperoval:
            if self.p != 2 or q + 2 != 2 * self.n:
                raise ValueError(f"hyperoval nets need q even and n = (q + 2) / 2, got q={q}, n={self.n}")
            if self.require_collinear:
                raise ValueError("hyperoval nets have no collinear component")
            self.frames = [f for f in self.frames if f == "arc"]
        if "A" in self.require_collinear:
            self.frames = [f for f in self.frames if f == "collinear"]
        if self.n <= 3:
            self.frames = [f for f in self.frames if f != "non_arc"]
        if self.n == 2:
            self.frames = [f for f in self.frames if f != "collinear"]
        if not self.frames:
            raise ValueError("the constraints leave no frame for A")
        return self


class SearchSummary(BaseModel):
    q: int
    n: int
    nets: int
    by_regularity: Dict[str, int]
    nodes: int
    branches: int
    exceeded_branches: int
    complete: bool


class _Context:
    """Incidence tables of PG(2,q) by point index."""

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        inc = plane_incidence(spec)
        self.points: List[ProjPoint] = inc.points
        self.index = inc.point_index
        self.lines: List[Set[int]] = [set(pts) for pts in inc.points_on_line]
        size = len(self.points)
        join = np.full((size, size), -1, dtype=np.int32)
        for li, pts in enumerate(inc.points_on_line):
            for x in pts:
                for y in pts:
                    if x != y:
                        join[x, y] = li
        self.join = join

    def point(self, values: Tuple[int, int, int]) -> int:
        return self.index[ProjPoint(self.spec, values)]

    def on_join(self, x: int, y: int) -> Set[int]:
        return self.lines[int(self.join[x, y])]


@lru_cache(maxsize=4)
def _context(p: int, k: int) -> _Context:
    return _Context(field_create(p, k))


def _a_sets(task: SearchTask, ctx: _Context) -> Iterator[Tuple[str, Tuple[int, ...]]]:
    infinity = {i for i, pt in enumerate(ctx.points) if pt.values[2] == 0}
    for frame in task.frames:
        raw = {"arc": _ARC_PREFIX, "non_arc": _NON_ARC_PREFIX, "collinear": _COLLINEAR_PREFIX}[frame]
        prefix = [ctx.point(v) for v in raw[:task.n]]
        pool = sorted((infinity if frame == "collinear" else set(range(len(ctx.points)))) - set(prefix))
        for extra in combinations(pool, task.n - len(prefix)):
            A = tuple(prefix) + extra
            if task.hyperoval and not _is_arc(ctx, A):
                continue
            yield frame, A


def _is_arc(ctx: _Context, points: Sequence[int]) -> bool:
    for x, y in combinations(points, 2):
        if len(ctx.on_join(x, y) & set(points)) > 2:
            return False
    return True


def _secant_cover(ctx: _Context, points: Sequence[int]) -> Set[int]:
    """Points on some line through two of the given points."""
    cover: Set[int] = set(points)
    for x, y in combinations(points, 2):
        cover |= ctx.on_join(x, y)
    return cover


class _Branch:
    """Search below a fixed A and first point of B."""

    def __init__(self, task: SearchTask, ctx: _Context, A: Tuple[int, ...], b1: int):
        self.task = task
        self.ctx = ctx
        self.A = A
        self.b1 = b1
        self.n = task.n
        self.a_cover = _secant_cover(ctx, A)
        self.candidates = [x for x in range(len(ctx.points)) if x not in self.a_cover]
        self.nodes = 0
        self.exceeded = False
        self.found: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = []

    def _tick(self) -> bool:
        self.nodes += 1
        if self.nodes > self.task.budget:
            self.exceeded = True
        return not self.exceeded

    def run(self) -> None:
        self._grow_b([self.b1])

    def _b_ok(self, B: List[int], b: int) -> bool:
        ctx, A = self.ctx, self.A
        for x in B:
            line = ctx.on_join(x, b)
            if line & set(A):
                return False
            if self.task.hyperoval and len(line & set(B)) > 1:
                return False
        if "B" in self.task.require_collinear and len(B) >= 2 and b not in ctx.on_join(B[0], B[1]):
            return False
        return True

    def _grow_b(self, B: List[int]) -> None:
        if not self._tick():
            return
        if len(B) == self.n:
            self._fill_c(tuple(B))
            return
        for b in self.candidates:
            if b <= B[-1] or not self._b_ok(B, b):
                continue
            self._grow_b(B + [b])
            if self.exceeded:
                return

    def _fill_c(self, B: Tuple[int, ...]) -> None:
        ctx = self.ctx
        blocked = self.a_cover | _secant_cover(ctx, B)
        cells = [ctx.on_join(a, b) for a in self.A for b in B]
        self._assign(B, blocked, cells, 0, [])

    def _c_ok(self, B: Tuple[int, ...], cells: List[Set[int]], done: int, C: List[int], c: int) -> bool:
        ctx = self.ctx
        if any(c in cells[i] for i in range(done)):
            return False
        others = set(self.A) | set(B)
        for x in C:
            line = ctx.on_join(x, c)
            if line & others:
                return False
            if self.task.hyperoval and len(line & set(C)) > 1:
                return False
        if "C" in self.task.require_collinear and len(C) >= 2 and c not in ctx.on_join(C[0], C[1]):
            return False
        return True

    def _assign(self, B: Tuple[int, ...], blocked: Set[int], cells: List[Set[int]], done: int, C: List[int]) -> None:
        if not self._tick():
            return
        if done == len(cells):
            if len(C) == self.n and min(B) < min(C):
                self.found.append((B, tuple(sorted(C))))
            return
        line = cells[done]
        hits = [c for c in C if c in line]
        if len(hits) > 1:
            return
        if hits:
            self._assign(B, blocked, cells, done + 1, C)
            return
        if len(C) == self.n:
            return
        for c in sorted(line - blocked):
            if c in C or not self._c_ok(B, cells, done, C, c):
                continue
            self._assign(B, blocked, cells, done + 1, C + [c])
            if self.exceeded:
                return


def _run_branch(args) -> Tuple[List[Tuple[Tuple[int, ...], Tuple[int, ...]]], int, bool]:
    task_data, A, b1 = args
    task = SearchTask.model_validate(task_data)
    branch = _Branch(task, _context(task.p, task.k), tuple(A), b1)
    branch.run()
    return branch.found, branch.nodes, branch.exceeded


class NetSearch:
    """
    Iterable over the nets of a SearchTask in a fixed order.

    Branches are (frame, A, first point of B). With ``jobs > 1`` they run
    in a process pool and are merged back in branch order, so the stream is
    the same for every number of workers. The node budget applies to each
    branch separately. Iteration raises BudgetExceeded at the end if any
    branch was cut short.
    """

    def __init__(self, task: SearchTask, jobs: int = 1, progress: bool = False):
        self.task = task
        self.jobs = jobs
        self.progress = progress
        self.ctx = _context(task.p, task.k)
        self.nodes = 0
        self.branches = 0
        self.exceeded = 0
        self.regularity: Counter = Counter()
        self.emitted = 0
        self.finished = False

    def _branches(self) -> List[Tuple[str, Tuple[int, ...], int]]:
        out = []
        for frame, A in _a_sets(self.task, self.ctx):
            cover = _secant_cover(self.ctx, A)
            out.extend((frame, A, b1) for b1 in range(len(self.ctx.points)) if b1 not in cover)
        return out

    def __iter__(self) -> Iterator[DualThreeNet]:
        branches = self._branches()
        self.branches = len(branches)
        data = self.task.model_dump()
        args = [(data, A, b1) for _, A, b1 in branches]
        if self.jobs > 1:
            with multiprocessing.Pool(processes=self.jobs) as pool:
                yield from self._merge(branches, pool.imap(_run_branch, args))
        else:
            yield from self._merge(branches, map(_run_branch, args))
        self.finished = True
        if self.exceeded:
            raise BudgetExceeded(f"{self.exceeded} of {self.branches} branches hit the budget", self.summary())

    def _merge(self, branches, results) -> Iterator[DualThreeNet]:
        spec = self.ctx.spec
        pts = self.ctx.points
        bar = tqdm(zip(branches, results), total=len(branches), desc="branches", disable=not self.progress)
        for (frame, A, _), (found, nodes, exceeded) in bar:
            self.nodes += nodes
            self.exceeded += int(exceeded)
            for B, C in found:
                net = DualThreeNet(
                    spec,
                    [pts[i] for i in A],
                    [pts[i] for i in B],
                    [pts[i] for i in C],
                    {"family": "search", "params": {"q": spec.order, "n": self.task.n, "frame": frame}},
                )
                report = verify_axioms(net)
                if not report.passed:
                    raise RuntimeError(f"search emitted an invalid net: {report.failure}")
                if self.task.hyperoval:
                    nullity = curves_through(net.points, 3).nullity
                    net.provenance["params"]["cubic_nullity"] = nullity
                self.regularity[classify_regularity(net).kind] += 1
                self.emitted += 1
                yield net
        logger.info("search q=%d n=%d: %d nets, %d nodes", spec.order, self.task.n, self.emitted, self.nodes)

    def summary(self) -> SearchSummary:
        return SearchSummary(
            q=self.ctx.spec.order,
            n=self.task.n,
            nets=self.emitted,
            by_regularity=dict(sorted(self.regularity.items())),
            nodes=self.nodes,
            branches=self.branches,
            exceeded_branches=self.exceeded,
            complete=self.finished and not self.exceeded,
        )


def enumerate_nets(task: SearchTask, jobs: int = 1, progress: bool = False) -> Iterator[DualThreeNet]:
    return iter(NetSearch(task, jobs, progress))


def hunt_hyperoval_net(q: int = 8, budget: int = 200000, jobs: int = 1, progress: bool = False) -> NetSearch:
    """
    Search for nets whose pairwise unions are hyperovals, n = (q + 2) / 2.

    Each emitted net records the number of independent cubics through its
    points as ``cubic_nullity`` in its provenance.
    """
    p, k = 2, q.bit_length() - 1
    if 2 ** k != q:
        raise ValueError(f"q = {q} is not a power of 2")
    task = SearchTask(p=p, k=k, n=(q + 2) // 2, hyperoval=True, budget=budget)
    return NetSearch(task, jobs, progress)


def run_search(task: SearchTask, jobs: int = 1, progress: bool = False) -> Tuple[List[DualThreeNet], SearchSummary]:
    """All nets of the task with the summary; a budget overrun is recorded, not raised."""
    search = NetSearch(task, jobs, progress)
    nets: List[DualThreeNet] = []
    try:
        for net in search:
            nets.append(net)
    except BudgetExceeded as exc:
        logger.warning("%s", exc)
    return nets, search.summary()
