"""Point counts of non-singular cubics against the Hasse bound and the realisable set."""

import logging
import math
from collections import Counter
from typing import Dict, Iterator, List, Tuple

import numpy as np
from pydantic import BaseModel
from tqdm import tqdm

from curve_groups import weierstrass_curves
from curves import Cubic, count_points, weierstrass_discriminant
from finite_field import FieldSpec

logger = logging.getLogger(__name__)


class WaterhouseReport(BaseModel):
    q: int
    exhaustive: bool
    curves_scanned: int
    histogram: Dict[int, int]
    hasse_violations: List[int]
    admissible: List[int]
    realized: List[int]
    missing: List[int]
    passed: bool


def admissible_counts(spec: FieldSpec) -> List[int]:
    """N = q + 1 - m with m^2 <= 4q and p not dividing m."""
    q, p = spec.order, spec.p
    bound = math.isqrt(4 * q)
    return sorted(q + 1 - m for m in range(-bound, bound + 1) if m * m <= 4 * q and m % p)


def within_hasse(q: int, count: int) -> bool:
    return (q + 1 - count) ** 2 <= 4 * q


def _sampled(spec: FieldSpec, samples: int, seed: int) -> Iterator[Tuple[Tuple[int, ...], Cubic]]:
    rng = np.random.default_rng(seed)
    for row in rng.integers(0, spec.order, size=(samples, 5)):
        coeffs = tuple(int(c) for c in row)
        if weierstrass_discriminant(spec, *coeffs):
            yield coeffs, Cubic.weierstrass(spec, *coeffs)


def waterhouse_scan(
    spec: FieldSpec,
    exhaustive_limit: int = 20000,
    samples: int = 20000,
    seed: int = 0,
    progress: bool = False,
) -> WaterhouseReport:
    """
    Histogram of point counts over non-singular Weierstrass cubics.

    All q^5 coefficient tuples are scanned when that is at most
    ``exhaustive_limit``; otherwise ``samples`` tuples are drawn with the
    given seed and singular ones are dropped.

    Args:
        spec: GF(q)
        exhaustive_limit: Largest q^5 scanned exhaustively
        samples: Number of random tuples otherwise
        seed: Seed of the sampler
        progress: Show a tqdm bar

    Returns:
        WaterhouseReport; ``passed`` means no count broke the Hasse bound
    """
    q = spec.order
    exhaustive = q ** 5 <= exhaustive_limit
    source = weierstrass_curves(spec) if exhaustive else _sampled(spec, samples, seed)
    histogram: Counter = Counter()
    for _, cubic in tqdm(source, desc=f"cubics over GF({q})", disable=not progress):
        histogram[count_points(cubic)] += 1

    violations = sorted(n for n in histogram if not within_hasse(q, n))
    admissible = admissible_counts(spec)
    realized = sorted(histogram)
    missing = [n for n in admissible if n not in histogram]
    logger.info("GF(%d): %d curves, counts %s, missing %s", q, sum(histogram.values()), realized, missing)
    return WaterhouseReport(
        q=q,
        exhaustive=exhaustive,
        curves_scanned=sum(histogram.values()),
        histogram=dict(sorted(histogram.items())),
        hasse_violations=violations,
        admissible=admissible,
        realized=realized,
        missing=missing,
        passed=not violations,
    )
