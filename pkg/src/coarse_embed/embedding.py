"""The block-tent embedding of a finite metric space and its certificates.

A point x maps to the block vector whose n-th block is the difference of
tents tent(x, n) - tent(basepoint, n), measured in lp(n) from a schedule.
Pairwise image distances are basepoint-free, bounded above by a linear
function of the metric distance, and bounded below by a certified step
table derived from disjoint tent supports.
"""
import math
from dataclasses import dataclass

import numpy as np

from .kernels import condensed_index, embedding_pair_scan
from .metric import FiniteMetricSpace
from .mixed_norm import MixedNormVector, lp_norm
from .schedule import ExponentSchedule
from .tents import tent

# sqrt of the full series sum 1/n^2; every truncated constant sits below it
FULL_SERIES_CONSTANT = math.pi / math.sqrt(6.0)

UPPER_BOUND_SLACK = 1e-9
SCHEDULE_SLACK = 1e-9


def truncated_constant(depth: int) -> float:
    return math.sqrt(sum(1.0 / (n * n) for n in range(1, depth + 1)))


def embed_point(
    space: FiniteMetricSpace,
    schedule: ExponentSchedule,
    x: int,
    basepoint: int = 0,
) -> MixedNormVector:
    """Image of x: block n is tent(x, n) - tent(basepoint, n)."""
    blocks = tuple(
        tent(space, x, n).subtract(tent(space, basepoint, n))
        for n in range(1, len(schedule) + 1)
    )
    return MixedNormVector(blocks, schedule)


def pair_distance(
    space: FiniteMetricSpace, schedule: ExponentSchedule, x: int, y: int
) -> float:
    """Distance between the images of x and y, computed blockwise.

    The basepoint cancels in differences, so it never enters here.
    """
    total = 0.0
    for n in range(1, len(schedule) + 1):
        block = lp_norm(tent(space, x, n).subtract(tent(space, y, n)), schedule.exponent(n))
        total += block * block
    return math.sqrt(total)


@dataclass(frozen=True)
class DistortionSample:
    """All pairs at one metric distance r, aggregated."""

    r: float
    rho_minus: float
    rho_plus: float
    pairs: int


@dataclass(frozen=True)
class DistortionProfile:
    """Sampled lower/upper distortion data over every unordered pair.

    rho_minus at r is the infimum of image distances over pairs with metric
    distance >= r (non-decreasing in r by construction); rho_plus is the
    max image distance among pairs at distance exactly r. schedule_margins
    holds, per block, the largest lp-minus-sup gap seen over all pairs.
    """

    depth: int
    upper_constant: float
    samples: tuple
    schedule_margins: tuple

    def smallest_positive_gap(self) -> float | None:
        return self.samples[0].rho_minus if self.samples else None


def distortion_profile(
    space: FiniteMetricSpace,
    schedule: ExponentSchedule,
    threads: int | None = None,
    backend: str | None = None,
) -> DistortionProfile:
    """Exhaustive pair scan aggregated by metric distance."""
    depth = len(schedule)
    v_count = space.vertex_count
    exps = [math.inf if p == math.inf else float(p) for p in schedule.exponents]
    pd, margins = embedding_pair_scan(
        space.distances.astype(np.float64), np.array(exps), threads=threads, backend=backend
    )
    iu, ju = np.triu_indices(v_count, 1)
    pair_dist = np.asarray(space.distances)[iu, ju]
    levels = np.unique(pair_dist)
    samples = []
    suffix_min = math.inf
    per_level = []
    for r in levels:
        at_r = pd[pair_dist == r]
        per_level.append((r, at_r.min(), at_r.max(), at_r.shape[0]))
    for r, lo, hi, count in reversed(per_level):
        suffix_min = min(suffix_min, lo)
        samples.append(
            DistortionSample(
                r=float(r) if not space.is_integer else int(r),
                rho_minus=float(suffix_min),
                rho_plus=float(hi),
                pairs=int(count),
            )
        )
    samples.reverse()
    return DistortionProfile(
        depth=depth,
        upper_constant=truncated_constant(depth),
        samples=tuple(samples),
        schedule_margins=tuple(float(m) for m in margins),
    )


@dataclass(frozen=True)
class LowerBoundRow:
    """One certified step: pairs beyond the threshold distance map >= R apart."""

    R: int
    threshold: int
    ok: bool
    pairs: int


@dataclass(frozen=True)
class EmbeddingCertificate:
    schedule_ok: bool
    upper_ok: bool
    lower: tuple
    injective: bool

    @property
    def ok(self) -> bool:
        return (
            self.schedule_ok and self.upper_ok and self.injective and all(r.ok for r in self.lower)
        )


def certify(profile: DistortionProfile, schedule: ExponentSchedule) -> EmbeddingCertificate:
    """Check every quantitative bound the construction promises.

    (i) per-block, lp norms exceed sup norms by at most 1/n;
    (ii) image distances stay below upper_constant * (r + 1);
    (iii) for each R with R^2 <= depth, pairs with r > 2R^2 map >= R apart
          (the first R^2 blocks have disjoint tent supports, each
          contributing at least sup norm 1);
    (iv) distinct points never collapse.
    """
    depth = profile.depth
    schedule_ok = all(
        margin <= 1.0 / n + SCHEDULE_SLACK
        for n, margin in enumerate(profile.schedule_margins, start=1)
    )
    upper_ok = all(
        s.rho_plus <= profile.upper_constant * (s.r + 1.0) + UPPER_BOUND_SLACK
        for s in profile.samples
    )
    lower = []
    for big_r in range(1, math.isqrt(depth) + 1):
        threshold = 2 * big_r * big_r
        beyond = [s for s in profile.samples if s.r > threshold]
        ok = all(s.rho_minus >= big_r for s in beyond)
        lower.append(
            LowerBoundRow(
                R=big_r, threshold=threshold, ok=ok, pairs=sum(s.pairs for s in beyond)
            )
        )
    gap = profile.smallest_positive_gap()
    injective = gap is None or gap > 0.0
    return EmbeddingCertificate(
        schedule_ok=schedule_ok, upper_ok=upper_ok, lower=tuple(lower), injective=injective
    )


def pair_distance_from_profile_scan(
    space: FiniteMetricSpace,
    schedule: ExponentSchedule,
    x: int,
    y: int,
    pd: np.ndarray,
) -> float:
    """Look up one pair in a condensed scan result (testing convenience)."""
    return float(pd[condensed_index(x, y, space.vertex_count)])
