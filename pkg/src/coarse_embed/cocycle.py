"""Proper affine isometric actions from translated bump functions.

For each scale n a bump f_n(t) = max(1 - |t|/n^2, 0) peaks at the identity
and decays along word length. Its translates move slowly in sup norm
(at most |s|/n^2, by subadditivity of word length), so with exponents
chosen to keep lp within a factor 2 of sup, the block vector
Phi(s) = (s.f_n - f_n)_n has finite mixed norm. Phi satisfies the cocycle
identity for the blockwise left-translation representation, making
alpha_s(v) = translate_s(v) + Phi(s) an affine isometric action, and it is
metrically proper: once |s| > 2 n^2 the supports of s.f_n and f_n are
disjoint and block n alone contributes norm at least 1.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .groups import DEFAULT_BALL_CAP, GroupModel, word_ball
from .mixed_norm import MixedNormVector
from .schedule import ExponentSchedule, SelectionRecord, select_exponent
from .tents import SparseFunction, sup_distance


def bump_radius(scale: int) -> int:
    """Width parameter m(n) = n^2 of the scale-n bump."""
    return scale * scale


@lru_cache(maxsize=None)
def bump(group: GroupModel, scale: int, cap: int = DEFAULT_BALL_CAP, exact: bool = False) -> SparseFunction:
    """The scale-n bump: 1 - |t|/n^2 on |t| < n^2, zero beyond."""
    if scale < 1:
        raise ValueError("scale must be a positive integer")
    m = bump_radius(scale)
    ball = word_ball(group, m - 1, cap)
    if exact:
        entries = {t: Fraction(m - l, m) for t, l in ball.lengths.items()}
    else:
        entries = {t: 1.0 - l / m for t, l in ball.lengths.items()}
    return SparseFunction(entries)


def tent_block(
    group: GroupModel,
    scale: int,
    s,
    cap: int = DEFAULT_BALL_CAP,
    exact: bool = False,
) -> SparseFunction:
    """One cocycle block: the translate difference s.f_n - f_n."""
    f = bump(group, scale, cap, exact)
    shifted = f.translate(lambda t: group.multiply(s, t))
    return shifted.subtract(f)


def group_schedule(group: GroupModel, depth: int, cap: int = DEFAULT_BALL_CAP) -> ExponentSchedule:
    """Exponents keeping each block's lp norm within twice its sup norm.

    Block n differences are bounded by 1 and supported on at most twice the
    closed n^2-ball, so the smallest p with beta^(1/p) <= 2 works; the
    factor-2 slack preserves the 1/n^2 decay of the block bounds uniformly
    in s. Rectified non-decreasing like the metric-space schedules.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    ball = word_ball(group, bump_radius(depth), cap)
    sizes = [0] * (bump_radius(depth) + 1)
    for length in ball.lengths.values():
        sizes[length] += 1
    closed = []
    total = 0
    for count in sizes:
        total += count
        closed.append(total)
    exponents = []
    provenance = []
    running = 1
    for n in range(1, depth + 1):
        alpha, beta, eps = 1.0, 2.0 * closed[bump_radius(n)], 1.0
        running = max(running, select_exponent(alpha, beta, eps))
        exponents.append(running)
        provenance.append(SelectionRecord(alpha, beta, eps))
    return ExponentSchedule(tuple(exponents), tuple(provenance))


def cocycle_vector(
    group: GroupModel,
    schedule: ExponentSchedule,
    s,
    cap: int = DEFAULT_BALL_CAP,
    exact: bool = False,
) -> MixedNormVector:
    """Phi(s): blocks s.f_n - f_n for n = 1..depth."""
    blocks = tuple(
        tent_block(group, n, s, cap, exact) for n in range(1, len(schedule) + 1)
    )
    return MixedNormVector(blocks, schedule)


def translate_vector(group: GroupModel, s, v: MixedNormVector) -> MixedNormVector:
    """Blockwise left translation (the linear part of the action); isometric."""
    return MixedNormVector(
        tuple(b.translate(lambda t: group.multiply(s, t)) for b in v.blocks), v.schedule
    )


def affine_action(
    group: GroupModel,
    s,
    v: MixedNormVector,
    cap: int = DEFAULT_BALL_CAP,
) -> MixedNormVector:
    """alpha_s(v) = translate_s(v) + Phi(s), over v's own schedule."""
    return translate_vector(group, s, v).add(cocycle_vector(group, v.schedule, s, cap))


def cocycle_residual(
    group: GroupModel,
    schedule: ExponentSchedule,
    s,
    t,
    cap: int = DEFAULT_BALL_CAP,
    exact: bool = False,
) -> float:
    """Norm of Phi(st) - translate_s(Phi(t)) - Phi(s); algebraically zero.

    exact=True runs the whole computation in rational arithmetic, where the
    cancellation is literal and the returned residual is exactly 0.0.
    """
    st = group.multiply(s, t)
    lhs = cocycle_vector(group, schedule, st, cap, exact)
    rhs = translate_vector(group, s, cocycle_vector(group, schedule, t, cap, exact)).add(
        cocycle_vector(group, schedule, s, cap, exact)
    )
    return lhs.subtract(rhs).norm()


@dataclass(frozen=True)
class PropernessRow:
    """Sampled elements past the threshold all map at least sqrt(m) away."""

    m: int
    threshold: int
    ok: bool
    samples: int


@dataclass(frozen=True)
class PropernessReport:
    curve: tuple  # (length, min norm over the sphere), empty spheres omitted
    certificates: tuple  # PropernessRow per block scale
    block_bound_ok: bool  # every block norm <= 2 * min(1, |s|/n^2) + slack
    max_norm: float

    @property
    def ok(self) -> bool:
        return self.block_bound_ok and all(row.ok for row in self.certificates)


BLOCK_BOUND_SLACK = 1e-9


def properness_curve(
    group: GroupModel,
    schedule: ExponentSchedule,
    max_length: int,
    cap: int = DEFAULT_BALL_CAP,
) -> PropernessReport:
    """Exact min of ||Phi(s)|| per word-length sphere up to max_length.

    Also re-checks, for every enumerated element, the per-block guarantee
    that lp norms stay within twice the translation displacement.
    """
    depth = len(schedule)
    ball = word_ball(group, max_length, cap)
    by_length: dict[int, list] = {}
    for element, length in ball.lengths.items():
        by_length.setdefault(length, []).append(element)
    curve = []
    block_ok = True
    max_norm = 0.0
    for length in sorted(by_length):
        best = math.inf
        for s in by_length[length]:
            v = cocycle_vector(group, schedule, s, cap)
            norms = v.block_norms()
            for n, block in enumerate(norms, start=1):
                bound = 2.0 * min(1.0, length / bump_radius(n))
                if block > bound + BLOCK_BOUND_SLACK:
                    block_ok = False
            norm = math.sqrt(sum(b * b for b in norms))
            best = min(best, norm)
            max_norm = max(max_norm, norm)
        curve.append((length, best))
    certificates = []
    for m in range(1, depth + 1):
        threshold = 2 * bump_radius(m)
        beyond = [(length, low) for length, low in curve if length > threshold]
        ok = all(low >= math.sqrt(m) for _, low in beyond)
        certificates.append(
            PropernessRow(
                m=m,
                threshold=threshold,
                ok=ok,
                samples=sum(len(by_length[length]) for length, _ in beyond),
            )
        )
    return PropernessReport(
        curve=tuple(curve),
        certificates=tuple(certificates),
        block_bound_ok=block_ok,
        max_norm=max_norm,
    )


@dataclass(frozen=True)
class BumpShiftReport:
    """Exhaustive check that each bump moves slowly under short translations."""

    depth: int
    peak_ok: bool  # f_n(e) = 1 = sup norm
    finite_support_ok: bool  # support inside the open n^2 ball
    shift_ok: bool  # ||s.f_n - f_n||_inf <= 1/n for all |s| <= n
    elements_checked: int

    @property
    def ok(self) -> bool:
        return self.peak_ok and self.finite_support_ok and self.shift_ok


def bump_shift_report(
    group: GroupModel, depth: int, cap: int = DEFAULT_BALL_CAP
) -> BumpShiftReport:
    """Verify the bump conditions for every scale n <= depth.

    Runs in exact rational arithmetic; the shift bound is checked against
    1/n as an exact Fraction over every element with |s| <= n.
    """
    peak_ok = support_ok = shift_ok = True
    checked = 0
    identity = group.identity()
    for n in range(1, depth + 1):
        f = bump(group, n, cap, exact=True)
        m = bump_radius(n)
        if f.value(identity) != 1 or f.sup_norm != 1:
            peak_ok = False
        lengths = word_ball(group, m - 1, cap).lengths
        if any(t not in lengths or lengths[t] >= m for t in f.support()):
            support_ok = False
        for s, length in word_ball(group, n, cap).lengths.items():
            if length == 0:
                continue
            shifted = f.translate(lambda t: group.multiply(s, t))
            if sup_distance(shifted, f) > Fraction(1, n):
                shift_ok = False
            checked += 1
    return BumpShiftReport(
        depth=depth,
        peak_ok=peak_ok,
        finite_support_ok=support_ok,
        shift_ok=shift_ok,
        elements_checked=checked,
    )
