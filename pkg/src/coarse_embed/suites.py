"""Property suites shared by the verify command and the test harness.

Each function returns a list of (name, ok, detail) check rows with
deterministic content for a fixed configuration.
"""
import math

import numpy as np

from . import cocycle as cocycle_mod
from .embedding import FULL_SERIES_CONSTANT, certify, distortion_profile
from .groups import DEFAULT_BALL_CAP, GroupModel, word_ball
from .metric import FiniteMetricSpace
from .mixed_norm import lp_norm
from .schedule import ExponentSchedule, lp_upper_bound, select_exponent
from .tents import SparseFunction, tent_conditions_report

RESIDUAL_TOLERANCE = 1e-9
EQUIVARIANCE_TOLERANCE = 1e-9


def metric_axiom_checks(space: FiniteMetricSpace) -> list:
    dist = space.distances
    n = space.vertex_count
    identity_ok = bool((np.diagonal(dist) == 0).all())
    off = ~np.eye(n, dtype=bool)
    positive_ok = bool((np.asarray(dist)[off] > 0).all()) if n > 1 else True
    symmetry_ok = bool((dist == dist.T).all())
    triangle_ok = True
    for k in range(n):
        lhs = dist - (dist[:, k : k + 1] + dist[k : k + 1, :])
        if (lhs > (0 if space.is_integer else 1e-9)).any():
            triangle_ok = False
            break
    return [
        ("metric_identity", identity_ok, {"vertices": n}),
        ("metric_positivity", positive_ok, {}),
        ("metric_symmetry", symmetry_ok, {}),
        ("metric_triangle", triangle_ok, {"triples": n * n * n}),
    ]


def tent_checks(space: FiniteMetricSpace, depth: int) -> list:
    report = tent_conditions_report(space, depth)
    detail = {"max_scale": depth, "pairs_checked": report.pairs_checked, "exact": report.exact}
    return [
        ("tent_unit_peak", report.unit_peak_ok, detail),
        ("tent_support", report.support_ok, detail),
        ("tent_lipschitz", report.lipschitz_ok, detail),
    ]


def norm_checks(samples: int, seed: int) -> list:
    """Randomized exponent-selection minimality and norm-sandwich checks."""
    rng = np.random.RandomState(seed)
    minimal_ok = True
    for _ in range(samples):
        alpha = float(rng.uniform(0.0, 4.0))
        beta = float(np.exp(rng.uniform(0.0, math.log(10**4))))
        eps = float(rng.uniform(1e-3, 2.0))
        p = select_exponent(alpha, beta, eps)
        if alpha * (beta ** (1.0 / p) - 1.0) > eps:
            minimal_ok = False
        if p > 1 and alpha * (beta ** (1.0 / (p - 1)) - 1.0) <= eps:
            minimal_ok = False
    sandwich_ok = True
    for _ in range(samples):
        size = int(rng.randint(1, 50))
        values = rng.uniform(-1.0, 1.0, size=size)
        values[rng.randint(size)] = 1.0  # pin the sup away from zero
        f = SparseFunction({i: float(v) for i, v in enumerate(values)})
        p = float(rng.uniform(1.0, 40.0))
        norm = lp_norm(f, p)
        sup = f.sup_norm
        if not (sup - 1e-12 <= norm <= lp_upper_bound(sup, len(f), p) + 1e-12):
            sandwich_ok = False
    return [
        ("exponent_minimality", minimal_ok, {"samples": samples}),
        ("norm_sandwich", sandwich_ok, {"samples": samples}),
    ]


def embedding_checks(
    space: FiniteMetricSpace,
    schedule: ExponentSchedule,
    threads: int | None = None,
) -> tuple[list, dict]:
    """Certificate rows plus the serializable profile/certificate payload."""
    profile = distortion_profile(space, schedule, threads=threads)
    cert = certify(profile, schedule)
    checks = [
        ("embedding_schedule_bound", cert.schedule_ok, {"depth": profile.depth}),
        (
            "embedding_upper_bound",
            cert.upper_ok,
            {
                "upper_constant": profile.upper_constant,
                "upper_constant_full": FULL_SERIES_CONSTANT,
            },
        ),
    ]
    for row in cert.lower:
        checks.append(
            (
                f"embedding_lower_bound_R{row.R}",
                row.ok,
                {"threshold": row.threshold, "pairs": row.pairs},
            )
        )
    checks.append(("embedding_injective", cert.injective, {}))
    payload = {
        "depth": profile.depth,
        "upper_constant": profile.upper_constant,
        "upper_constant_full": FULL_SERIES_CONSTANT,
        "samples": [
            {"r": s.r, "rho_minus": s.rho_minus, "rho_plus": s.rho_plus, "pairs": s.pairs}
            for s in profile.samples
        ],
        "certificates": {
            "schedule": cert.schedule_ok,
            "upper": cert.upper_ok,
            "lower": [
                {"R": row.R, "threshold": row.threshold, "ok": row.ok} for row in cert.lower
            ],
            "injective": cert.injective,
        },
    }
    return checks, payload


def default_depth(space: FiniteMetricSpace) -> int:
    return max(1, int(space.diameter()))


def sample_elements(group: GroupModel, radius: int, count: int, seed: int, cap: int):
    """Deterministic random elements from the radius ball (BFS order indexed)."""
    pool = list(word_ball(group, radius, cap).lengths)
    rng = np.random.RandomState(seed)
    return [pool[int(i)] for i in rng.randint(0, len(pool), size=count)]


def group_checks(
    group: GroupModel,
    schedule: ExponentSchedule,
    radius: int,
    samples: int,
    seed: int,
    cap: int = DEFAULT_BALL_CAP,
) -> tuple[list, dict]:
    depth = len(schedule)
    bump_report = cocycle_mod.bump_shift_report(group, depth, cap)
    properness = cocycle_mod.properness_curve(group, schedule, radius, cap)
    sample_radius = min(radius, max(2, 2 * depth))
    left = sample_elements(group, sample_radius, samples, seed, cap)
    right = sample_elements(group, sample_radius, samples, seed + 1, cap)
    residual_max = 0.0
    equivariance_max = 0.0
    for s, t in zip(left, right):
        residual_max = max(
            residual_max, cocycle_mod.cocycle_residual(group, schedule, s, t, cap)
        )
        gap_st = cocycle_mod.cocycle_vector(group, schedule, s, cap).subtract(
            cocycle_mod.cocycle_vector(group, schedule, t, cap)
        ).norm()
        for shifted in (
            group.multiply(group.inverse(t), s),
            group.multiply(group.inverse(s), t),
        ):
            gap = abs(
                gap_st - cocycle_mod.cocycle_vector(group, schedule, shifted, cap).norm()
            )
            equivariance_max = max(equivariance_max, gap)
    checks = [
        ("bump_conditions", bump_report.ok, {"elements_checked": bump_report.elements_checked}),
        ("block_norm_bound", properness.block_bound_ok, {"radius": radius}),
        ("cocycle_identity", residual_max <= RESIDUAL_TOLERANCE, {"max_residual": residual_max}),
        (
            "equivariance",
            equivariance_max <= EQUIVARIANCE_TOLERANCE,
            {"max_gap": equivariance_max},
        ),
    ]
    for row in properness.certificates:
        checks.append(
            (
                f"properness_m{row.m}",
                row.ok,
                {"threshold": row.threshold, "samples": row.samples},
            )
        )
    payload = {
        "group": group.label,
        "depth": depth,
        "radius": radius,
        "cocycle_residual_max": residual_max,
        "equivariance_gap_max": equivariance_max,
        "properness": [{"L": length, "min_norm": low} for length, low in properness.curve],
        "certificates": {
            "bump": bump_report.ok,
            "schedule": properness.block_bound_ok,
            "cocycle": residual_max <= RESIDUAL_TOLERANCE,
            "equivariance": equivariance_max <= EQUIVARIANCE_TOLERANCE,
            "properness": [
                {"m": row.m, "threshold": row.threshold, "ok": row.ok}
                for row in properness.certificates
            ],
        },
    }
    return checks, payload
