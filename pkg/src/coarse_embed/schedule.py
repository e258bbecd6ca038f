"""Exponent selection: how fast lp norms track the sup norm.

For functions with sup norm at most alpha and support of at most beta
points, ||f||_p <= ||f||_inf * beta^(1/p), so any p with
alpha * (beta^(1/p) - 1) <= eps guarantees ||f||_p <= ||f||_inf + eps.
``select_exponent`` returns the smallest such integer p; schedules chain
these choices over growing scales, rectified to be non-decreasing.
"""
import math
from dataclasses import dataclass

from .metric import FiniteMetricSpace


def lp_upper_bound(alpha: float, beta: float, p: float) -> float:
    """Upper bound alpha * beta^(1/p) for the lp norm over the class."""
    if alpha < 0 or beta < 1 or p < 1:
        raise ValueError("need alpha >= 0, beta >= 1, p >= 1")
    return alpha * beta ** (1.0 / p)


def _feasible(alpha: float, beta: float, eps: float, p: int) -> bool:
    return alpha * (beta ** (1.0 / p) - 1.0) <= eps


def select_exponent(alpha: float, beta: float, eps: float) -> int:
    """Smallest integer p >= 1 with alpha * (beta^(1/p) - 1) <= eps.

    The closed form ceil(ln(beta) / ln(1 + eps/alpha)) is used as a seed and
    then adjusted, so the result is minimal for the binary64 predicate even
    when rounding lands the seed off by one.
    """
    if alpha < 0 or beta < 1 or eps <= 0:
        raise ValueError("need alpha >= 0, beta >= 1, eps > 0")
    if alpha == 0 or beta == 1:
        return 1
    p = max(1, math.ceil(math.log(beta) / math.log1p(eps / alpha)))
    while p > 1 and _feasible(alpha, beta, eps, p - 1):
        p -= 1
    while not _feasible(alpha, beta, eps, p):
        p += 1
    return p


@dataclass(frozen=True)
class SelectionRecord:
    """The (alpha, beta, eps) triple that justified one exponent."""

    alpha: float
    beta: float
    eps: float


@dataclass(frozen=True)
class ExponentSchedule:
    """Non-decreasing block exponents with their selection provenance."""

    exponents: tuple
    provenance: tuple

    def __post_init__(self):
        if len(self.exponents) != len(self.provenance):
            raise ValueError("exponents and provenance must have equal length")
        previous = 1
        for p, rec in zip(self.exponents, self.provenance):
            if p != math.inf and p < 1:
                raise ValueError(f"exponent {p} < 1")
            if p < previous:
                raise ValueError("exponents must be non-decreasing")
            previous = p
            if p != math.inf and not _feasible(rec.alpha, rec.beta, rec.eps, p):
                raise ValueError(
                    f"exponent {p} infeasible for alpha={rec.alpha} beta={rec.beta} eps={rec.eps}"
                )

    def __len__(self) -> int:
        return len(self.exponents)

    def exponent(self, block: int):
        """Exponent for 1-based block index."""
        return self.exponents[block - 1]

    def truncated(self, depth: int) -> "ExponentSchedule":
        return ExponentSchedule(self.exponents[:depth], self.provenance[:depth])

    def to_json_dict(self) -> dict:
        return {
            "exponents": ["infinity" if p == math.inf else p for p in self.exponents],
            "provenance": [
                {"alpha": r.alpha, "beta": r.beta, "eps": r.eps} for r in self.provenance
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ExponentSchedule":
        exponents = tuple(
            math.inf if p == "infinity" else p for p in data["exponents"]
        )
        provenance = tuple(
            SelectionRecord(r["alpha"], r["beta"], r["eps"]) for r in data["provenance"]
        )
        return cls(exponents, provenance)


def schedule_for_space(space: FiniteMetricSpace, depth: int) -> ExponentSchedule:
    """Exponents for blocks 1..depth of the metric-space embedding.

    Block n compares tents of scale n: differences are bounded by 1 and
    supported on at most 2*C(n) points, and the target slack is 1/n. The
    raw choices are rectified upward to be non-decreasing.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    profile = space.growth_profile(depth)
    exponents = []
    provenance = []
    running = 1
    for n in range(1, depth + 1):
        alpha, beta, eps = 1.0, 2.0 * profile[n], 1.0 / n
        running = max(running, select_exponent(alpha, beta, eps))
        exponents.append(running)
        provenance.append(SelectionRecord(alpha, beta, eps))
    return ExponentSchedule(tuple(exponents), tuple(provenance))
