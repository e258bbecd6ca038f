"""Finitely supported functions and the tent maps they are built from.

The tent at x with scale n takes value 1 - d(x,y)/n on {d < n} and is zero
elsewhere. Its defining properties: sup norm exactly 1, support inside the
closed n-ball, and sup distance between two tents at most d(x,y)/n.
"""
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .metric import FiniteMetricSpace

LIPSCHITZ_SLACK = 1e-12


class SparseFunction:
    """Finitely supported function on a countable point set.

    Zero values are never stored. Values are floats, or Fractions in exact
    mode; instances are treated as immutable.
    """

    __slots__ = ("entries", "domain_size_hint")

    def __init__(self, entries=(), domain_size_hint: int | None = None):
        data = dict(entries)
        self.entries = {k: v for k, v in data.items() if v != 0}
        self.domain_size_hint = domain_size_hint

    @property
    def sup_norm(self):
        return max((abs(v) for v in self.entries.values()), default=0)

    def support(self):
        return self.entries.keys()

    def value(self, point):
        return self.entries.get(point, 0)

    def subtract(self, other: "SparseFunction") -> "SparseFunction":
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) - v
        return SparseFunction(out, _merge_hint(self, other))

    def add(self, other: "SparseFunction") -> "SparseFunction":
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return SparseFunction(out, _merge_hint(self, other))

    def scale(self, factor) -> "SparseFunction":
        return SparseFunction(
            {k: factor * v for k, v in self.entries.items()}, self.domain_size_hint
        )

    def translate(self, mapper) -> "SparseFunction":
        """Reindex the support through mapper (a key -> key callable)."""
        return SparseFunction(
            {mapper(k): v for k, v in self.entries.items()}, self.domain_size_hint
        )

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, SparseFunction):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return f"SparseFunction({self.entries!r})"


def _merge_hint(f: SparseFunction, g: SparseFunction) -> int | None:
    if f.domain_size_hint is None:
        return g.domain_size_hint
    if g.domain_size_hint is None:
        return f.domain_size_hint
    return max(f.domain_size_hint, g.domain_size_hint)


def tent(space: FiniteMetricSpace, x: int, n: int, exact: bool = False) -> SparseFunction:
    """Tent of scale n centered at x; exact=True stores Fractions (graphs only)."""
    if n < 1:
        raise ValueError("tent scale must be a positive integer")
    row = space.distance_row(x)
    inside = np.nonzero(row < n)[0]
    if exact:
        if not space.is_integer:
            raise ValueError("exact tents need an integer (graph) metric")
        entries = {int(y): Fraction(n - int(row[y]), n) for y in inside}
    else:
        entries = {int(y): 1.0 - float(row[y]) / n for y in inside}
    return SparseFunction(entries, domain_size_hint=space.vertex_count)


def sup_distance(f: SparseFunction, g: SparseFunction):
    """Sup norm of f - g over the union of supports (exact for Fractions)."""
    gap = 0
    for k in f.entries.keys() | g.entries.keys():
        v = abs(f.value(k) - g.value(k))
        if v > gap:
            gap = v
    return gap


@dataclass(frozen=True)
class TentConditions:
    """Exhaustive check of the three tent properties up to a scale bound."""

    max_scale: int
    unit_peak_ok: bool
    support_ok: bool
    lipschitz_ok: bool
    pairs_checked: int
    exact: bool

    @property
    def ok(self) -> bool:
        return self.unit_peak_ok and self.support_ok and self.lipschitz_ok


def tent_conditions_report(
    space: FiniteMetricSpace, max_scale: int, chunk: int = 32
) -> TentConditions:
    """Verify the tent properties for every center pair and scale <= max_scale.

    Integer metrics are checked in exact integer arithmetic (tent values are
    multiples of 1/n, so comparisons use the numerators n - d); float
    metrics get LIPSCHITZ_SLACK of absolute tolerance per unit scale.
    """
    dist = space.distances
    v_count = space.vertex_count
    peak_ok = support_ok = lipschitz_ok = True
    pairs = v_count * (v_count - 1) // 2
    for n in range(1, max_scale + 1):
        if space.is_integer:
            scaled = np.clip(n - dist, 0, None)
            tol = 0
        else:
            scaled = np.clip(n - dist, 0.0, None)
            tol = n * LIPSCHITZ_SLACK
        if not (np.diagonal(scaled) == n).all() or scaled.max() != n:
            peak_ok = False
        if ((scaled > 0) & (dist >= n)).any():
            support_ok = False
        for lo in range(0, v_count, chunk):
            hi = min(lo + chunk, v_count)
            gap = np.abs(scaled[lo:hi, None, :] - scaled[None, :, :]).max(axis=2)
            if (gap > dist[lo:hi, :] + tol).any():
                lipschitz_ok = False
    return TentConditions(
        max_scale=max_scale,
        unit_peak_ok=peak_ok,
        support_ok=support_ok,
        lipschitz_ok=lipschitz_ok,
        pairs_checked=pairs * max_scale,
        exact=space.is_integer,
    )
