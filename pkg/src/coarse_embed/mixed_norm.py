"""Block vectors measured block-by-block in lp and combined in l2."""
import math
from dataclasses import dataclass

from .errors import ScheduleMismatch
from .schedule import ExponentSchedule
from .tents import SparseFunction


def lp_norm(f: SparseFunction, p) -> float:
    """lp norm of a finitely supported function (counting measure).

    Evaluated as M * (sum (|v|/M)^p)^(1/p) with M the sup norm, so entries
    far below 1 survive exponents in the hundreds without underflow.
    Accepts p = math.inf (sup norm). Fraction entries are reduced to float
    only after the exact ratio v/M is formed.
    """
    if p != math.inf and p < 1:
        raise ValueError("p must be >= 1 or infinity")
    m = f.sup_norm
    if m == 0:
        return 0.0
    if p == math.inf:
        return float(m)
    total = 0.0
    for v in f.entries.values():
        u = float(abs(v) / m)
        if u:
            total += u**p
    return float(m) * total ** (1.0 / p)


@dataclass(frozen=True)
class MixedNormVector:
    """Finitely many blocks; block n measured in lp(n), combined in l2.

    Vectors combine only when they carry the identical schedule.
    """

    blocks: tuple
    schedule: ExponentSchedule

    def __post_init__(self):
        if len(self.blocks) != len(self.schedule):
            raise ValueError(
                f"{len(self.blocks)} blocks vs schedule of length {len(self.schedule)}"
            )

    def block_norms(self) -> tuple[float, ...]:
        return tuple(
            lp_norm(block, p) for block, p in zip(self.blocks, self.schedule.exponents)
        )

    def norm(self) -> float:
        return math.sqrt(sum(b * b for b in self.block_norms()))

    def _check_schedule(self, other: "MixedNormVector") -> None:
        if self.schedule != other.schedule:
            raise ScheduleMismatch("vectors carry different exponent schedules")

    def add(self, other: "MixedNormVector") -> "MixedNormVector":
        self._check_schedule(other)
        return MixedNormVector(
            tuple(a.add(b) for a, b in zip(self.blocks, other.blocks)), self.schedule
        )

    def subtract(self, other: "MixedNormVector") -> "MixedNormVector":
        self._check_schedule(other)
        return MixedNormVector(
            tuple(a.subtract(b) for a, b in zip(self.blocks, other.blocks)), self.schedule
        )

    def scale(self, factor) -> "MixedNormVector":
        return MixedNormVector(tuple(b.scale(factor) for b in self.blocks), self.schedule)


def zero_vector(schedule: ExponentSchedule) -> MixedNormVector:
    return MixedNormVector(tuple(SparseFunction() for _ in schedule.exponents), schedule)
