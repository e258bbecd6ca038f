"""Built-in finitely generated groups and word-metric balls.

Every model fixes a symmetric generating set and a canonical hashable
element encoding, so elements can index sparse functions and group
instances can key caches. Word length |s| is the least number of
generators multiplying to s; balls are enumerated by breadth-first search
from the identity in a deterministic order.
"""
import abc
from dataclasses import dataclass

from .errors import BallTooLarge

DEFAULT_BALL_CAP = 10**6


class GroupModel(abc.ABC):
    @abc.abstractmethod
    def identity(self): ...

    @abc.abstractmethod
    def multiply(self, a, b): ...

    @abc.abstractmethod
    def inverse(self, a): ...

    @property
    @abc.abstractmethod
    def generators(self) -> tuple: ...

    @property
    @abc.abstractmethod
    def label(self) -> str: ...

    def word_length(self, s, cap: int = DEFAULT_BALL_CAP) -> int:
        """Least generator count expressing s (BFS; overridden where closed forms exist)."""
        if s == self.identity():
            return 0
        radius = 1
        while True:
            ball = word_ball(self, radius, cap)
            if s in ball.lengths:
                return ball.lengths[s]
            if ball.saturated_size is not None:
                raise ValueError(f"{s!r} is not an element of {self.label}")
            radius += 1


@dataclass(frozen=True)
class CayleyBall:
    """Elements within a word-length radius, with exact lengths.

    lengths preserves BFS discovery order; saturated_size is set when the
    BFS exhausted the whole (finite) group before reaching the radius.
    """

    radius: int
    lengths: dict
    saturated_size: int | None = None

    def sphere(self, length: int) -> list:
        return [s for s, l in self.lengths.items() if l == length]

    def __len__(self) -> int:
        return len(self.lengths)

    def __contains__(self, element) -> bool:
        return element in self.lengths


def word_ball(group: GroupModel, radius: int, cap: int = DEFAULT_BALL_CAP) -> CayleyBall:
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    identity = group.identity()
    lengths = {identity: 0}
    frontier = [identity]
    saturated = None
    for level in range(1, radius + 1):
        new = []
        for g in frontier:
            for s in group.generators:
                h = group.multiply(g, s)
                if h not in lengths:
                    lengths[h] = level
                    new.append(h)
                    if len(lengths) > cap:
                        raise BallTooLarge(
                            f"ball of radius {radius} in {group.label} exceeds cap {cap}"
                        )
        if not new:
            saturated = len(lengths)
            break
        frontier = new
    return CayleyBall(radius=radius, lengths=lengths, saturated_size=saturated)


@dataclass(frozen=True)
class IntegerLattice(GroupModel):
    """Z^rank with the standard +/- unit generators."""

    rank: int = 1

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")

    def identity(self):
        return (0,) * self.rank

    def multiply(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def inverse(self, a):
        return tuple(-x for x in a)

    @property
    def generators(self) -> tuple:
        gens = []
        for axis in range(self.rank):
            for sign in (1, -1):
                gens.append(tuple(sign if i == axis else 0 for i in range(self.rank)))
        return tuple(gens)

    @property
    def label(self) -> str:
        return f"z:{self.rank}"

    def word_length(self, s, cap: int = DEFAULT_BALL_CAP) -> int:
        return sum(abs(x) for x in s)


@dataclass(frozen=True)
class FreeGroup(GroupModel):
    """Free group on `rank` letters; elements are reduced words.

    A word is a tuple of nonzero ints in -rank..rank, letter i inverse -i.
    """

    rank: int = 2

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")

    def identity(self):
        return ()

    def multiply(self, a, b):
        a = list(a)
        for letter in b:
            if a and a[-1] == -letter:
                a.pop()
            else:
                a.append(letter)
        return tuple(a)

    def inverse(self, a):
        return tuple(-letter for letter in reversed(a))

    @property
    def generators(self) -> tuple:
        gens = []
        for letter in range(1, self.rank + 1):
            gens.append((letter,))
            gens.append((-letter,))
        return tuple(gens)

    @property
    def label(self) -> str:
        return f"free:{self.rank}"

    def word_length(self, s, cap: int = DEFAULT_BALL_CAP) -> int:
        return len(s)


@dataclass(frozen=True)
class DihedralGroup(GroupModel):
    """Symmetries of a regular k-gon; elements (rotation, flip) with
    generators rotation, rotation inverse, and one reflection."""

    sides: int

    def __post_init__(self):
        if self.sides < 2:
            raise ValueError("need at least 2 sides")

    def identity(self):
        return (0, 0)

    def multiply(self, a, b):
        r1, f1 = a
        r2, f2 = b
        r = (r1 - r2) % self.sides if f1 else (r1 + r2) % self.sides
        return (r, f1 ^ f2)

    def inverse(self, a):
        r, f = a
        return (r, 1) if f else ((-r) % self.sides, 0)

    @property
    def generators(self) -> tuple:
        rot = (1 % self.sides, 0)
        unique = {rot, self.inverse(rot), (0, 1)}
        return tuple(sorted(unique))

    @property
    def label(self) -> str:
        return f"dihedral:{self.sides}"


@dataclass(frozen=True)
class SymmetricGroup(GroupModel):
    """Permutations of 0..degree-1 generated by adjacent transpositions.

    Elements are image tuples; word length equals the inversion count.
    """

    degree: int

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be positive")

    def identity(self):
        return tuple(range(self.degree))

    def multiply(self, a, b):
        return tuple(a[b[i]] for i in range(self.degree))

    def inverse(self, a):
        out = [0] * self.degree
        for i, image in enumerate(a):
            out[image] = i
        return tuple(out)

    @property
    def generators(self) -> tuple:
        gens = []
        for i in range(self.degree - 1):
            perm = list(range(self.degree))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            gens.append(tuple(perm))
        return tuple(gens)

    @property
    def label(self) -> str:
        return f"sym:{self.degree}"

    def word_length(self, s, cap: int = DEFAULT_BALL_CAP) -> int:
        return sum(
            1
            for i in range(self.degree)
            for j in range(i + 1, self.degree)
            if s[i] > s[j]
        )


def group_from_spec(spec: str) -> GroupModel:
    """Parse 'z:d', 'free:k', 'sym:k', or 'dihedral:k'."""
    kind, _, arg = spec.partition(":")
    try:
        value = int(arg) if arg else None
    except ValueError:
        raise ValueError(f"bad group parameter in {spec!r}") from None
    if kind == "z":
        return IntegerLattice(value if value is not None else 1)
    if kind == "free":
        return FreeGroup(value if value is not None else 2)
    if kind == "sym":
        if value is None:
            raise ValueError("sym needs a degree, e.g. sym:4")
        return SymmetricGroup(value)
    if kind == "dihedral":
        if value is None:
            raise ValueError("dihedral needs a side count, e.g. dihedral:5")
        return DihedralGroup(value)
    raise ValueError(f"unknown group kind {kind!r}")
