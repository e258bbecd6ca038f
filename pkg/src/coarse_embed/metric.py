"""Finite metric spaces with ball queries and growth profiles.

Two construction routes: connected graphs under the shortest-path metric
(exact integer distances) and explicit distance matrices (binary64, axioms
checked to absolute tolerance 1e-9). Spaces are immutable after
construction and all queries are pure.
"""
from dataclasses import dataclass

import numpy as np

from .errors import DisconnectedGraph, InputFormatError, InvalidVertexId, MetricViolation
from .kernels import all_pairs_distances

MATRIX_TOLERANCE = 1e-9


@dataclass(frozen=True)
class GrowthProfile:
    """Max closed-ball cardinality C(R) over all centers, for integer R.

    counts[R] is C(R); C is non-decreasing and C(0) = 1.
    """

    counts: tuple[int, ...]

    def __getitem__(self, radius: int) -> int:
        return self.counts[radius]

    @property
    def max_radius(self) -> int:
        return len(self.counts) - 1


class FiniteMetricSpace:
    """Point set 0..V-1 with a validated metric given by a dense matrix."""

    def __init__(self, distances: np.ndarray, integral: bool):
        matrix = np.array(distances, copy=True)
        matrix.setflags(write=False)
        self._dist = matrix
        self.is_integer = integral

    @property
    def vertex_count(self) -> int:
        return self._dist.shape[0]

    @property
    def distances(self) -> np.ndarray:
        """Read-only V x V distance matrix."""
        return self._dist

    def check_vertex(self, x: int) -> int:
        x = int(x)
        if not 0 <= x < self.vertex_count:
            raise InvalidVertexId(f"vertex {x} not in 0..{self.vertex_count - 1}")
        return x

    def distance(self, x: int, y: int):
        return self._dist[self.check_vertex(x), self.check_vertex(y)]

    def distance_row(self, x: int) -> np.ndarray:
        return self._dist[self.check_vertex(x)]

    def ball(self, x: int, radius) -> tuple[int, ...]:
        """Closed ball: every point within distance radius of x, x included."""
        if radius < 0:
            raise ValueError("radius must be nonnegative")
        hits = np.nonzero(self.distance_row(x) <= radius)[0]
        return tuple(int(v) for v in hits)

    def growth_profile(self, max_radius: int) -> GrowthProfile:
        if max_radius < 0:
            raise ValueError("max_radius must be nonnegative")
        counts = tuple(
            int((self._dist <= radius).sum(axis=1).max()) for radius in range(max_radius + 1)
        )
        return GrowthProfile(counts)

    def diameter(self):
        return self._dist.max() if self.vertex_count else 0


def from_edge_list(edges, vertex_count: int, backend: str | None = None) -> FiniteMetricSpace:
    """Shortest-path metric of an undirected unweighted graph.

    Duplicate edges and self-loops are ignored; the graph must be connected.
    """
    if vertex_count < 1:
        raise InvalidVertexId("vertex_count must be positive")
    pairs = set()
    for u, v in edges:
        u, v = int(u), int(v)
        for w in (u, v):
            if not 0 <= w < vertex_count:
                raise InvalidVertexId(f"vertex {w} not in 0..{vertex_count - 1}")
        if u != v:
            pairs.add((min(u, v), max(u, v)))
    degree = np.zeros(vertex_count, dtype=np.int32)
    for u, v in pairs:
        degree[u] += 1
        degree[v] += 1
    indptr = np.zeros(vertex_count + 1, dtype=np.int32)
    np.cumsum(degree, out=indptr[1:])
    indices = np.zeros(max(1, 2 * len(pairs)), dtype=np.int32)
    cursor = indptr[:-1].copy()
    for u, v in sorted(pairs):
        indices[cursor[u]] = v
        cursor[u] += 1
        indices[cursor[v]] = u
        cursor[v] += 1
    dist = all_pairs_distances(indptr, indices[: 2 * len(pairs)], vertex_count, backend)
    if (dist < 0).any():
        x, y = map(int, np.argwhere(dist < 0)[0])
        raise DisconnectedGraph(f"no path between vertices {x} and {y}")
    return FiniteMetricSpace(dist, integral=True)


def from_distance_matrix(matrix) -> FiniteMetricSpace:
    """Validate a dense matrix as a metric and wrap it.

    Raises MetricViolation naming the first broken axiom, checked in the
    order: shape, finiteness, identity, nonnegativity, symmetry, triangle.
    """
    m = np.asarray(matrix, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise MetricViolation("shape", (), f"expected a square matrix, got {m.shape}")
    n = m.shape[0]
    if not np.isfinite(m).all():
        i, j = map(int, np.argwhere(~np.isfinite(m))[0])
        raise MetricViolation("finiteness", (i, j), f"d({i},{j}) is not finite")
    bad_diag = np.nonzero(np.abs(np.diagonal(m)) > MATRIX_TOLERANCE)[0]
    if bad_diag.size:
        i = int(bad_diag[0])
        raise MetricViolation("identity", (i, i), f"d({i},{i}) = {m[i, i]} != 0")
    off = ~np.eye(n, dtype=bool)
    neg = np.argwhere((m < -MATRIX_TOLERANCE))
    if neg.size:
        i, j = map(int, neg[0])
        raise MetricViolation("nonnegativity", (i, j), f"d({i},{j}) = {m[i, j]} < 0")
    zeros = np.argwhere(off & (np.abs(m) <= MATRIX_TOLERANCE))
    if zeros.size:
        i, j = map(int, zeros[0])
        raise MetricViolation("identity", (i, j), f"d({i},{j}) = 0 for distinct points")
    asym = np.argwhere(np.abs(m - m.T) > MATRIX_TOLERANCE)
    if asym.size:
        i, j = map(int, asym[0])
        raise MetricViolation(
            "symmetry", (i, j), f"d({i},{j}) = {m[i, j]} != d({j},{i}) = {m[j, i]}"
        )
    for k in range(n):
        slack = m - (m[:, k : k + 1] + m[k : k + 1, :])
        bad = np.argwhere(slack > MATRIX_TOLERANCE)
        if bad.size:
            i, j = map(int, bad[0])
            raise MetricViolation(
                "triangle",
                (i, j, k),
                f"d({i},{j}) = {m[i, j]} > d({i},{k}) + d({k},{j}) = {m[i, k] + m[k, j]}",
            )
    return FiniteMetricSpace(m, integral=False)


# --- textual formats -------------------------------------------------------


def parse_edge_list(text: str) -> tuple[list[tuple[int, int]], int]:
    """Parse the edge-list format: first line 'V E', then E lines 'u v'."""
    tokens = text.split()
    if len(tokens) < 2:
        raise InputFormatError("edge list needs a 'V E' header")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise InputFormatError(f"non-integer token in edge list: {exc}") from exc
    v_count, e_count = values[0], values[1]
    if len(values) != 2 + 2 * e_count:
        raise InputFormatError(
            f"expected {e_count} edges ({2 * e_count} endpoints), got {len(values) - 2} tokens"
        )
    edges = [(values[2 + 2 * i], values[3 + 2 * i]) for i in range(e_count)]
    return edges, v_count


def format_edge_list(edges, vertex_count: int) -> str:
    lines = [f"{vertex_count} {len(edges)}"]
    lines += [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def load_edge_list(path) -> FiniteMetricSpace:
    with open(path, encoding="utf-8") as handle:
        edges, v_count = parse_edge_list(handle.read())
    return from_edge_list(edges, v_count)


def parse_distance_csv(text: str) -> FiniteMetricSpace:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            rows.append([float(cell) for cell in line.split(",")])
        except ValueError as exc:
            raise InputFormatError(f"non-numeric CSV cell: {exc}") from exc
    if not rows:
        raise InputFormatError("empty distance CSV")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise InputFormatError("ragged distance CSV")
    return from_distance_matrix(np.array(rows))


def load_distance_csv(path) -> FiniteMetricSpace:
    with open(path, encoding="utf-8") as handle:
        return parse_distance_csv(handle.read())


# --- stock graphs ----------------------------------------------------------


def path_graph(n: int) -> tuple[list[tuple[int, int]], int]:
    return [(i, i + 1) for i in range(n - 1)], n


def cycle_graph(n: int) -> tuple[list[tuple[int, int]], int]:
    return [(i, (i + 1) % n) for i in range(n)], n


def grid_graph(rows: int, cols: int) -> tuple[list[tuple[int, int]], int]:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return edges, rows * cols


def complete_graph(n: int) -> tuple[list[tuple[int, int]], int]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)], n
