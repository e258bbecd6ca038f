"""Random regular graphs, spectral gaps, and the edge-stretch diagnostic.

Samples come from the pairing model with whole-sample rejection until the
result is simple; the edge list is a deterministic function of
(n, d, seed). The second adjacency eigenvalue is found by power iteration
on a shifted matrix deflated against the constant vector (valid for
regular graphs, whose top eigenvector is constant).
"""
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateEmbedding, DisconnectedGraph, InfeasibleDegree, NotConverged
from .mixed_norm import MixedNormVector

POWER_ITERATION_CAP = 200_000


@dataclass(frozen=True)
class RegularGraphSample:
    vertex_count: int
    degree: int
    seed: int
    edges: tuple
    lambda2: float | None = None


def random_regular(n: int, d: int, seed: int) -> RegularGraphSample:
    """Pairing-model d-regular sample on n vertices, rejected until simple."""
    if d < 0 or d >= n or (n * d) % 2 != 0:
        raise InfeasibleDegree(f"no simple {d}-regular graph on {n} vertices")
    rng = np.random.RandomState(seed)
    while True:
        stubs = np.repeat(np.arange(n), d)
        rng.shuffle(stubs)
        edges = set()
        simple = True
        for i in range(0, len(stubs), 2):
            u, v = int(stubs[i]), int(stubs[i + 1])
            if u == v:
                simple = False
                break
            pair = (min(u, v), max(u, v))
            if pair in edges:
                simple = False
                break
            edges.add(pair)
        if simple:
            return RegularGraphSample(
                vertex_count=n, degree=d, seed=seed, edges=tuple(sorted(edges))
            )


def adjacency_matrix(edges, vertex_count: int) -> np.ndarray:
    a = np.zeros((vertex_count, vertex_count))
    for u, v in edges:
        a[u, v] = 1.0
        a[v, u] = 1.0
    return a


def is_connected(edges, vertex_count: int) -> bool:
    neighbors = [[] for _ in range(vertex_count)]
    for u, v in edges:
        neighbors[u].append(v)
        neighbors[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in neighbors[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == vertex_count


def _power_iterate(matrix: np.ndarray, tol: float, deflate_constant: bool) -> float:
    """Top eigenvalue by power iteration; stops when ||Av - rv|| <= tol.

    With deflate_constant the iterate is kept orthogonal to the all-ones
    vector, which confines it to the nontrivial spectrum of a regular graph.
    """
    n = matrix.shape[0]
    rng = np.random.RandomState(0)
    v = rng.standard_normal(n)
    if deflate_constant:
        v -= v.mean()
    norm = np.linalg.norm(v)
    if norm == 0.0:
        raise NotConverged("degenerate start vector")
    v /= norm
    for _ in range(POWER_ITERATION_CAP):
        w = matrix @ v
        if deflate_constant:
            w -= w.mean()
        rayleigh = float(v @ w)
        if np.linalg.norm(w - rayleigh * v) <= tol:
            return rayleigh
        norm = np.linalg.norm(w)
        if norm == 0.0:
            return 0.0
        v = w / norm
    raise NotConverged(f"power iteration did not reach tol={tol}")


def top_two_eigenvalues(edges, vertex_count: int, tol: float = 1e-8) -> tuple[float, float]:
    """(largest, second-largest by value) adjacency eigenvalues.

    Both iterations run on A shifted by the maximum degree, which makes the
    spectrum nonnegative: the shift stops bipartite +/- pairs from tying in
    magnitude, and on the complement of the constant vector it turns the
    second-largest-by-value into the dominant target.
    """
    if not is_connected(edges, vertex_count):
        raise DisconnectedGraph("spectral gap is defined for connected graphs")
    if vertex_count == 1:
        return 0.0, 0.0
    a = adjacency_matrix(edges, vertex_count)
    shift = float(a.sum(axis=1).max())
    shifted = a + shift * np.eye(vertex_count)
    lambda1 = _power_iterate(shifted, tol, deflate_constant=False) - shift
    lambda2 = _power_iterate(shifted, tol, deflate_constant=True) - shift
    return lambda1, lambda2


def largest_magnitude_nontrivial(edges, vertex_count: int, tol: float = 1e-8) -> float:
    """Signed nontrivial eigenvalue of largest magnitude (unshifted iteration)."""
    if vertex_count == 1:
        return 0.0
    a = adjacency_matrix(edges, vertex_count)
    return _power_iterate(a, tol, deflate_constant=True)


def poincare_ratio(edges, vertex_count: int, point_map) -> float:
    """Mean squared displacement over all pairs, relative to edges.

    point_map sends each vertex to a MixedNormVector or a plain array;
    expanders force this ratio down for any map with bounded edge stretch,
    which is what obstructs embedding them with a fixed block exponent.
    """

    def gap(x: int, y: int) -> float:
        fx, fy = point_map[x], point_map[y]
        if isinstance(fx, MixedNormVector):
            return fx.subtract(fy).norm()
        return float(np.linalg.norm(np.asarray(fx) - np.asarray(fy)))

    edge_sq = [gap(u, v) ** 2 for u, v in edges]
    edge_mean = sum(edge_sq) / len(edge_sq)
    if edge_mean == 0.0:
        raise DegenerateEmbedding("the map collapses every edge")
    pair_sq = [
        gap(x, y) ** 2 for x in range(vertex_count) for y in range(x + 1, vertex_count)
    ]
    return (sum(pair_sq) / len(pair_sq)) / edge_mean


def spectral_oracle(edges, vertex_count: int) -> np.ndarray:
    """Dense symmetric eigensolve, ascending (cross-check for the iteration)."""
    return np.linalg.eigvalsh(adjacency_matrix(edges, vertex_count))


def second_largest_magnitude_check(sample: RegularGraphSample, tol: float = 1e-8) -> RegularGraphSample:
    """Return the sample with its lambda2 field filled in."""
    _, lam2 = top_two_eigenvalues(sample.edges, sample.vertex_count, tol)
    return RegularGraphSample(
        vertex_count=sample.vertex_count,
        degree=sample.degree,
        seed=sample.seed,
        edges=sample.edges,
        lambda2=lam2,
    )
