"""Backend dispatch for the hot kernels.

The compiled extension is preferred when importable; the numpy fallback is
selected otherwise. ``COARSE_EMBED_BACKEND`` (auto | compiled | python)
overrides the choice, and ``COARSE_EMBED_THREADS`` caps how many threads
the compiled pair scan may use. Results are independent of the thread
count: each thread writes a disjoint slice of the output and the per-block
margins are reduced with an elementwise max.
"""
import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _speedups_py

try:
    from . import _speedups
except ImportError:  # pure-python install
    _speedups = None

_MIN_PAIRS_PER_THREAD = 2048


def compiled_available() -> bool:
    return _speedups is not None


def resolve_backend(backend: str | None = None) -> str:
    """Return 'compiled' or 'python' for the requested backend name."""
    name = backend or os.environ.get("COARSE_EMBED_BACKEND", "auto")
    if name not in ("auto", "compiled", "python"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "python":
        return "python"
    if name == "compiled":
        if _speedups is None:
            raise RuntimeError(
                "compiled backend requested but coarse_embed._speedups is not built"
            )
        return "compiled"
    return "compiled" if _speedups is not None else "python"


def active_backend() -> str:
    return resolve_backend()


def thread_count(threads: int | None = None) -> int:
    if threads is not None:
        return max(1, int(threads))
    env = os.environ.get("COARSE_EMBED_THREADS")
    return max(1, int(env)) if env else 1


def all_pairs_distances(
    indptr: np.ndarray, indices: np.ndarray, vertex_count: int, backend: str | None = None
) -> np.ndarray:
    """All-pairs hop distances (int64, -1 for unreachable) from CSR adjacency."""
    indptr = np.ascontiguousarray(indptr, dtype=np.int32)
    indices = np.ascontiguousarray(indices, dtype=np.int32)
    if resolve_backend(backend) == "python":
        return _speedups_py.bfs_all_pairs(indptr, indices, vertex_count)
    out = np.empty((vertex_count, vertex_count), dtype=np.int64)
    _speedups.bfs_all_pairs(indptr, indices, out)
    return out


def embedding_pair_scan(
    dist: np.ndarray,
    exponents,
    threads: int | None = None,
    backend: str | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Condensed pairwise embedding distances plus per-block lp-sup margins."""
    dist = np.ascontiguousarray(dist, dtype=np.float64)
    exps = np.ascontiguousarray(exponents, dtype=np.float64)
    v_count = dist.shape[0]
    pair_total = v_count * (v_count - 1) // 2
    if resolve_backend(backend) == "python":
        return _speedups_py.pair_scan(dist, exps)
    workers = min(thread_count(threads), max(1, pair_total // _MIN_PAIRS_PER_THREAD))
    pd = np.empty(pair_total)
    if workers <= 1:
        margins = np.zeros(len(exps))
        _speedups.pair_scan(dist, exps, 0, pair_total, pd, margins)
        return pd, margins
    bounds = np.linspace(0, pair_total, workers + 1).astype(np.int64)
    margin_parts = [np.zeros(len(exps)) for _ in range(workers)]

    def run(w: int) -> None:
        _speedups.pair_scan(
            dist, exps, bounds[w], bounds[w + 1], pd[bounds[w] : bounds[w + 1]], margin_parts[w]
        )

    with ThreadPoolExecutor(max_workers=workers) as pool:
        list(pool.map(run, range(workers)))
    return pd, np.maximum.reduce(margin_parts)


def condensed_index(i: int, j: int, vertex_count: int) -> int:
    """Condensed (pdist-order) index of the unordered pair i < j."""
    if i > j:
        i, j = j, i
    return i * (2 * vertex_count - i - 1) // 2 + (j - i - 1)
