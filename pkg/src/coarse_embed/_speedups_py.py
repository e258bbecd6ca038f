"""Numpy fallback for the compiled kernels in ``_speedups``.

Both backends implement the same two contracts:

* ``bfs_all_pairs(indptr, indices, vertex_count)``: unweighted all-pairs
  shortest paths over a CSR adjacency, -1 marking unreachable vertices.
* ``pair_scan(dist, exponents)``: for every unordered vertex pair, the
  embedding distance ``sqrt(sum_n ||t_n(x) - t_n(y)||_{p_n}^2)`` where
  ``t_n(x)(z) = max(1 - d(x,z)/n, 0)``, in condensed (pdist) order, plus
  the per-block maximum of ``||.||_{p_n} - ||.||_inf`` over all pairs.

Block norms are evaluated in rescaled form (factor out the sup) so large
exponents neither overflow nor underflow.
"""
from collections import deque

import numpy as np

_ROW_CHUNK = 16


def bfs_all_pairs(indptr: np.ndarray, indices: np.ndarray, vertex_count: int) -> np.ndarray:
    out = np.full((vertex_count, vertex_count), -1, dtype=np.int64)
    neighbors = [
        [int(w) for w in indices[indptr[u] : indptr[u + 1]]] for u in range(vertex_count)
    ]
    for src in range(vertex_count):
        row = out[src]
        row[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            du = row[u] + 1
            for w in neighbors[u]:
                if row[w] < 0:
                    row[w] = du
                    queue.append(w)
    return out


def pair_scan(dist: np.ndarray, exponents: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    v_count = dist.shape[0]
    depth = exponents.shape[0]
    pair_total = v_count * (v_count - 1) // 2
    pd_squared = np.zeros(pair_total)
    margins = np.zeros(depth)
    for n in range(1, depth + 1):
        p = exponents[n - 1]
        tent = 1.0 - dist / float(n)
        np.clip(tent, 0.0, None, out=tent)
        for lo in range(0, v_count, _ROW_CHUNK):
            hi = min(lo + _ROW_CHUNK, v_count)
            diff = np.abs(tent[lo:hi, None, :] - tent[None, :, :])
            sup = diff.max(axis=2)
            if np.isinf(p):
                block = sup
            else:
                with np.errstate(divide="ignore", invalid="ignore"):
                    scaled = diff / sup[:, :, None]
                scaled[~np.isfinite(scaled)] = 0.0
                block = sup * np.power(scaled, p).sum(axis=2) ** (1.0 / p)
                block[sup == 0.0] = 0.0
            # rows with column index <= row repeat symmetric pairs; the margin
            # max is unaffected and only the j > i slice feeds pd_squared
            chunk_margin = (block - sup).max()
            if chunk_margin > margins[n - 1]:
                margins[n - 1] = chunk_margin
            for i in range(lo, hi):
                if i + 1 >= v_count:
                    continue
                k0 = i * (2 * v_count - i - 1) // 2
                row = block[i - lo, i + 1 :]
                pd_squared[k0 : k0 + row.shape[0]] += row * row
    return np.sqrt(pd_squared), margins
