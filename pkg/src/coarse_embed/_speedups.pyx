# cython: language_level=3
"""Compiled kernels: per-source BFS and the all-pairs block-norm scan.

Contracts match ``_speedups_py`` exactly; see that module for the
definitions. ``pair_scan`` here additionally takes a condensed pair range
[start, stop) so the dispatcher can split work across threads (the loops
run with the GIL released).
"""
from libc.math cimport INFINITY, fabs, pow, sqrt
from libc.stdlib cimport free, malloc


def bfs_all_pairs(const int[::1] indptr, const int[::1] indices,
                  long long[:, ::1] out):
    cdef Py_ssize_t n = out.shape[0]
    cdef int* queue = <int*> malloc(n * sizeof(int))
    if queue == NULL:
        raise MemoryError()
    cdef Py_ssize_t src, col, edge, head, tail
    cdef int u, w
    cdef long long du
    try:
        with nogil:
            for src in range(n):
                for col in range(n):
                    out[src, col] = -1
                out[src, src] = 0
                queue[0] = <int> src
                head = 0
                tail = 1
                while head < tail:
                    u = queue[head]
                    head += 1
                    du = out[src, u] + 1
                    for edge in range(indptr[u], indptr[u + 1]):
                        w = indices[edge]
                        if out[src, w] < 0:
                            out[src, w] = du
                            queue[tail] = w
                            tail += 1
    finally:
        free(queue)


def pair_scan(const double[:, ::1] dist, const double[::1] exponents,
              Py_ssize_t start, Py_ssize_t stop,
              double[::1] out_pd, double[::1] out_margin):
    """Scan condensed pairs [start, stop) writing distances and margins.

    out_pd must have stop - start slots; out_margin has one slot per block
    and is raised (never lowered) as larger lp-minus-sup gaps are seen.
    """
    cdef Py_ssize_t v_count = dist.shape[0]
    cdef Py_ssize_t depth = exponents.shape[0]
    cdef Py_ssize_t i, j, k, z, n
    cdef double nf, p, dx, dy, tx, ty, v, sup, acc, block, pd2, gap
    if stop <= start:
        return
    # locate the (row, col) of the first condensed index
    i = 0
    k = 0
    while k + (v_count - i - 1) <= start:
        k += v_count - i - 1
        i += 1
    j = i + 1 + (start - k)
    with nogil:
        for k in range(start, stop):
            pd2 = 0.0
            for n in range(1, depth + 1):
                nf = <double> n
                p = exponents[n - 1]
                sup = 0.0
                for z in range(v_count):
                    dx = dist[i, z]
                    dy = dist[j, z]
                    if dx < nf or dy < nf:
                        tx = 1.0 - dx / nf
                        if tx < 0.0:
                            tx = 0.0
                        ty = 1.0 - dy / nf
                        if ty < 0.0:
                            ty = 0.0
                        v = fabs(tx - ty)
                        if v > sup:
                            sup = v
                if sup > 0.0:
                    if p == INFINITY:
                        block = sup
                    else:
                        acc = 0.0
                        for z in range(v_count):
                            dx = dist[i, z]
                            dy = dist[j, z]
                            if dx < nf or dy < nf:
                                tx = 1.0 - dx / nf
                                if tx < 0.0:
                                    tx = 0.0
                                ty = 1.0 - dy / nf
                                if ty < 0.0:
                                    ty = 0.0
                                v = fabs(tx - ty)
                                if v > 0.0:
                                    acc += pow(v / sup, p)
                        block = sup * pow(acc, 1.0 / p)
                    pd2 += block * block
                    gap = block - sup
                    if gap > out_margin[n - 1]:
                        out_margin[n - 1] = gap
            out_pd[k - start] = sqrt(pd2)
            j += 1
            if j == v_count:
                i += 1
                j = i + 1
