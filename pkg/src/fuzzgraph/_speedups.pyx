# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled graph kernels over int32 CSR adjacency arrays.

Same contracts as ``fuzzgraph._pykernels``; which module backs
``fuzzgraph.kernels`` is decided at import time.
"""

import numpy as np


def distance_stats(const int[::1] indptr, const int[::1] indices, Py_ssize_t n):
    """BFS from every vertex.

    Returns (reachable ordered pair count, summed hop distance over those
    pairs, int32 eccentricity array). A vertex with no reachable peer has
    eccentricity 0.
    """
    dist_arr = np.empty(n, dtype=np.int32)
    queue_arr = np.empty(n, dtype=np.int32)
    ecc_arr = np.zeros(n, dtype=np.int32)
    cdef int[::1] dist = dist_arr
    cdef int[::1] queue = queue_arr
    cdef int[::1] ecc = ecc_arr
    cdef Py_ssize_t src, j, head, tail
    cdef int u, w, d, far
    cdef long long pairs = 0, total = 0
    for src in range(n):
        for j in range(n):
            dist[j] = -1
        dist[src] = 0
        queue[0] = <int> src
        head = 0
        tail = 1
        far = 0
        while head < tail:
            u = queue[head]
            head += 1
            d = dist[u] + 1
            for j in range(indptr[u], indptr[u + 1]):
                w = indices[j]
                if dist[w] < 0:
                    dist[w] = d
                    queue[tail] = w
                    tail += 1
                    pairs += 1
                    total += d
                    if d > far:
                        far = d
        ecc[src] = far
    return int(pairs), int(total), ecc_arr


def local_clustering(const int[::1] indptr, const int[::1] indices, Py_ssize_t n):
    """Per-vertex clustering coefficient as a float64 array.

    Edges among a vertex's neighbors over the possible count; vertices of
    degree < 2 get 0.
    """
    out_arr = np.zeros(n, dtype=np.float64)
    mark_arr = np.zeros(n, dtype=np.uint8)
    cdef double[::1] out = out_arr
    cdef unsigned char[::1] mark = mark_arr
    cdef Py_ssize_t v, j, k
    cdef int u, w
    cdef long long links, deg
    for v in range(n):
        deg = indptr[v + 1] - indptr[v]
        if deg < 2:
            continue
        for j in range(indptr[v], indptr[v + 1]):
            mark[indices[j]] = 1
        links = 0
        for j in range(indptr[v], indptr[v + 1]):
            u = indices[j]
            for k in range(indptr[u], indptr[u + 1]):
                w = indices[k]
                if w != v and mark[w]:
                    links += 1
        for j in range(indptr[v], indptr[v + 1]):
            mark[indices[j]] = 0
        # links counts each neighbor-neighbor edge twice.
        out[v] = links / <double> (deg * (deg - 1))
    return out_arr
