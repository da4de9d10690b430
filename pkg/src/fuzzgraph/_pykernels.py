"""Pure-Python twin of the compiled kernels in ``_speedups``.

Bit-for-bit the same results, a couple of orders of magnitude slower on
large graphs; see ``benchmarks/bench_kernels.py``.
"""

from __future__ import annotations

import numpy as np


def distance_stats(indptr, indices, n: int):
    """BFS from every vertex.

    Returns (reachable ordered pair count, summed hop distance over those
    pairs, int32 eccentricity array). A vertex with no reachable peer has
    eccentricity 0.
    """
    ptr = indptr.tolist() if hasattr(indptr, "tolist") else list(indptr)
    adj = indices.tolist() if hasattr(indices, "tolist") else list(indices)
    ecc = [0] * n
    pairs = 0
    total = 0
    for src in range(n):
        dist = [-1] * n
        dist[src] = 0
        queue = [src]
        head = 0
        far = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            d = dist[u] + 1
            for j in range(ptr[u], ptr[u + 1]):
                w = adj[j]
                if dist[w] < 0:
                    dist[w] = d
                    queue.append(w)
                    pairs += 1
                    total += d
                    if d > far:
                        far = d
        ecc[src] = far
    return pairs, total, np.asarray(ecc, dtype=np.int32)


def local_clustering(indptr, indices, n: int):
    """Per-vertex clustering coefficient as a float64 array.

    Edges among a vertex's neighbors over the possible count; vertices of
    degree < 2 get 0.
    """
    ptr = indptr.tolist() if hasattr(indptr, "tolist") else list(indptr)
    adj = indices.tolist() if hasattr(indices, "tolist") else list(indices)
    out = np.zeros(n, dtype=np.float64)
    for v in range(n):
        deg = ptr[v + 1] - ptr[v]
        if deg < 2:
            continue
        nbrs = set(adj[ptr[v] : ptr[v + 1]])
        links = 0
        for u in adj[ptr[v] : ptr[v + 1]]:
            for w in adj[ptr[u] : ptr[u + 1]]:
                if w != v and w in nbrs:
                    links += 1
        # links counts each neighbor-neighbor edge twice.
        out[v] = links / (deg * (deg - 1))
    return out
