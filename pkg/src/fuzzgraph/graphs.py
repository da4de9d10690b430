"""Crisp graph containers used throughout the package.

Both containers are immutable value types: construction canonicalizes
vertex and edge order, so two graphs built from the same data compare
equal regardless of input iteration order. Adjacency structures (CSR
arrays for the kernels, neighbor maps for desk-scale work) are built
lazily and cached on the instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Collection, Iterable

import numpy as np

VertexId = str
Arc = tuple[VertexId, VertexId]
Edge = tuple[VertexId, VertexId]


@dataclass(frozen=True)
class CrispDigraph:
    """Directed graph as ingested from source/destination rows.

    ``vertices`` and ``arcs`` are sorted tuples; self-arcs are rejected.
    """

    vertices: tuple[VertexId, ...]
    arcs: tuple[Arc, ...]

    @staticmethod
    def build(arcs: Iterable[Arc], vertices: Iterable[VertexId] = ()) -> "CrispDigraph":
        """Canonicalize: dedupe arcs, collect endpoints, sort everything."""
        verts = set(vertices)
        arc_set: set[Arc] = set()
        for u, v in arcs:
            if u == v:
                raise ValueError(f"self-arc on {u!r} is not allowed")
            arc_set.add((u, v))
            verts.add(u)
            verts.add(v)
        return CrispDigraph(tuple(sorted(verts)), tuple(sorted(arc_set)))

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    @cached_property
    def vertex_set(self) -> frozenset[VertexId]:
        return frozenset(self.vertices)

    @cached_property
    def out_degree(self) -> dict[VertexId, int]:
        deg = {v: 0 for v in self.vertices}
        for u, _ in self.arcs:
            deg[u] += 1
        return deg

    @cached_property
    def in_degree(self) -> dict[VertexId, int]:
        deg = {v: 0 for v in self.vertices}
        for _, v in self.arcs:
            deg[v] += 1
        return deg

    def total_degree(self, v: VertexId) -> int:
        """In-degree plus out-degree."""
        return self.in_degree[v] + self.out_degree[v]


@dataclass(frozen=True)
class UndirectedGraph:
    """Undirected crisp graph: sorted vertices, sorted (min, max) edges."""

    vertices: tuple[VertexId, ...]
    edges: tuple[Edge, ...]

    @staticmethod
    def build(
        edges: Iterable[tuple[VertexId, VertexId]],
        vertices: Iterable[VertexId] = (),
    ) -> "UndirectedGraph":
        """Canonicalize endpoint order, dedupe, sort; reject self-loops."""
        verts = set(vertices)
        edge_set: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop on {u!r} is not allowed")
            edge_set.add((u, v) if u < v else (v, u))
            verts.add(u)
            verts.add(v)
        return UndirectedGraph(tuple(sorted(verts)), tuple(sorted(edge_set)))

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def index(self) -> dict[VertexId, int]:
        """Vertex id -> dense index in lexicographic order."""
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Symmetric CSR adjacency: (indptr, indices), both int32.

        Neighbor lists are sorted by index, which keeps every kernel
        deterministic.
        """
        n = len(self.vertices)
        indptr = np.zeros(n + 1, dtype=np.int32)
        if not self.edges:
            return indptr, np.empty(0, dtype=np.int32)
        idx = self.index
        us = np.fromiter((idx[u] for u, _ in self.edges), dtype=np.int32)
        vs = np.fromiter((idx[v] for _, v in self.edges), dtype=np.int32)
        heads = np.concatenate([us, vs])
        tails = np.concatenate([vs, us])
        order = np.lexsort((tails, heads))
        indices = np.ascontiguousarray(tails[order])
        counts = np.bincount(heads, minlength=n)
        indptr[1:] = np.cumsum(counts, dtype=np.int64).astype(np.int32)
        return indptr, indices

    @cached_property
    def degrees(self) -> np.ndarray:
        """Vertex degrees by dense index."""
        indptr, _ = self.csr
        return np.diff(indptr).astype(np.int64)

    @cached_property
    def neighbors(self) -> dict[VertexId, tuple[VertexId, ...]]:
        """Sorted neighbor ids per vertex."""
        nbrs: dict[VertexId, list[VertexId]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return {v: tuple(sorted(ns)) for v, ns in nbrs.items()}

    def degree(self, v: VertexId) -> int:
        return len(self.neighbors[v])

    def remove_vertices(self, victims: Collection[VertexId]) -> "UndirectedGraph":
        """Induced subgraph on the surviving vertices (order is preserved)."""
        gone = set(victims)
        verts = tuple(v for v in self.vertices if v not in gone)
        edges = tuple(e for e in self.edges if e[0] not in gone and e[1] not in gone)
        return UndirectedGraph(verts, edges)
