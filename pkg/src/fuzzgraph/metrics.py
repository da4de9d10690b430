"""Network metric suite for undirected crisp graphs.

Covers the degree distribution and its log-log power-law fit, shortest
path statistics (average path length, eccentricity, radius, diameter),
local clustering, degree assortativity, and a composed per-graph report.

Conventions, also embedded in every serialized report:

* average path length is the mean over *reachable* unordered pairs;
  a graph with no reachable pair reports 0,
* a vertex with no reachable peer has eccentricity 0, so a graph with
  isolated vertices has radius 0,
* vertices of degree < 2 contribute clustering 0,
* the power-law exponent comes from least squares on the log-log degree
  distribution, not from a maximum-likelihood fit.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, NamedTuple

import numpy as np

from . import kernels
from .graphs import CrispDigraph, UndirectedGraph, VertexId
from .ingest import undirected_projection

CONVENTIONS = {
    "apl": "mean shortest-path hop count over reachable unordered pairs; 0 when none",
    "isolated_eccentricity": "vertices with no reachable peer have eccentricity 0",
    "low_degree_clustering": "vertices with degree < 2 contribute clustering 0",
    "fit": "ordinary least squares on log p_k vs log k over degrees >= k_min",
}


@dataclass(frozen=True)
class DegreeDistribution:
    """Fraction of vertices per degree; zero-frequency degrees omitted."""

    entries: Mapping[int, float]

    @staticmethod
    def build(entries: Mapping[int, float]) -> "DegreeDistribution":
        items = {int(k): float(p) for k, p in sorted(entries.items())}
        if any(k < 0 for k in items):
            raise ValueError("degrees must be non-negative")
        if any(p <= 0.0 for p in items.values()):
            raise ValueError("fractions must be positive; omit zero-frequency degrees")
        total = sum(items.values())
        if items and abs(total - 1.0) > 1e-9:
            raise ValueError(f"fractions sum to {total}, expected 1")
        return DegreeDistribution(MappingProxyType(items))


def degree_distribution(g: UndirectedGraph) -> DegreeDistribution:
    """Histogram of vertex degrees, normalized by the vertex count."""
    n = g.vertex_count
    if n == 0:
        raise ValueError("degree distribution of an empty graph is undefined")
    counts = np.bincount(g.degrees)
    entries = {int(k): int(c) / n for k, c in enumerate(counts) if c > 0}
    return DegreeDistribution.build(entries)


@dataclass(frozen=True)
class PowerLawFit:
    """Log-log least-squares fit of p_k against k.

    ``alpha`` is the decay exponent (negated slope); ``k_min`` is the
    smallest degree that entered the fit.
    """

    alpha: float
    intercept: float
    r_squared: float
    k_min: int


def fit_power_law(dist: DegreeDistribution, k_min: int = 1) -> PowerLawFit:
    """Fit log p_k = intercept - alpha * log k over degrees >= k_min.

    Needs at least 3 distinct degrees with positive fraction; degree 0
    can never enter (log is undefined there).
    """
    floor = max(k_min, 1)
    points = [(k, p) for k, p in dist.entries.items() if k >= floor]
    if len(points) < 3:
        raise ValueError(
            f"power-law fit needs at least 3 distinct degrees >= {floor}, "
            f"found {len(points)}"
        )
    log_k = np.log([k for k, _ in points])
    log_p = np.log([p for _, p in points])
    slope, intercept = np.polyfit(log_k, log_p, 1)
    residuals = log_p - (slope * log_k + intercept)
    ss_res = float(np.sum(residuals**2))
    ss_tot = float(np.sum((log_p - log_p.mean()) ** 2))
    r_squared = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    r_squared = min(max(r_squared, 0.0), 1.0)
    return PowerLawFit(
        alpha=float(-slope),
        intercept=float(intercept),
        r_squared=r_squared,
        k_min=min(k for k, _ in points),
    )


def all_pairs_distances(g: UndirectedGraph) -> dict[tuple[VertexId, VertexId], int]:
    """Shortest hop counts for every reachable unordered pair (u < v).

    Plain BFS per source; meant for desk-scale graphs and oracle work.
    """
    table: dict[tuple[VertexId, VertexId], int] = {}
    nbrs = g.neighbors
    for src in g.vertices:
        dist = {src: 0}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for w in nbrs[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        for tgt, d in dist.items():
            if src < tgt:
                table[(src, tgt)] = d
    return table


class _DistanceSummary(NamedTuple):
    reachable_pairs: int
    average_path_length: float
    eccentricities: np.ndarray


def _distance_summary(g: UndirectedGraph) -> _DistanceSummary:
    indptr, indices = g.csr
    ordered_pairs, total, ecc = kernels.distance_stats(indptr, indices, g.vertex_count)
    apl = total / ordered_pairs if ordered_pairs else 0.0
    return _DistanceSummary(ordered_pairs // 2, apl, ecc)


def average_path_length(g: UndirectedGraph) -> float:
    """Mean hop distance over reachable unordered pairs; 0 when none."""
    return _distance_summary(g).average_path_length


def reachable_pair_count(g: UndirectedGraph) -> int:
    return _distance_summary(g).reachable_pairs


@dataclass(frozen=True)
class EccentricityReport:
    """Per-vertex eccentricity with its extremes.

    Radius is the minimum eccentricity, diameter the maximum.
    """

    eccentricities: Mapping[VertexId, int]
    radius: int
    diameter: int


def eccentricity_report(g: UndirectedGraph) -> EccentricityReport:
    """Eccentricity per vertex: the largest distance to any reachable
    vertex, 0 for vertices with no reachable peer."""
    if g.vertex_count == 0:
        raise ValueError("eccentricity of an empty graph is undefined")
    ecc = _distance_summary(g).eccentricities
    by_vertex = {v: int(ecc[i]) for i, v in enumerate(g.vertices)}
    return EccentricityReport(
        MappingProxyType(by_vertex), int(ecc.min()), int(ecc.max())
    )


def clustering_coefficient(g: UndirectedGraph, v: VertexId) -> float:
    """Edges among the neighbors of ``v`` over the possible count.

    Vertices of degree < 2 have no possible neighbor edge and return 0.
    """
    if v not in g.index:
        raise ValueError(f"unknown vertex {v!r}")
    nbrs = set(g.neighbors[v])
    d = len(nbrs)
    if d < 2:
        return 0.0
    links = sum(1 for u in nbrs for w in g.neighbors[u] if w != v and w in nbrs)
    return links / (d * (d - 1))


def local_clustering_profile(g: UndirectedGraph) -> np.ndarray:
    """Clustering coefficient per vertex, aligned with ``g.vertices``."""
    indptr, indices = g.csr
    return kernels.local_clustering(indptr, indices, g.vertex_count)


def average_clustering(g: UndirectedGraph) -> float:
    """Mean local clustering over all vertices (degree < 2 counts as 0)."""
    if g.vertex_count == 0:
        raise ValueError("average clustering of an empty graph is undefined")
    return float(local_clustering_profile(g).mean())


class ClusteringOutDegreePoint(NamedTuple):
    vertex: VertexId
    out_degree: int
    clustering: float


def clustering_vs_outdegree(g: CrispDigraph) -> tuple[ClusteringOutDegreePoint, ...]:
    """Per vertex: out-degree from the digraph, clustering from its
    undirected projection. Sorted by vertex id."""
    projection = undirected_projection(g)
    profile = local_clustering_profile(projection)
    index = projection.index
    return tuple(
        ClusteringOutDegreePoint(v, g.out_degree[v], float(profile[index[v]]))
        for v in g.vertices
    )


def assortativity(g: UndirectedGraph) -> float | None:
    """Pearson correlation of endpoint degrees over all edge orientations.

    Each undirected edge contributes both (deg u, deg v) and
    (deg v, deg u), which makes the statistic orientation-free. Returns
    None when endpoint-degree variance is 0 (regular graphs).
    """
    if g.edge_count == 0:
        raise ValueError("assortativity of an edgeless graph is undefined")
    deg = g.degrees
    idx = g.index
    us = np.fromiter((idx[u] for u, _ in g.edges), dtype=np.int64)
    vs = np.fromiter((idx[v] for _, v in g.edges), dtype=np.int64)
    x = np.concatenate([deg[us], deg[vs]]).astype(np.float64)
    y = np.concatenate([deg[vs], deg[us]]).astype(np.float64)
    dx = x - x.mean()
    dy = y - y.mean()
    denom = math.sqrt(float(np.sum(dx * dx)) * float(np.sum(dy * dy)))
    if denom == 0.0:
        return None
    return float(np.sum(dx * dy)) / denom


def average_degree(g: UndirectedGraph) -> float:
    """2|E| / |V|; the empty graph reports 0."""
    n = g.vertex_count
    return 2.0 * g.edge_count / n if n else 0.0


@dataclass(frozen=True)
class MetricsReport:
    """One row of the per-network comparison table."""

    vertex_count: int
    edge_count: int
    average_degree: float
    average_path_length: float
    reachable_pairs: int
    radius: int
    diameter: int
    assortativity: float | None
    average_clustering: float


def metrics_report(g: UndirectedGraph) -> MetricsReport:
    """Compose the full metric suite for a non-empty graph.

    Component errors propagate (an edgeless graph is rejected through
    the assortativity step); variance-zero assortativity is None.
    """
    if g.vertex_count == 0:
        raise ValueError("metrics of an empty graph are undefined")
    pairs, apl, ecc = _distance_summary(g)
    return MetricsReport(
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
        average_degree=average_degree(g),
        average_path_length=apl,
        reachable_pairs=pairs,
        radius=int(ecc.min()),
        diameter=int(ecc.max()),
        assortativity=assortativity(g),
        average_clustering=average_clustering(g),
    )


def report_to_json_dict(report: MetricsReport) -> dict:
    """Fixed-key JSON form of a report, conventions block included."""
    return {
        "vertex_count": report.vertex_count,
        "edge_count": report.edge_count,
        "average_degree": report.average_degree,
        "average_path_length": report.average_path_length,
        "reachable_pairs": report.reachable_pairs,
        "radius": report.radius,
        "diameter": report.diameter,
        "assortativity": report.assortativity,
        "average_clustering": report.average_clustering,
        "conventions": dict(CONVENTIONS),
    }


def render_report_json(report: MetricsReport) -> str:
    return json.dumps(report_to_json_dict(report), indent=2, sort_keys=True) + "\n"


def render_degree_distribution_csv(dist: DegreeDistribution) -> str:
    lines = ["degree,fraction"]
    lines += [f"{k},{p!r}" for k, p in dist.entries.items()]
    return "\n".join(lines) + "\n"


def render_clustering_outdegree_csv(
    points: tuple[ClusteringOutDegreePoint, ...]
) -> str:
    lines = ["out_degree,clustering"]
    lines += [f"{p.out_degree},{p.clustering!r}" for p in points]
    return "\n".join(lines) + "\n"
