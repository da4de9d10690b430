"""Deterministic synthetic topologies for desk-scale experiments.

Two families:

* preferential attachment, which grows a scale-free graph (dense,
  peer-to-peer-like when the attachment count is high), and
* core-periphery, a complete core with small cliques hanging off single
  bridge edges (a densely connected center with sparse satellite
  clusters, mixnet-like).

Both are pure functions of their spec, so the same spec always yields
the identical graph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graphs import UndirectedGraph


@dataclass(frozen=True)
class PreferentialAttachmentSpec:
    n: int
    m: int
    seed: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be at least 1")
        if self.n <= self.m:
            raise ValueError("n must exceed m")


@dataclass(frozen=True)
class CorePeripherySpec:
    core_size: int
    cluster_count: int
    cluster_size: int
    seed: int = 0  # accepted for interface symmetry; construction is deterministic

    def __post_init__(self):
        if self.core_size < 3:
            raise ValueError("core_size must be at least 3")
        if self.cluster_size < 2:
            raise ValueError("cluster_size must be at least 2")
        if self.cluster_count < 0:
            raise ValueError("cluster_count must be non-negative")


SynthSpec = PreferentialAttachmentSpec | CorePeripherySpec


def preferential_attachment(n: int, m: int, seed: int) -> UndirectedGraph:
    """Grow from a clique on m+1 vertices; each newcomer attaches to m
    distinct existing vertices sampled proportionally to current degree.

    Edge count is exactly m(m+1)/2 + (n-m-1)m. Vertex ids are decimal
    strings of the creation index.
    """
    PreferentialAttachmentSpec(n, m, seed)
    rng = random.Random(seed)
    edges = [(i, j) for i in range(m + 1) for j in range(i + 1, m + 1)]
    # One slot per unit of degree; sampling a slot is sampling by degree.
    slots = [v for v in range(m + 1) for _ in range(m)]
    for new in range(m + 1, n):
        targets: set[int] = set()
        while len(targets) < m:
            targets.add(slots[rng.randrange(len(slots))])
        chosen = sorted(targets)
        edges.extend((tgt, new) for tgt in chosen)
        slots.extend(chosen)
        slots.extend([new] * m)
    return UndirectedGraph.build(
        ((str(u), str(v)) for u, v in edges), vertices=(str(v) for v in range(n))
    )


def core_periphery(
    core_size: int, cluster_count: int, cluster_size: int
) -> UndirectedGraph:
    """Complete core plus satellite cliques, one bridge edge each.

    Cluster k bridges its lowest-index vertex to core vertex k mod
    core_size (round-robin), so construction has no random freedom.
    """
    CorePeripherySpec(core_size, cluster_count, cluster_size)
    edges = [(i, j) for i in range(core_size) for j in range(i + 1, core_size)]
    for k in range(cluster_count):
        base = core_size + k * cluster_size
        members = range(base, base + cluster_size)
        edges.extend((i, j) for i in members for j in members if i < j)
        edges.append((k % core_size, base))
    total = core_size + cluster_count * cluster_size
    return UndirectedGraph.build(
        ((str(u), str(v)) for u, v in edges), vertices=(str(v) for v in range(total))
    )


def generate(spec: SynthSpec) -> UndirectedGraph:
    """Dispatch on the spec type."""
    if isinstance(spec, PreferentialAttachmentSpec):
        return preferential_attachment(spec.n, spec.m, spec.seed)
    if isinstance(spec, CorePeripherySpec):
        return core_periphery(spec.core_size, spec.cluster_count, spec.cluster_size)
    raise TypeError(f"unknown spec type {type(spec).__name__}")
