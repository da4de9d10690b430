"""Edge-list ingestion and the dataset filtering pipeline.

Input is CSV with one ``source,destination`` arc per row (header
optional, LF or CRLF). Filtering follows the crawl-cleanup recipe:
degree-range restriction and giant-component extraction, where the
giant component is taken on the undirected projection (weak
connectivity) so path metrics downstream stay meaningful.

All functions are pure over immutable graphs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from pathlib import Path

from .errors import ParseError
from .graphs import Arc, CrispDigraph, UndirectedGraph, VertexId

_HEADER = ("source", "destination")


def parse_edge_list(data: str | bytes) -> CrispDigraph:
    """Parse CSV rows into a digraph.

    The header row is skipped when the first non-empty line reads
    ``source,destination`` (case-insensitive). Malformed rows, self-arcs
    and duplicate arcs raise :class:`ParseError` with their line number.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    arcs: list[Arc] = []
    seen: set[Arc] = set()
    saw_data = False
    for line_no, raw in enumerate(data.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        fields = [f.strip() for f in line.split(",")]
        if not saw_data and tuple(f.lower() for f in fields) == _HEADER:
            saw_data = True
            continue
        saw_data = True
        if len(fields) != 2 or not all(fields):
            raise ParseError(line_no, f"expected 2 non-empty columns, got {line!r}")
        u, v = fields
        if u == v:
            raise ParseError(line_no, f"self-arc on {u!r}")
        if (u, v) in seen:
            raise ParseError(line_no, f"duplicate arc {u!r} -> {v!r}")
        seen.add((u, v))
        arcs.append((u, v))
    return CrispDigraph.build(arcs)


def read_edge_list(path: str | Path) -> CrispDigraph:
    return parse_edge_list(Path(path).read_bytes())


def serialize_edge_list(g: CrispDigraph | UndirectedGraph) -> str:
    """Canonical CSV: ``source,destination`` header, sorted rows, LF.

    Undirected graphs emit each edge once with the lexicographically
    smaller endpoint as source. Isolated vertices are not representable.
    """
    rows = g.arcs if isinstance(g, CrispDigraph) else g.edges
    lines = ["source,destination"]
    lines += [f"{u},{v}" for u, v in rows]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ComponentDecomposition:
    """Weakly-connected components, largest first.

    Components partition the vertex set; ties in size are ordered by
    smallest contained vertex id.
    """

    components: tuple[tuple[VertexId, ...], ...]


def _undirected_neighbors(g: CrispDigraph) -> dict[VertexId, set[VertexId]]:
    nbrs: dict[VertexId, set[VertexId]] = {v: set() for v in g.vertices}
    for u, v in g.arcs:
        nbrs[u].add(v)
        nbrs[v].add(u)
    return nbrs


def component_decomposition(g: CrispDigraph) -> ComponentDecomposition:
    """Weak components of the undirected projection, via BFS."""
    nbrs = _undirected_neighbors(g)
    unvisited = set(g.vertices)
    comps: list[tuple[VertexId, ...]] = []
    for start in g.vertices:
        if start not in unvisited:
            continue
        unvisited.discard(start)
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in nbrs[u]:
                if w in unvisited:
                    unvisited.discard(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(tuple(sorted(comp)))
    comps.sort(key=lambda c: (-len(c), c[0]))
    return ComponentDecomposition(tuple(comps))


def giant_component(g: CrispDigraph) -> CrispDigraph:
    """Induced subgraph on the largest weak component.

    Size ties break toward the component containing the smallest vertex
    id. The empty graph maps to itself.
    """
    if not g.vertices:
        return g
    keep = set(component_decomposition(g).components[0])
    arcs = [(u, v) for u, v in g.arcs if u in keep and v in keep]
    return CrispDigraph.build(arcs, vertices=keep)


def filter_degree_range(
    g: CrispDigraph, min_total_degree: int = 0, max_total_degree: int | None = None
) -> CrispDigraph:
    """Drop vertices whose total degree (in + out, on the original graph)
    falls outside [min, max], along with their incident arcs.

    Single pass by design: degrees are not recomputed after removal, so
    the result is deterministic and independent of removal order.
    """
    if max_total_degree is not None and min_total_degree > max_total_degree:
        raise ValueError(
            f"min_total_degree {min_total_degree} exceeds max {max_total_degree}"
        )
    keep = {
        v
        for v in g.vertices
        if g.total_degree(v) >= min_total_degree
        and (max_total_degree is None or g.total_degree(v) <= max_total_degree)
    }
    arcs = [(u, v) for u, v in g.arcs if u in keep and v in keep]
    return CrispDigraph.build(arcs, vertices=keep)


def undirected_projection(g: CrispDigraph) -> UndirectedGraph:
    """Collapse arcs to undirected edges; antiparallel arcs merge."""
    edges = {(u, v) if u < v else (v, u) for u, v in g.arcs}
    return UndirectedGraph.build(edges, vertices=g.vertices)
