"""Fuzzy graph model: membership-graded vertices and edges.

A fuzzy graph pairs a vertex membership map (each vertex graded in
[0, 1]) with a symmetric edge membership relation bounded by the
minimum of the endpoint grades. Symmetry is structural: edge grades are
keyed by unordered vertex pair, so asking for (u, v) and (v, u) can
never disagree. An ordinary crisp graph is the special case where every
grade is exactly 1.

Values are immutable after construction and all operations are pure, so
concurrent readers are safe. Construction is permissive: everything
except an outright contradiction (the same unordered pair given two
different grades) is representable, and :func:`validate` reports which
model invariants a candidate violates instead of raising.

Membership grades are compared exactly. The text format below caps
grades at six fractional digits, which makes ties well defined for any
graph that round-trips through it.

Text format (UTF-8, line oriented)::

    # comment
    v <vertex-id> <grade>
    e <vertex-id> <vertex-id> <grade>

Vertex ids are non-empty tokens without whitespace; duplicate vertex or
edge lines are parse errors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import AmbiguousFuzzinessError, ParseError
from .graphs import CrispDigraph, VertexId

Pair = tuple[VertexId, VertexId]


def _canonical(u: VertexId, v: VertexId) -> Pair:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class FuzzyGraph:
    """Vertex membership map plus unordered-pair edge membership map.

    Build instances through :meth:`build`, which canonicalizes edge keys
    and drops grade-0 edges (grade 0 means "not in the relation").
    """

    vertex_memberships: Mapping[VertexId, float]
    edge_memberships: Mapping[Pair, float]
    reflexive_allowed: bool = False

    @staticmethod
    def build(
        vertex_memberships: Mapping[VertexId, float],
        edge_memberships: Mapping[tuple[VertexId, VertexId], float] | None = None,
        reflexive_allowed: bool = False,
    ) -> "FuzzyGraph":
        edges: dict[Pair, float] = {}
        for (u, v), grade in (edge_memberships or {}).items():
            key = _canonical(u, v)
            if key in edges and edges[key] != grade:
                raise ValueError(
                    f"conflicting grades for pair {key}: {edges[key]} vs {grade}"
                )
            edges[key] = float(grade)
        verts = {v: float(s) for v, s in sorted(vertex_memberships.items())}
        kept = {p: g for p, g in sorted(edges.items()) if g != 0.0}
        return FuzzyGraph(
            MappingProxyType(verts), MappingProxyType(kept), reflexive_allowed
        )


@dataclass(frozen=True)
class Violation:
    """One broken model invariant, with enough context to locate it."""

    kind: str
    subject: str
    detail: str

    def __str__(self) -> str:
        return f"{self.kind} at {self.subject}: {self.detail}"


def validate(g: FuzzyGraph) -> list[Violation]:
    """Check every model invariant; an empty list means the graph is ok.

    Reported kinds: vertex grade out of [0, 1], edge grade out of [0, 1],
    edge endpoint missing from the vertex map, edge grade above the
    minimum of its endpoint grades, and (unless permitted) a self-pair.
    """
    found: list[Violation] = []
    for v, s in g.vertex_memberships.items():
        if not 0.0 <= s <= 1.0:
            found.append(Violation("vertex_grade_range", v, f"grade {s} outside [0, 1]"))
    for (u, v), m in g.edge_memberships.items():
        where = f"{u}--{v}"
        if u == v and not g.reflexive_allowed:
            found.append(Violation("self_pair", where, "self-pairs are not permitted"))
        if not 0.0 <= m <= 1.0:
            found.append(Violation("edge_grade_range", where, f"grade {m} outside [0, 1]"))
        missing = [x for x in {u, v} if x not in g.vertex_memberships]
        for x in sorted(missing):
            found.append(Violation("missing_endpoint", where, f"vertex {x!r} not declared"))
        if not missing:
            bound = min(g.vertex_memberships[u], g.vertex_memberships[v])
            if m > bound:
                found.append(
                    Violation(
                        "edge_grade_bound",
                        where,
                        f"edge grade {m} exceeds min of endpoint grades {bound}",
                    )
                )
    return found


def from_crisp(g: CrispDigraph) -> FuzzyGraph:
    """Embed a crisp digraph: every vertex and undirected edge gets grade 1."""
    verts = {v: 1.0 for v in g.vertices}
    edges = {_canonical(u, v): 1.0 for u, v in g.arcs}
    return FuzzyGraph.build(verts, edges)


def is_partial_subgraph(h: FuzzyGraph, g: FuzzyGraph) -> bool:
    """True iff every grade of ``h`` is bounded by the matching grade of
    ``g``, treating absent vertices and edges as grade 0."""
    for v, s in h.vertex_memberships.items():
        if s > g.vertex_memberships.get(v, 0.0):
            return False
    for e, m in h.edge_memberships.items():
        if m > g.edge_memberships.get(e, 0.0):
            return False
    return True


def is_spanning_subgraph(h: FuzzyGraph, g: FuzzyGraph) -> bool:
    """True iff the vertex maps agree exactly and edge grades are bounded."""
    keys = h.vertex_memberships.keys() | g.vertex_memberships.keys()
    for v in keys:
        if h.vertex_memberships.get(v, 0.0) != g.vertex_memberships.get(v, 0.0):
            return False
    for e, m in h.edge_memberships.items():
        if m > g.edge_memberships.get(e, 0.0):
            return False
    return True


def induced_subgraph(g: FuzzyGraph, restriction: Mapping[VertexId, float]) -> FuzzyGraph:
    """Maximal subgraph carried by ``restriction``.

    The restriction must stay under the graph's vertex grades pointwise.
    Each surviving edge gets the minimum of its endpoint restriction
    grades and its original grade.
    """
    for v, s in restriction.items():
        if v not in g.vertex_memberships:
            raise ValueError(f"vertex {v!r} is not in the graph")
        if s > g.vertex_memberships[v]:
            raise ValueError(
                f"restriction grade {s} for vertex {v!r} exceeds the "
                f"graph's grade {g.vertex_memberships[v]}"
            )
    edges: dict[Pair, float] = {}
    for (u, v), m in g.edge_memberships.items():
        if u in restriction and v in restriction:
            grade = min(restriction[u], restriction[v], m)
            if grade > 0.0:
                edges[(u, v)] = grade
    return FuzzyGraph.build(dict(restriction), edges, g.reflexive_allowed)


class GraphClass(Enum):
    """Five-type fuzziness taxonomy plus the crisp degenerate case."""

    CRISP = "crisp"
    TYPE_I = "type-i"
    TYPE_II = "type-ii"
    TYPE_III = "type-iii"
    TYPE_IV = "type-iv"
    TYPE_V = "type-v"


@dataclass(frozen=True)
class GraphAnnotation:
    """Which aspects of a graph are modelled as fuzzy.

    Annotations are explicit rather than inferred from grades: a graph
    whose grades all happen to equal 1 may still be conceptually fuzzy.
    """

    fuzzy_vertex_memberships: bool = False
    fuzzy_edge_memberships: bool = False
    fuzzy_connectivity: bool = False
    fuzzy_edge_weights: bool = False

    def fuzzy_aspects(self) -> tuple[str, ...]:
        names = (
            ("vertex memberships", self.fuzzy_vertex_memberships),
            ("edge memberships", self.fuzzy_edge_memberships),
            ("connectivity", self.fuzzy_connectivity),
            ("edge weights", self.fuzzy_edge_weights),
        )
        return tuple(name for name, flag in names if flag)


_CLASS_BY_ASPECT = {
    "edge memberships": GraphClass.TYPE_II,
    "connectivity": GraphClass.TYPE_III,
    "vertex memberships": GraphClass.TYPE_IV,
    "edge weights": GraphClass.TYPE_V,
}


def classify(annotation: GraphAnnotation) -> GraphClass:
    """Place an annotated graph in the taxonomy.

    Exactly one fuzzy aspect maps to types II-V; no fuzzy aspect is
    crisp. Type I (a fuzzy collection of crisp graphs) is a label only:
    no single-graph annotation produces it. More than one fuzzy aspect
    raises :class:`AmbiguousFuzzinessError` naming the aspects.
    """
    aspects = annotation.fuzzy_aspects()
    if not aspects:
        return GraphClass.CRISP
    if len(aspects) > 1:
        raise AmbiguousFuzzinessError(aspects)
    return _CLASS_BY_ASPECT[aspects[0]]


def alpha_cut(g: FuzzyGraph, alpha: float) -> CrispDigraph:
    """Crisp realization: keep vertices and edges graded at least ``alpha``.

    Kept edges are emitted as symmetric arc pairs. ``alpha`` must lie in
    (0, 1]; a cut at 0 would admit zero-grade phantom elements. Assumes
    a graph that validates ok. Reflexive pairs, when permitted, are not
    representable as arcs and are skipped.
    """
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must be in (0, 1], got {alpha}")
    kept = {v for v, s in g.vertex_memberships.items() if s >= alpha}
    arcs: list[tuple[VertexId, VertexId]] = []
    for (u, v), m in g.edge_memberships.items():
        if u != v and m >= alpha and u in kept and v in kept:
            arcs.append((u, v))
            arcs.append((v, u))
    return CrispDigraph.build(arcs, vertices=kept)


_GRADE_RE = re.compile(r"-?[0-9]+(\.[0-9]{1,6})?$")


def _parse_grade(token: str, line_no: int) -> float:
    if not _GRADE_RE.match(token):
        raise ParseError(
            line_no,
            f"bad membership grade {token!r}: expected decimal with at most "
            "6 fractional digits",
        )
    return float(token)


def parse_fuzzy_graph(text: str | bytes) -> FuzzyGraph:
    """Parse the line-oriented fuzzy graph text format.

    Structural problems (bad directives, duplicate lines, malformed
    grades) raise :class:`ParseError` with the line number. Model
    invariants are *not* enforced here; run :func:`validate` on the
    result.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    verts: dict[VertexId, float] = {}
    edges: dict[Pair, float] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "v":
            if len(tokens) != 3:
                raise ParseError(line_no, f"vertex line needs 3 tokens, got {len(tokens)}")
            _, vid, grade = tokens
            if vid in verts:
                raise ParseError(line_no, f"duplicate vertex {vid!r}")
            verts[vid] = _parse_grade(grade, line_no)
        elif tokens[0] == "e":
            if len(tokens) != 4:
                raise ParseError(line_no, f"edge line needs 4 tokens, got {len(tokens)}")
            _, u, v, grade = tokens
            key = _canonical(u, v)
            if key in edges:
                raise ParseError(line_no, f"duplicate edge {u!r} -- {v!r}")
            edges[key] = _parse_grade(grade, line_no)
        else:
            raise ParseError(line_no, f"unknown directive {tokens[0]!r}")
    return FuzzyGraph.build(verts, edges)


def format_grade(value: float) -> str:
    """Render a grade with up to six fractional digits, trimmed."""
    out = f"{value:.6f}".rstrip("0").rstrip(".")
    return out if out else "0"


def serialize_fuzzy_graph(g: FuzzyGraph) -> str:
    """Emit the text format: sorted vertex lines, then sorted edge lines.

    Grades are written with at most six fractional digits, so graphs
    whose grades fit that precision round-trip exactly.
    """
    lines = [f"v {v} {format_grade(s)}" for v, s in sorted(g.vertex_memberships.items())]
    lines += [
        f"e {u} {v} {format_grade(m)}" for (u, v), m in sorted(g.edge_memberships.items())
    ]
    return "\n".join(lines) + ("\n" if lines else "")
