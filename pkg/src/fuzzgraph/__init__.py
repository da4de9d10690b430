"""Fuzzy-graph modelling of network topologies.

Crisp graph containers, a membership-graded fuzzy graph model, random
node percolation with a sweep harness, a network-metric suite, and
deterministic synthetic generators. Hot kernels run compiled when the
extension is built, with a pure-Python fallback selected at import
(``fuzzgraph.kernels.IMPLEMENTATION`` says which).
"""

__version__ = "0.1.0"

from .core import (
    FuzzyGraph,
    GraphAnnotation,
    GraphClass,
    Violation,
    alpha_cut,
    classify,
    from_crisp,
    induced_subgraph,
    is_partial_subgraph,
    is_spanning_subgraph,
    parse_fuzzy_graph,
    serialize_fuzzy_graph,
    validate,
)
from .graphs import CrispDigraph, UndirectedGraph
from .ingest import (
    ComponentDecomposition,
    component_decomposition,
    filter_degree_range,
    giant_component,
    parse_edge_list,
    read_edge_list,
    serialize_edge_list,
    undirected_projection,
)
from .metrics import (
    DegreeDistribution,
    EccentricityReport,
    MetricsReport,
    PowerLawFit,
    all_pairs_distances,
    assortativity,
    average_clustering,
    average_degree,
    average_path_length,
    clustering_coefficient,
    clustering_vs_outdegree,
    degree_distribution,
    eccentricity_report,
    fit_power_law,
    metrics_report,
)
from .percolation import (
    PercolationOutcome,
    PercolationSpec,
    SweepPoint,
    SweepSeries,
    derive_seed,
    percolate,
    removal_count_for_fraction,
    sweep,
)
from .synth import (
    CorePeripherySpec,
    PreferentialAttachmentSpec,
    core_periphery,
    generate,
    preferential_attachment,
)
