import pytest

from conftest import random_undirected
from fuzzgraph.graphs import UndirectedGraph
from fuzzgraph.percolation import (
    PercolationSpec,
    derive_seed,
    percolate,
    removal_count_for_fraction,
    render_sweep_csv,
    sweep,
    sweep_metadata,
)

TRIANGLE = UndirectedGraph.build([("a", "b"), ("b", "c"), ("a", "c")])


class TestPercolate:
    def test_remove_nothing(self):
        out = percolate(TRIANGLE, PercolationSpec(0, seed=1))
        assert out.graph == TRIANGLE and out.removed == ()

    def test_remove_everything(self):
        out = percolate(TRIANGLE, PercolationSpec(3, seed=1))
        assert out.graph.vertex_count == 0
        assert sorted(out.removed) == ["a", "b", "c"]

    def test_triangle_single_removal(self):
        # All three choices are isomorphic: 2 vertices, 1 edge left.
        for seed in range(10):
            out = percolate(TRIANGLE, PercolationSpec(1, seed=seed))
            assert out.graph.vertex_count == 2
            assert out.graph.edge_count == 1

    def test_too_many_rejected(self):
        with pytest.raises(ValueError):
            percolate(TRIANGLE, PercolationSpec(4, seed=1))

    def test_deterministic(self, rng):
        for _ in range(20):
            g = random_undirected(rng)
            t = rng.randint(0, g.vertex_count)
            spec = PercolationSpec(t, seed=rng.randrange(2**64))
            assert percolate(g, spec) == percolate(g, spec)

    def test_matches_set_difference_reconstruction(self, rng):
        for _ in range(50):
            g = random_undirected(rng)
            t = rng.randint(0, g.vertex_count)
            out = percolate(g, PercolationSpec(t, seed=rng.randrange(2**64)))
            gone = set(out.removed)
            survivors = [v for v in g.vertices if v not in gone]
            edges = [e for e in g.edges if e[0] not in gone and e[1] not in gone]
            assert out.graph == UndirectedGraph.build(edges, vertices=survivors)
            assert len(out.removed) == t
            assert gone.isdisjoint(out.graph.vertices)

    def test_order_preserving_relabel_removes_same_ranks(self, rng):
        g = random_undirected(rng, max_n=7)
        spec = PercolationSpec(2, seed=99)
        out = percolate(g, spec)
        relabeled = UndirectedGraph.build(
            [("x" + u, "x" + v) for u, v in g.edges],
            vertices=["x" + v for v in g.vertices],
        )
        out2 = percolate(relabeled, spec)
        assert out2.removed == tuple("x" + v for v in out.removed)
        assert out2.graph.vertex_count == out.graph.vertex_count
        assert out2.graph.edge_count == out.graph.edge_count


class TestMembershipWeighted:
    def test_zero_grade_vertices_go_first(self):
        g = UndirectedGraph.build([("a", "b"), ("b", "c"), ("c", "d")])
        grades = {"a": 1.0, "b": 1.0, "c": 1.0, "d": 0.0}
        for seed in range(5):
            spec = PercolationSpec(1, seed=seed, mode="membership_weighted")
            out = percolate(g, spec, grades)
            assert out.removed == ("d",)

    def test_all_certain_falls_back_to_uniform(self):
        grades = {v: 1.0 for v in TRIANGLE.vertices}
        spec = PercolationSpec(2, seed=3, mode="membership_weighted")
        out = percolate(TRIANGLE, spec, grades)
        assert len(out.removed) == 2

    def test_missing_grade_named(self):
        spec = PercolationSpec(1, seed=1, mode="membership_weighted")
        with pytest.raises(ValueError, match="'b'"):
            percolate(TRIANGLE, spec, {"a": 0.5, "c": 0.5})

    def test_requires_grades(self):
        spec = PercolationSpec(1, seed=1, mode="membership_weighted")
        with pytest.raises(ValueError, match="requires"):
            percolate(TRIANGLE, spec)


class TestRounding:
    def test_half_away_from_zero(self):
        assert removal_count_for_fraction(0.0, 10) == 0
        assert removal_count_for_fraction(0.05, 10) == 1
        assert removal_count_for_fraction(0.15, 10) == 2
        assert removal_count_for_fraction(1.0, 7) == 7
        assert removal_count_for_fraction(0.33, 3) == 1


class TestSeedDerivation:
    def test_distinct_indices_distinct_seeds(self):
        seeds = {
            derive_seed(42, fi, ti) for fi in range(20) for ti in range(50)
        }
        assert len(seeds) == 20 * 50

    def test_u64_range(self):
        for fi in range(5):
            s = derive_seed(2**64 - 1, fi, 7)
            assert 0 <= s < 2**64


class TestSweep:
    def test_fraction_zero_equals_unpercolated(self):
        series = sweep(TRIANGLE, [0.0], trials=4, base_seed=9)
        point = series.points[0]
        assert point.mean_average_degree == 2.0
        assert point.mean_average_path_length == 1.0
        assert point.sem_average_degree == 0.0

    def test_fraction_one_is_empty(self):
        series = sweep(TRIANGLE, [1.0], trials=2, base_seed=9)
        point = series.points[0]
        assert point.mean_average_degree == 0.0
        assert point.mean_average_path_length == 0.0

    def test_triangle_third_is_exact(self):
        series = sweep(TRIANGLE, [1 / 3], trials=5, base_seed=1)
        assert series.points[0].mean_average_degree == 1.0

    def test_deterministic(self, rng):
        g = random_undirected(rng, max_n=7)
        a = sweep(g, [0.0, 0.5], trials=3, base_seed=77)
        b = sweep(g, [0.0, 0.5], trials=3, base_seed=77)
        assert a == b

    def test_fraction_validation(self):
        with pytest.raises(ValueError):
            sweep(TRIANGLE, [0.5, 0.5], trials=1, base_seed=1)
        with pytest.raises(ValueError):
            sweep(TRIANGLE, [0.2, 0.1], trials=1, base_seed=1)
        with pytest.raises(ValueError):
            sweep(TRIANGLE, [1.5], trials=1, base_seed=1)
        with pytest.raises(ValueError):
            sweep(TRIANGLE, [0.1], trials=0, base_seed=1)

    def test_edge_count_never_grows(self, rng):
        for _ in range(10):
            g = random_undirected(rng)
            t = rng.randint(0, g.vertex_count)
            out = percolate(g, PercolationSpec(t, seed=1))
            assert out.graph.edge_count <= g.edge_count


class TestSweepOutputs:
    def test_csv_shape(self):
        series = sweep(TRIANGLE, [0.0, 1 / 3], trials=3, base_seed=5)
        text = render_sweep_csv(series)
        lines = text.splitlines()
        assert lines[0] == "fraction,mean_avg_degree,mean_avg_path_length,trials"
        assert lines[1] == "0.000000,2.000000,1.000000,3"
        assert lines[2].startswith("0.333333,1.000000,")
        assert text.endswith("\n")

    def test_metadata_fields(self):
        meta = sweep_metadata(5, "uniform")
        assert meta["base_seed"] == 5
        assert "rounding" in meta and "seed_derivation" in meta
        assert "path_length_convention" in meta
