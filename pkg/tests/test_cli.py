import json

import pytest

from fuzzgraph.cli import main

STAR = "source,destination\nhub,l1\nhub,l2\nhub,l3\n"
TRIANGLE = "a,b\nb,c\nc,a\n"
TWO_COMPONENTS = "a,b\nb,c\nx,y\n"


def run(*argv):
    return main([str(a) for a in argv])


class TestIngest:
    def test_plain_copy_is_canonical(self, tmp_path):
        src = tmp_path / "in.csv"
        src.write_text("b,c\na,b\n")
        out = tmp_path / "out"
        assert run("ingest", "--input", src, "--out", out) == 0
        assert (out / "graph.csv").read_text() == "source,destination\na,b\nb,c\n"
        manifest = json.loads((out / "manifest.json").read_text())
        assert manifest["command"] == "ingest"
        assert manifest["conventions"]

    def test_giant_flag(self, tmp_path):
        src = tmp_path / "in.csv"
        src.write_text(TWO_COMPONENTS)
        out = tmp_path / "out"
        assert run("ingest", "--input", src, "--out", out, "--giant") == 0
        assert (out / "graph.csv").read_text() == "source,destination\na,b\nb,c\n"

    def test_min_degree_star(self, tmp_path):
        src = tmp_path / "in.csv"
        src.write_text(STAR)
        out = tmp_path / "out"
        assert run("ingest", "--input", src, "--out", out, "--min-degree", 2) == 0
        assert (out / "graph.csv").read_text() == "source,destination\n"

    def test_round_trips(self, tmp_path):
        src = tmp_path / "in.csv"
        src.write_text(TRIANGLE)
        out1 = tmp_path / "o1"
        out2 = tmp_path / "o2"
        assert run("ingest", "--input", src, "--out", out1) == 0
        assert run("ingest", "--input", out1 / "graph.csv", "--out", out2) == 0
        assert (out1 / "graph.csv").read_bytes() == (out2 / "graph.csv").read_bytes()

    def test_parse_error_exit_code(self, tmp_path, capsys):
        src = tmp_path / "in.csv"
        src.write_text("a,a\n")
        assert run("ingest", "--input", src, "--out", tmp_path / "out") == 1
        assert "line 1" in capsys.readouterr().err


class TestMetrics:
    def test_triangle_report(self, tmp_path):
        src = tmp_path / "tri.csv"
        src.write_text(TRIANGLE)
        out = tmp_path / "out"
        assert run("metrics", "--input", src, "--out", out) == 0
        report = json.loads((out / "metrics.json").read_text())
        assert report["average_path_length"] == 1.0
        assert report["average_clustering"] == 1.0
        assert report["assortativity"] is None
        fit = json.loads((out / "power_law_fit.json").read_text())
        assert "error" in fit  # one distinct degree only
        assert (out / "degree_distribution.csv").exists()
        assert (out / "clustering_vs_outdegree.csv").exists()

    def test_star_assortativity(self, tmp_path):
        src = tmp_path / "star.csv"
        src.write_text(STAR)
        out = tmp_path / "out"
        assert run("metrics", "--input", src, "--out", out) == 0
        report = json.loads((out / "metrics.json").read_text())
        assert report["assortativity"] == pytest.approx(-1.0, abs=1e-9)

    def test_path_apl_in_json(self, tmp_path):
        src = tmp_path / "path.csv"
        src.write_text("a,b\nb,c\n")
        out = tmp_path / "out"
        assert run("metrics", "--input", src, "--out", out) == 0
        report = json.loads((out / "metrics.json").read_text())
        assert report["average_path_length"] == pytest.approx(4 / 3, abs=1e-12)

    def test_empty_graph_fails(self, tmp_path, capsys):
        src = tmp_path / "empty.csv"
        src.write_text("")
        assert run("metrics", "--input", src, "--out", tmp_path / "out") == 1
        assert "empty" in capsys.readouterr().err


class TestSweep:
    def test_fraction_zero_row(self, tmp_path):
        src = tmp_path / "tri.csv"
        src.write_text(TRIANGLE)
        out = tmp_path / "out"
        assert run(
            "sweep", "--input", src, "--out", out, "--seed", 7, "--fractions", "0"
        ) == 0
        lines = (out / "sweep.csv").read_text().splitlines()
        assert lines[1] == "0.000000,2.000000,1.000000,20"

    def test_triangle_third(self, tmp_path):
        src = tmp_path / "tri.csv"
        src.write_text(TRIANGLE)
        out = tmp_path / "out"
        assert run(
            "sweep", "--input", src, "--out", out, "--seed", 7,
            "--fractions", "0.33", "--trials", 3,
        ) == 0
        lines = (out / "sweep.csv").read_text().splitlines()
        assert lines[1].startswith("0.330000,1.000000,")

    def test_same_seed_byte_identical(self, tmp_path):
        src = tmp_path / "tri.csv"
        src.write_text(TRIANGLE)
        out1, out2 = tmp_path / "o1", tmp_path / "o2"
        args = ["--seed", 42, "--fractions", "0,0.4,0.8", "--trials", 5]
        assert run("sweep", "--input", src, "--out", out1, *args) == 0
        assert run("sweep", "--input", src, "--out", out2, *args) == 0
        assert (out1 / "sweep.csv").read_bytes() == (out2 / "sweep.csv").read_bytes()

    def test_seed_required(self, tmp_path):
        src = tmp_path / "tri.csv"
        src.write_text(TRIANGLE)
        with pytest.raises(SystemExit):
            run("sweep", "--input", src, "--out", tmp_path / "out")

    def test_bad_fractions_exit(self, tmp_path, capsys):
        src = tmp_path / "tri.csv"
        src.write_text(TRIANGLE)
        assert run(
            "sweep", "--input", src, "--out", tmp_path / "out",
            "--seed", 1, "--fractions", "0.5,0.2",
        ) == 1
        assert "increasing" in capsys.readouterr().err

    def test_membership_mode_reads_fuzzy_file(self, tmp_path):
        fuzzy = tmp_path / "g.fz"
        fuzzy.write_text(
            "v a 1\nv b 1\nv c 1\nv d 0\n"
            "e a b 1\ne b c 1\ne c d 0\n"
        )
        out = tmp_path / "out"
        assert run(
            "sweep", "--input", fuzzy, "--out", out, "--seed", 3,
            "--mode", "membership", "--fractions", "0.25", "--trials", 2,
        ) == 0
        meta = json.loads((out / "sweep_meta.json").read_text())
        assert meta["mode"] == "membership_weighted"
        assert "extension" in meta["mode_note"]

    def test_membership_mode_rejects_invalid_fuzzy(self, tmp_path, capsys):
        fuzzy = tmp_path / "g.fz"
        fuzzy.write_text("v a 0.5\nv b 0.5\ne a b 0.9\n")
        assert run(
            "sweep", "--input", fuzzy, "--out", tmp_path / "out",
            "--seed", 3, "--mode", "membership",
        ) == 1
        assert "invalid" in capsys.readouterr().err


class TestSynth:
    def test_pa_file(self, tmp_path):
        out = tmp_path / "out"
        assert run(
            "synth", "pa", "--n", 5, "--m", 1, "--seed", 7, "--out", out
        ) == 0
        lines = (out / "graph.csv").read_text().splitlines()
        assert lines[0] == "source,destination"
        assert len(lines) == 1 + 4

    def test_core_file(self, tmp_path):
        out = tmp_path / "out"
        assert run(
            "synth", "core", "--core", 4, "--clusters", 2, "--size", 3, "--out", out
        ) == 0
        assert len((out / "graph.csv").read_text().splitlines()) == 1 + 14

    def test_repeat_identical(self, tmp_path):
        out1, out2 = tmp_path / "o1", tmp_path / "o2"
        for out in (out1, out2):
            assert run(
                "synth", "pa", "--n", 30, "--m", 2, "--seed", 11, "--out", out
            ) == 0
        assert (out1 / "graph.csv").read_bytes() == (out2 / "graph.csv").read_bytes()

    def test_invalid_spec_exit(self, tmp_path, capsys):
        assert run(
            "synth", "pa", "--n", 2, "--m", 5, "--seed", 1, "--out", tmp_path / "out"
        ) == 1
        assert "exceed" in capsys.readouterr().err

    def test_synth_then_metrics_pipeline(self, tmp_path):
        gen = tmp_path / "gen"
        assert run(
            "synth", "core", "--core", 4, "--clusters", 2, "--size", 3, "--out", gen
        ) == 0
        rep = tmp_path / "rep"
        assert run("metrics", "--input", gen / "graph.csv", "--out", rep) == 0
        report = json.loads((rep / "metrics.json").read_text())
        assert report["vertex_count"] == 10 and report["edge_count"] == 14
