"""Command-line front end: ingest, metrics, sweep, synth.

Every run writes its artifacts plus a ``manifest.json`` into the
directory named by ``--out``; re-running with the manifest's flags
reproduces the artifacts byte for byte. All randomness flows from an
explicit ``--seed``; sweep refuses to run without one. Files are
written atomically (temp file, then rename).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path

from . import __version__, core, ingest, metrics, percolation, synth
from .errors import ParseError
from .graphs import UndirectedGraph


def _parse_u64(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def _parse_fractions(text: str) -> list[float]:
    try:
        fracs = [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise ValueError(f"bad fraction list {text!r}: {exc}") from None
    if not fracs:
        raise ValueError("fraction list is empty")
    return fracs


def _write_text(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _write_manifest(out_dir: Path, command: str, flags: dict) -> None:
    manifest = {
        "command": command,
        "flags": flags,
        "tool_version": __version__,
        "conventions": dict(metrics.CONVENTIONS),
    }
    _write_text(out_dir / "manifest.json", json.dumps(manifest, indent=2, sort_keys=True) + "\n")


def _out_dir(args) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _cmd_ingest(args) -> int:
    graph = ingest.read_edge_list(args.input)
    graph = ingest.filter_degree_range(graph, args.min_degree, args.max_degree)
    if args.giant:
        graph = ingest.giant_component(graph)
    out = _out_dir(args)
    _write_text(out / "graph.csv", ingest.serialize_edge_list(graph))
    _write_manifest(
        out,
        "ingest",
        {
            "input": str(args.input),
            "min_degree": args.min_degree,
            "max_degree": args.max_degree,
            "giant": args.giant,
            "pipeline_order": "parse, degree filter, giant component",
        },
    )
    return 0


def _cmd_metrics(args) -> int:
    digraph = ingest.read_edge_list(args.input)
    graph = ingest.undirected_projection(digraph)
    if graph.vertex_count == 0:
        print("error: input graph is empty", file=sys.stderr)
        return 1
    report = metrics.metrics_report(graph)
    dist = metrics.degree_distribution(graph)
    try:
        fit = metrics.fit_power_law(dist, args.k_min)
        fit_payload: dict = {
            "alpha": fit.alpha,
            "intercept": fit.intercept,
            "r_squared": fit.r_squared,
            "k_min": fit.k_min,
        }
    except ValueError as exc:
        fit_payload = {"error": str(exc)}
    out = _out_dir(args)
    _write_text(out / "metrics.json", metrics.render_report_json(report))
    _write_text(
        out / "degree_distribution.csv", metrics.render_degree_distribution_csv(dist)
    )
    _write_text(
        out / "clustering_vs_outdegree.csv",
        metrics.render_clustering_outdegree_csv(metrics.clustering_vs_outdegree(digraph)),
    )
    _write_text(
        out / "power_law_fit.json",
        json.dumps(fit_payload, indent=2, sort_keys=True) + "\n",
    )
    _write_manifest(
        out, "metrics", {"input": str(args.input), "k_min": args.k_min}
    )
    return 0


def _load_sweep_input(args) -> tuple[UndirectedGraph, dict | None]:
    if args.mode == "membership":
        fuzzy = core.parse_fuzzy_graph(Path(args.input).read_bytes())
        violations = core.validate(fuzzy)
        if violations:
            raise ValueError(
                "input fuzzy graph is invalid: "
                + "; ".join(str(v) for v in violations[:5])
            )
        graph = UndirectedGraph.build(
            fuzzy.edge_memberships.keys(), vertices=fuzzy.vertex_memberships.keys()
        )
        return graph, dict(fuzzy.vertex_memberships)
    digraph = ingest.read_edge_list(args.input)
    return ingest.undirected_projection(digraph), None


def _cmd_sweep(args) -> int:
    graph, memberships = _load_sweep_input(args)
    mode = "membership_weighted" if args.mode == "membership" else "uniform"
    series = percolation.sweep(
        graph, args.fractions, args.trials, args.seed, mode, memberships
    )
    out = _out_dir(args)
    _write_text(out / "sweep.csv", percolation.render_sweep_csv(series))
    _write_text(out / "sweep_meta.json", percolation.render_sweep_metadata(args.seed, mode))
    _write_manifest(
        out,
        "sweep",
        {
            "input": str(args.input),
            "fractions": args.fractions,
            "trials": args.trials,
            "seed": args.seed,
            "mode": args.mode,
        },
    )
    return 0


def _cmd_synth(args) -> int:
    if args.model == "pa":
        graph = synth.preferential_attachment(args.n, args.m, args.seed)
        flags = {"model": "pa", "n": args.n, "m": args.m, "seed": args.seed}
    else:
        graph = synth.core_periphery(args.core, args.clusters, args.size)
        flags = {
            "model": "core",
            "core": args.core,
            "clusters": args.clusters,
            "size": args.size,
        }
    out = _out_dir(args)
    _write_text(out / "graph.csv", ingest.serialize_edge_list(graph))
    _write_manifest(out, "synth", flags)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzgraph",
        description="Fuzzy-graph network modelling: ingest, metrics, percolation sweeps, synthetic topologies.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", help="parse and filter an edge-list CSV")
    p_ingest.add_argument("--input", required=True, help="edge-list CSV path")
    p_ingest.add_argument("--out", required=True, help="output directory")
    p_ingest.add_argument("--min-degree", type=int, default=0, dest="min_degree")
    p_ingest.add_argument("--max-degree", type=int, default=None, dest="max_degree")
    p_ingest.add_argument(
        "--giant", action="store_true", help="keep only the giant weak component"
    )
    p_ingest.set_defaults(handler=_cmd_ingest)

    p_metrics = sub.add_parser("metrics", help="compute the network-metric report")
    p_metrics.add_argument("--input", required=True, help="edge-list CSV path")
    p_metrics.add_argument("--out", required=True, help="output directory")
    p_metrics.add_argument(
        "--k-min", type=int, default=1, dest="k_min",
        help="smallest degree for the power-law fit (default 1)",
    )
    p_metrics.set_defaults(handler=_cmd_metrics)

    p_sweep = sub.add_parser("sweep", help="percolation sweep over removal fractions")
    p_sweep.add_argument(
        "--input", required=True,
        help="edge-list CSV; with --mode membership, a fuzzy graph text file",
    )
    p_sweep.add_argument("--out", required=True, help="output directory")
    p_sweep.add_argument("--seed", required=True, type=_parse_u64)
    p_sweep.add_argument(
        "--fractions", type=_parse_fractions,
        default=[round(0.1 * i, 1) for i in range(10)],
        help="comma-separated removal fractions (default 0.0..0.9 step 0.1)",
    )
    p_sweep.add_argument("--trials", type=int, default=20)
    p_sweep.add_argument("--mode", choices=("uniform", "membership"), default="uniform")
    p_sweep.set_defaults(handler=_cmd_sweep)

    p_synth = sub.add_parser("synth", help="generate a synthetic topology")
    synth_sub = p_synth.add_subparsers(dest="model", required=True)
    p_pa = synth_sub.add_parser("pa", help="preferential attachment")
    p_pa.add_argument("--n", required=True, type=int)
    p_pa.add_argument("--m", required=True, type=int)
    p_pa.add_argument("--seed", required=True, type=_parse_u64)
    p_pa.add_argument("--out", required=True)
    p_pa.set_defaults(handler=_cmd_synth)
    p_core = synth_sub.add_parser("core", help="core-periphery with bridged cliques")
    p_core.add_argument("--core", required=True, type=int)
    p_core.add_argument("--clusters", required=True, type=int)
    p_core.add_argument("--size", required=True, type=int)
    p_core.add_argument("--out", required=True)
    p_core.set_defaults(handler=_cmd_synth)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
