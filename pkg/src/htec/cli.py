"""Command-line interface.

Subcommands
-----------
compute    centrality of a hypergraph (JSON or CSV result)
baseline   linear / max / logexp comparison centrality
compare    rank-correlation curves and scatter data between result files
sunflower  write a sunflower hypergraph as hyperedge-list text
stats      dataset size statistics as JSON
check      weak-irreducibility / primitivity report as JSON
capacity   normalized-capacity convergence gaps as CSV

Exit codes
----------
0  success
1  usage error (bad flags, bad flag values, unknown model)
2  input error (unreadable or malformed files, mismatched result files)
3  hypergraph not connected (pass --largest-component)
4  iteration budget exhausted before convergence

Identical inputs and flags produce byte-identical outputs.
"""

import argparse
import json
import sys

import numpy as np

from . import analysis, capacity as capacity_mod
from .baselines import MappingModel, baseline_centrality
from .errors import (
    DimensionError,
    InvalidArgument,
    NoConvergence,
    NotConnected,
    ParseError,
    TooLarge,
    UndefinedCorrelation,
)
from .hypergraph import (
    build_incidence_bipartite,
    generate_sunflower,
    largest_component,
    parse_hyperedge_list,
    parse_simplex_format,
    stats as dataset_stats,
)
from .solver import SolverConfig, htec as solve_htec
from .tensor import check_weak_primitivity


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; this interface reserves 2
    # for input errors, so remap
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_input_flags(p):
    p.add_argument("input", help="input path (edgelist file, or nverts file for simplex)")
    p.add_argument("--format", choices=("edgelist", "simplex"), default="edgelist")
    p.add_argument("--simplices", help="simplices file (simplex format)")
    p.add_argument("--labels", help="optional node-label file (simplex format)")
    p.add_argument("--largest-component", action="store_true")
    p.add_argument("--dedupe-edges", action="store_true")


def _add_output_flags(p):
    p.add_argument("--output", help="output path (default: stdout)")
    p.add_argument("--out-format", choices=("json", "csv"), default="json")


def _add_common_flags(p):
    p.add_argument("--seed", type=int, default=0,
                   help="reserved for randomized helpers; outputs do not depend on it")


def _load_hypergraph(args, parser):
    if args.format == "simplex":
        if not args.simplices:
            parser.error("--format simplex requires --simplices")
        with open(args.input, encoding="utf-8") as nverts:
            with open(args.simplices, encoding="utf-8") as simplices:
                if args.labels:
                    with open(args.labels, encoding="utf-8") as labels:
                        h = parse_simplex_format(nverts, simplices, labels,
                                                 dedupe_edges=args.dedupe_edges)
                else:
                    h = parse_simplex_format(nverts, simplices,
                                             dedupe_edges=args.dedupe_edges)
    else:
        with open(args.input, encoding="utf-8") as fh:
            h = parse_hyperedge_list(fh, dedupe_edges=args.dedupe_edges)
    if args.largest_component:
        h = largest_component(h)
    return h


def _emit(args, text):
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _write_file(path, text):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _result_payload(method, h, node_scores, edge_scores, header):
    payload = {"method": method}
    payload.update(header)
    payload["nodes"] = [
        {"label": h.node_labels[v], "score": float(s)} for v, s in enumerate(node_scores)
    ]
    payload["edges"] = [{"id": e, "score": float(s)} for e, s in enumerate(edge_scores)]
    return payload


def _result_text(args, h, payload):
    if args.out_format == "json":
        return json.dumps(payload, indent=2) + "\n"
    lines = ["kind,id,label,score"]
    for v, entry in enumerate(payload["nodes"]):
        lines.append(f"node,{v},{entry['label']},{entry['score']!r}")
    for entry in payload["edges"]:
        e = entry["id"]
        label = h.edge_labels[e] if h.edge_labels is not None else ""
        lines.append(f"edge,{e},{label},{entry['score']!r}")
    return "\n".join(lines) + "\n"


def _cmd_compute(args, parser):
    h = _load_hypergraph(args, parser)
    cfg = SolverConfig(tol=args.tol, max_iter=args.max_iter)
    result = solve_htec(h, cfg)
    payload = _result_payload(
        "htec", h, result.x_nodes, result.x_edges,
        {
            "rho": result.rho,
            "lower": result.lower,
            "upper": result.upper,
            "iterations": result.iterations,
            "residual_inf": result.residual_inf,
        },
    )
    _emit(args, _result_text(args, h, payload))
    return 0


def _cmd_baseline(args, parser):
    h = _load_hypergraph(args, parser)
    model = MappingModel(variant=args.model, p=args.p)
    result = baseline_centrality(h, model, tol=args.tol, max_iter=args.max_iter)
    payload = _result_payload(
        args.model, h, result.x_nodes, result.y_edges,
        {"iterations": result.iterations, "converged": result.converged},
    )
    _emit(args, _result_text(args, h, payload))
    return 0


def _read_result_file(path):
    with open(path, encoding="utf-8") as fh:
        try:
            payload = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: not valid JSON ({exc})") from exc
    for key in ("method", "nodes", "edges"):
        if key not in payload:
            raise ParseError(f"{path}: missing {key!r} field")
    return payload


def _default_ks(n):
    ks = sorted({max(2, round(n * i / 8)) for i in range(1, 9) if round(n * i / 8) <= n})
    return [k for k in ks if k <= n] or [n]


def _curve_text(curve):
    lines = ["k,kendall,spearman"]
    for k, kt, sr in zip(curve.ks, curve.kendall, curve.spearman):
        lines.append(f"{k},{float(kt)!r},{float(sr)!r}")
    return "\n".join(lines) + "\n"


def _scatter_text(table, x_col, y_col):
    return "\n".join(analysis.scatter_export(table, x_col, y_col)) + "\n"


def _cmd_compare(args, parser):
    payloads = [_read_result_file(path) for path in args.results]
    base = payloads[0]
    node_labels = [entry["label"] for entry in base["nodes"]]
    edge_ids = [entry["id"] for entry in base["edges"]]
    for payload in payloads[1:]:
        if [e["label"] for e in payload["nodes"]] != node_labels:
            raise ParseError("result files disagree on node ids or labels")
        if [e["id"] for e in payload["edges"]] != edge_ids:
            raise ParseError("result files disagree on hyperedge ids")

    names = []
    for payload in payloads:
        name = payload["method"]
        while name in names:
            name = name + "+"
        names.append(name)
    node_columns = {
        name: np.array([entry["score"] for entry in payload["nodes"]])
        for name, payload in zip(names, payloads)
    }
    edge_columns = {
        name: np.array([entry["score"] for entry in payload["edges"]])
        for name, payload in zip(names, payloads)
    }
    node_table = analysis.ScoreTable(
        ids=tuple(range(len(node_labels))), columns=node_columns, labels=tuple(node_labels)
    )
    edge_table = analysis.ScoreTable(ids=tuple(edge_ids), columns=edge_columns)

    ref = names[0]
    written = []
    for other in names[1:]:
        for side, table in (("nodes", node_table), ("edges", edge_table)):
            n = len(table.ids)
            if args.ks:
                requested = [int(k) for k in args.ks.split(",")]
                if any(k < 2 for k in requested):
                    raise InvalidArgument("each k in --ks must be at least 2")
                # one --ks serves node and edge tables of different sizes,
                # so cap each k at the table size
                ks = sorted({min(k, n) for k in requested})
            else:
                ks = _default_ks(n)
            curve = analysis.topk_curve(table, ref, other, ks, mode=args.topk_mode)
            curve_path = f"{args.out_prefix}_{other}_{side}_curve.csv"
            _write_file(curve_path, _curve_text(curve))
            scatter_path = f"{args.out_prefix}_{other}_{side}_scatter.csv"
            _write_file(scatter_path, _scatter_text(table, ref, other))
            written.extend([curve_path, scatter_path])
    sys.stdout.write("\n".join(written) + "\n")
    return 0


def _cmd_sunflower(args, parser):
    h = generate_sunflower(args.sizes)
    _emit(args, h.to_edgelist_text())
    return 0


def _cmd_stats(args, parser):
    h = _load_hypergraph(args, parser)
    s = dataset_stats(h)
    payload = {
        "num_nodes": s.num_nodes,
        "num_hyperedges": s.num_hyperedges,
        "avg_cardinality": s.avg_cardinality,
        "max_cardinality": s.max_cardinality,
    }
    _emit(args, json.dumps(payload, indent=2) + "\n")
    return 0


def _cmd_check(args, parser):
    h = _load_hypergraph(args, parser)
    report = check_weak_primitivity(build_incidence_bipartite(h))
    payload = {
        "weakly_irreducible": report.weakly_irreducible,
        "positive_diagonal": report.positive_diagonal,
        "weakly_primitive": report.weakly_primitive,
    }
    _emit(args, json.dumps(payload, indent=2) + "\n")
    return 0


def _cmd_capacity(args, parser):
    h = _load_hypergraph(args, parser)
    cfg = SolverConfig(tol=args.tol, max_iter=args.max_iter)
    gaps = capacity_mod.capacity_convergence(
        build_incidence_bipartite(h), args.t_max, cfg=cfg
    )
    lines = ["t,gap"]
    for t, gap in enumerate(gaps):
        lines.append(f"{t},{float(gap)!r}")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def build_parser():
    parser = _Parser(prog="htec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[], help="hypergraph centrality")
    _add_input_flags(p)
    _add_output_flags(p)
    _add_common_flags(p)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--max-iter", type=int, default=1000)
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("baseline", help="comparison centrality models")
    _add_input_flags(p)
    _add_output_flags(p)
    _add_common_flags(p)
    p.add_argument("--model", choices=("linear", "max", "logexp"), required=True)
    p.add_argument("--p", type=float, default=10.0, help="p-mean exponent for --model max")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--max-iter", type=int, default=1000)
    p.set_defaults(func=_cmd_baseline)

    p = sub.add_parser("compare", help="correlation curves between result files")
    p.add_argument("results", nargs="+", help="two or more result JSON files; first is the reference")
    p.add_argument("--ks", help="comma-separated top-k values (default: an 8-point grid)")
    p.add_argument("--topk-mode", choices=("reference", "union"), default="reference")
    p.add_argument("--out-prefix", default="compare")
    _add_common_flags(p)
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("sunflower", help="generate a sunflower hypergraph")
    p.add_argument("sizes", nargs="+", type=int)
    p.add_argument("--output")
    _add_common_flags(p)
    p.set_defaults(func=_cmd_sunflower)

    p = sub.add_parser("stats", help="dataset statistics")
    _add_input_flags(p)
    p.add_argument("--output")
    _add_common_flags(p)
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("check", help="irreducibility and primitivity report")
    _add_input_flags(p)
    p.add_argument("--output")
    _add_common_flags(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("capacity", help="capacity convergence gaps")
    _add_input_flags(p)
    p.add_argument("--output")
    _add_common_flags(p)
    p.add_argument("--t-max", type=int, default=50)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--max-iter", type=int, default=1000)
    p.set_defaults(func=_cmd_capacity)

    return parser


def entrypoint(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if len(getattr(args, "results", ["", ""])) < 2:
            parser.error("compare needs at least two result files")
        return args.func(args, parser)
    except SystemExit as exc:
        # argparse exits directly; fold --help (0) and usage errors (1)
        # into the return-code contract so main() stays one sys.exit call
        return int(exc.code or 0)
    except (ParseError, TooLarge, DimensionError, UndefinedCorrelation, OSError) as exc:
        print(f"htec: {exc}", file=sys.stderr)
        return 2
    except NotConnected as exc:
        print(f"htec: {exc} (pass --largest-component to keep the largest one)", file=sys.stderr)
        return 3
    except NoConvergence as exc:
        print(f"htec: {exc} (loosen --tol or raise --max-iter)", file=sys.stderr)
        return 4
    except InvalidArgument as exc:
        print(f"htec: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(entrypoint())


if __name__ == "__main__":
    main()
