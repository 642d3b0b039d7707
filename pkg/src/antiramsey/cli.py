"""Command-line interface: parse graphs and CNFs, dispatch solvers, emit JSON.

Every invocation prints a single JSON record to stdout.  Records are
byte-stable for fixed inputs and flags: keys are sorted and formatting is
fixed.  Exit codes: 0 success, 2 input errors, 3 solver limits.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import approx, exact, graphs, reductions, trees
from .errors import (
    AntiRamseyError,
    GraphFormatError,
    InstanceTooLargeError,
    InvalidColoringError,
    MalformedCnfError,
    TriviallySatisfiableError,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_LIMITS = 3

NODE_BUDGET_ENV = "ARL_NODE_BUDGET"


def _record(
    argv: list[str],
    value: int | None = None,
    valid: bool = True,
    coloring: graphs.EdgeColoring | dict[int, str] | None = None,
    stats: exact.SearchStats | None = None,
    warnings: list[str] | None = None,
    result: dict | None = None,
) -> dict:
    coloring_map = None
    if isinstance(coloring, graphs.EdgeColoring):
        coloring_map = {str(i): tok for i, tok in enumerate(coloring.tokens)}
    elif isinstance(coloring, dict):
        coloring_map = {str(i): tok for i, tok in coloring.items()}
    record = {
        "command": argv,
        "value": value,
        "valid": valid,
        "coloring": coloring_map,
        "stats": stats.as_dict() if stats is not None else {},
        "warnings": warnings or [],
    }
    if result is not None:
        record["result"] = result
    return record


def _emit(record: dict) -> None:
    sys.stdout.write(json.dumps(record, sort_keys=True, indent=2) + "\n")


def _read_graph(path: str) -> tuple[graphs.Graph, graphs.PartialColoring]:
    return graphs.parse_graph_text(Path(path).read_text(encoding="utf-8"))


def _limits_from(args: argparse.Namespace) -> exact.SearchLimits:
    budget = None
    env = os.environ.get(NODE_BUDGET_ENV)
    if env:
        budget = int(env)
    kwargs = {}
    if getattr(args, "max_edges", None) is not None:
        kwargs["max_uncolored_edges"] = args.max_edges
    if budget is not None:
        kwargs["node_budget"] = budget
    if getattr(args, "parallel", False):
        kwargs["parallel"] = True
    if getattr(args, "workers", None) is not None:
        kwargs["workers"] = args.workers
    return exact.SearchLimits(**kwargs)


def _check_witness(graph: graphs.Graph, result: exact.SolveResult, k: int) -> None:
    # Solve paths never emit an unverified coloring.
    if result.witness is not None:
        if not graphs.is_pk_free(graph, result.witness, k):
            raise RuntimeError("internal error: solver witness failed re-verification")
        if graphs.distinct_color_count(result.witness) != result.value:
            raise RuntimeError("internal error: witness color count mismatch")


def _cmd_exact(args: argparse.Namespace, argv: list[str]) -> int:
    graph, partial = _read_graph(args.graph)
    warnings = []
    if partial.tokens:
        warnings.append("input tokens ignored; use the precolored command to honor them")
    result = exact.ar_exact(graph, args.k, _limits_from(args))
    _check_witness(graph, result, args.k)
    if result.exhausted:
        warnings.append("node budget exhausted; value is best-found, not proven optimal")
    _emit(
        _record(
            argv,
            value=result.value,
            valid=True,
            coloring=result.witness if args.emit_coloring else None,
            stats=result.stats,
            warnings=warnings,
        )
    )
    return EXIT_LIMITS if result.exhausted else EXIT_OK


def _cmd_precolored(args: argparse.Namespace, argv: list[str]) -> int:
    graph, partial = _read_graph(args.graph)
    instance = graphs.PrecoloredInstance(graph, partial)
    result = exact.ar_precolored(instance, args.k, _limits_from(args))
    warnings = []
    if not result.feasible:
        warnings.append("infeasible: no valid extension of the precolored edges exists")
    elif result.exhausted:
        warnings.append("node budget exhausted; value is best-found, not proven optimal")
    if result.witness is not None:
        _check_witness(graph, result, args.k)
    _emit(
        _record(
            argv,
            value=result.value,
            valid=result.feasible,
            coloring=result.witness,
            stats=result.stats,
            warnings=warnings,
        )
    )
    return EXIT_LIMITS if result.exhausted else EXIT_OK


def _cmd_tree(args: argparse.Namespace, argv: list[str]) -> int:
    graph, partial = _read_graph(args.graph)
    warnings = []
    if partial.tokens:
        warnings.append("input tokens ignored; the tree solver colors from scratch")
    result = trees.carnit(graph)
    _check_witness(graph, result, 3)
    _emit(
        _record(argv, value=result.value, valid=True, coloring=result.witness, warnings=warnings)
    )
    return EXIT_OK


def _cmd_approx(args: argparse.Namespace, argv: list[str]) -> int:
    graph, partial = _read_graph(args.graph)
    warnings = []
    if partial.tokens:
        warnings.append("input tokens ignored; approximation colors from scratch")
    if args.method == "greedy":
        result = approx.greedy_bounded_degree(graph)
    else:
        result = approx.bipartite_star(graph)
    _check_witness(graph, result, 3)
    _emit(
        _record(argv, value=result.value, valid=True, coloring=result.witness, warnings=warnings)
    )
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace, argv: list[str]) -> int:
    graph, partial = _read_graph(args.graph)
    missing = [i for i in range(graph.edge_count) if i not in partial.tokens]
    if missing:
        raise GraphFormatError(
            f"verify needs a total coloring; edges {missing[:5]} lack tokens "
            "(use the precolored command for partial inputs)"
        )
    coloring = graphs.EdgeColoring.from_map(graph, dict(partial.tokens))
    valid = graphs.is_pk_free(graph, coloring, args.k)
    _emit(
        _record(
            argv,
            value=graphs.distinct_color_count(coloring),
            valid=valid,
            coloring=coloring,
        )
    )
    return EXIT_OK


def _output_paths(input_path: str, out_prefix: str | None) -> tuple[Path, Path]:
    prefix = Path(out_prefix) if out_prefix else Path(input_path).with_suffix("")
    return prefix.with_suffix(".reduced.graph"), prefix.with_suffix(".reduced.json")


def _write_reduction(
    argv: list[str],
    graph: graphs.Graph,
    coloring: graphs.PartialColoring | None,
    annotation: dict,
    graph_path: Path,
    annot_path: Path,
    extra: dict,
) -> None:
    graph_path.write_text(graphs.format_graph_text(graph, coloring), encoding="utf-8")
    annot_path.write_text(
        json.dumps(annotation, sort_keys=True, indent=2) + "\n", encoding="utf-8"
    )
    result = {
        "graph_file": str(graph_path),
        "annotation_file": str(annot_path),
        "vertex_count": graph.vertex_count,
        "edge_count": graph.edge_count,
    }
    result.update(extra)
    _emit(_record(argv, result=result))


def _cmd_reduce_sat(args: argparse.Namespace, argv: list[str]) -> int:
    clauses = reductions.parse_dimacs(Path(args.cnf).read_text(encoding="utf-8"))
    try:
        inst = reductions.sat_to_precolored(clauses)
    except TriviallySatisfiableError:
        _emit(
            _record(
                argv,
                warnings=[
                    "formula is trivially satisfiable after pure-literal "
                    "elimination; no instance emitted"
                ],
                result={"satisfiable": True},
            )
        )
        return EXIT_OK
    graph_path, annot_path = _output_paths(args.cnf, args.out)
    annotation = {
        "variant": "sat",
        "formula": [list(cl) for cl in inst.formula],
        "variable_edges": {str(var): ei for var, ei in inst.variable_edges},
        "clause_gadgets": [
            {
                "literals": list(g.literals),
                "hub": g.hub,
                "aux_hub": g.aux_hub,
                "ports": list(g.ports),
                "free_edges": list(g.free_edges),
                "fixed_edges": [[ei, tok] for ei, tok in g.fixed_edges],
            }
            for g in inst.clause_gadgets
        ],
        "num_clauses": inst.num_clauses,
        "num_variables": inst.num_variables,
        "target_value": inst.target_value,
    }
    _write_reduction(
        argv,
        inst.instance.graph,
        inst.instance.coloring,
        annotation,
        graph_path,
        annot_path,
        {"num_clauses": inst.num_clauses, "target_value": inst.target_value},
    )
    return EXIT_OK


def _cmd_reduce_mis(args: argparse.Namespace, argv: list[str]) -> int:
    source, partial = _read_graph(args.graph)
    if partial.tokens:
        raise GraphFormatError("reduction input must be an uncolored graph")
    if args.variant == "pk":
        inst = reductions.mis_to_pk(source, args.k, vertex_cap=args.vertex_cap)
    else:
        inst = reductions.mis_to_3partite(source, vertex_cap=args.vertex_cap)
    graph_path, annot_path = _output_paths(args.graph, args.out)
    _write_reduction(
        argv,
        inst.graph,
        None,
        reductions.mis_instance_to_annotation(inst),
        graph_path,
        annot_path,
        {"variant": inst.variant, "k": inst.params.k},
    )
    return EXIT_OK


def _cmd_extract_is(args: argparse.Namespace, argv: list[str]) -> int:
    data = json.loads(Path(args.annotation).read_text(encoding="utf-8"))
    if data.get("variant") not in (reductions.VARIANT_PK, reductions.VARIANT_3PARTITE):
        raise GraphFormatError("annotation is not a path-bundle reduction instance")
    graph, partial = _read_graph(args.graph)
    missing = [i for i in range(graph.edge_count) if i not in partial.tokens]
    if missing:
        raise GraphFormatError("extract-is needs a totally colored graph file")
    inst = reductions.mis_instance_from_annotation(graph, data)
    coloring = graphs.EdgeColoring.from_map(graph, dict(partial.tokens))
    chosen = reductions.extract_independent_set(inst, coloring)
    _emit(
        _record(
            argv,
            value=len(chosen),
            valid=True,
            result={"independent_set": sorted(chosen)},
        )
    )
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antiramsey",
        description="Solvers and instance generators for rainbow-path-free edge colorings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", help="exact maximum color count")
    p.add_argument("--k", type=int, required=True, help="forbidden rainbow path length")
    p.add_argument("--max-edges", type=int, default=None, help="edge budget override")
    p.add_argument("--emit-coloring", action="store_true", help="include the witness")
    p.add_argument("--parallel", action="store_true", help="fan out over search branches")
    p.add_argument("--workers", type=int, default=None, help="parallel worker count")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("precolored", help="exact value with fixed edge tokens")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-edges", type=int, default=None)
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("graph")
    p.set_defaults(func=_cmd_precolored)

    p = sub.add_parser("tree", help="linear-time exact value on forests (k=3)")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_tree)

    p = sub.add_parser("approx", help="approximation algorithms (k=3)")
    p.add_argument("--method", choices=["greedy", "bipartite"], required=True)
    p.add_argument("graph")
    p.set_defaults(func=_cmd_approx)

    p = sub.add_parser("verify", help="check a fully colored graph file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("graph")
    p.set_defaults(func=_cmd_verify)

    reduce_parser = sub.add_parser("reduce", help="emit hardness instances")
    reduce_sub = reduce_parser.add_subparsers(dest="reduction", required=True)

    p = reduce_sub.add_parser("sat", help="3-CNF to precolored instance")
    p.add_argument("cnf")
    p.add_argument("--out", default=None, help="output path prefix")
    p.set_defaults(func=_cmd_reduce_sat)

    p = reduce_sub.add_parser("mis", help="independent set to P_k instance")
    p.add_argument("--k", type=int, required=True, help="odd path length >= 3")
    p.add_argument("graph")
    p.add_argument("--out", default=None)
    p.add_argument("--vertex-cap", type=int, default=reductions.DEFAULT_VERTEX_CAP)
    p.set_defaults(func=_cmd_reduce_mis, variant="pk")

    p = reduce_sub.add_parser("mis3", help="independent set to 3-partite P_3 instance")
    p.add_argument("graph")
    p.add_argument("--out", default=None)
    p.add_argument("--vertex-cap", type=int, default=reductions.DEFAULT_VERTEX_CAP)
    p.set_defaults(func=_cmd_reduce_mis, variant="3partite", k=3)

    p = sub.add_parser("extract-is", help="recover an independent set from a coloring")
    p.add_argument("annotation")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_extract_is)

    return parser


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args, argv)
    except InstanceTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMITS
    except (GraphFormatError, MalformedCnfError, InvalidColoringError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (AntiRamseyError, OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
