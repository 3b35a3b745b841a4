"""Command-line front end.

Subcommands: ``build`` (state graph of an instance file), ``iso``
(directed/undirected isomorphism of two graph files), ``verify`` (run one
claim checker by id), and ``search`` (scan small graphs and assignments for
pairs isomorphic to their state graph).

Exit codes: 0 for success / holds / hypothesis-not-met, 1 for not
isomorphic or counterexample, 2 for parse and usage errors, 3 for exceeded
budgets.  All stdout output is byte-stable given the same inputs, flags,
and seed; timings go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .assignment_graph import DEFAULT_STATE_BUDGET, build
from .classify import search_isomorphic_pairs
from .errors import (
    AssignmentError,
    GraphError,
    ParseError,
    PebblabError,
    SearchBudgetExceededError,
    StateBudgetExceededError,
    UnknownClaimError,
)
from .iso import DEFAULT_EXPANSION_BUDGET, digraph_isomorphic, undirected_isomorphic
from .textio import format_assignment, parse_graph_text
from .theorems import (
    BUDGET_EXCEEDED,
    COUNTEREXAMPLE,
    HOLDS,
    HYPOTHESIS_NOT_MET,
    run_claim,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3

_VERDICT_EXIT = {
    HOLDS: EXIT_OK,
    HYPOTHESIS_NOT_MET: EXIT_OK,
    COUNTEREXAMPLE: EXIT_NEGATIVE,
    BUDGET_EXCEEDED: EXIT_BUDGET,
}


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _write_output(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _state_budget(args) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("PEBBLAB_BUDGET")
    return int(env) if env else DEFAULT_STATE_BUDGET


def _read_instance(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_graph_text(fh.read())


def cmd_build(args) -> int:
    g, a = _read_instance(args.input)
    ag = build(g, a, _state_budget(args))
    ft = ag.is_fully_traversable()
    print(f"{len(ag.states)} states, {len(ag.edges)} edges, "
          f"fully traversable: {'true' if ft else 'false'}")
    print("traversal counts:")
    for (u, w), c in ag.traversal_counts().items():
        print(f"  {u}->{w}: {c}")
    if args.dot:
        _write_output(ag.to_dot(), args.dot)
    if args.json:
        _write_output(_json_text(ag.to_json_obj()), args.json)
    return EXIT_OK


def cmd_iso(args) -> int:
    g, _ = _read_instance(args.left)
    h, _ = _read_instance(args.right)
    check = digraph_isomorphic if args.mode == "directed" else undirected_isomorphic
    witness = check(g, h)
    if witness is None:
        print("not isomorphic", file=sys.stderr)
        return EXIT_NEGATIVE
    _write_output(_json_text(witness.to_json_obj()), args.output)
    return EXIT_OK


def _claim_params(args) -> dict:
    params: dict = {}
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            params["input"] = fh.read()
    for key, value in (
        ("cap", args.cap),
        ("k", args.k),
        ("n", args.n),
        ("m", args.m),
        ("position", args.position),
        ("heavy", args.heavy),
        ("fill", args.fill),
        ("sink", args.sink),
        ("pebbles", args.pebbles),
        ("search_cap", args.search_cap),
        ("vertex_cap", args.vertex_cap),
        ("pebble_cap", args.pebble_cap),
        ("max_factors", args.max_factors),
        ("max_length", args.max_length),
        ("max_k", args.max_k),
        ("max_n", args.max_n),
        ("random_trees", args.random_trees),
        ("max_vertices", args.max_vertices),
        ("seed", args.seed),
    ):
        if value is not None:
            params[key] = value
    if args.sweep:
        params["sweep"] = True
    if args.lengths:
        params["lengths"] = [int(x) for x in args.lengths.split(",")]
    if args.path_pebbles:
        params["pebbles"] = [int(x) for x in args.path_pebbles.split(",")]
    if args.sinks:
        params["sinks"] = [int(x) for x in args.sinks.split(",")]
    if args.factor:
        params["factors"] = list(args.factor)
    return params


def cmd_verify(args) -> int:
    started = time.monotonic()
    report, extra = run_claim(
        args.claim,
        _claim_params(args),
        state_budget=_state_budget(args),
        search_budget=args.search_budget,
        shards=args.shards,
    )
    elapsed = time.monotonic() - started

    if args.format == "json":
        obj = report.to_json_obj()
        if extra is not None and hasattr(extra, "to_json_obj"):
            obj["classification"] = extra.to_json_obj()
        text = _json_text(obj)
    else:
        text = report.table()
        if extra is not None and hasattr(extra, "table"):
            text += extra.table()
    _write_output(text, args.output)
    if args.emit_graph and extra is not None and isinstance(extra, tuple):
        _, host_assignment = extra
        _write_output(format_assignment(host_assignment), args.emit_graph)
    print(f"{args.claim}: {report.verdict} in {elapsed:.2f}s", file=sys.stderr)
    return _VERDICT_EXIT[report.verdict]


def cmd_search(args) -> int:
    ft_filter = {"yes": True, "no": False, "any": None}[args.fully_traversable]
    result = search_isomorphic_pairs(
        args.max_vertices, args.pebble_cap, ft_filter=ft_filter, shards=args.shards
    )
    if args.format == "json":
        text = _json_text(result.to_json_obj())
    else:
        text = result.table()
    _write_output(text, args.output)
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pebblab",
        description="Oriented-graph pebbling: state graphs, isomorphism, verification, search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="build the state graph of an instance file")
    p_build.add_argument("input", help="graph + assignment in the text format")
    p_build.add_argument("--dot", help="write the state graph as DOT to this path")
    p_build.add_argument("--json", help="write the state graph as JSON to this path")
    p_build.add_argument("--budget", type=int, default=None, help="state budget")
    p_build.set_defaults(fn=cmd_build)

    p_iso = sub.add_parser("iso", help="decide isomorphism of two graph files")
    p_iso.add_argument("left")
    p_iso.add_argument("right")
    p_iso.add_argument("--mode", choices=("directed", "undirected"), default="directed")
    p_iso.add_argument("--output", help="write the witness JSON here instead of stdout")
    p_iso.set_defaults(fn=cmd_iso)

    p_verify = sub.add_parser("verify", help="run one claim checker")
    p_verify.add_argument("claim", help="claim id, e.g. thm-5.1 (see docs for the list)")
    p_verify.add_argument("--input", help="instance file for per-instance claims")
    p_verify.add_argument("--cap", type=int, default=None, help="pebble cap for scans")
    p_verify.add_argument("--k", type=int, default=None, help="cycle length (thm-3.1)")
    p_verify.add_argument("--n", type=int, default=None)
    p_verify.add_argument("--m", type=int, default=None)
    p_verify.add_argument("--position", type=int, default=None)
    p_verify.add_argument("--heavy", type=int, default=None)
    p_verify.add_argument("--fill", type=int, default=None)
    p_verify.add_argument("--sink", type=int, default=None)
    p_verify.add_argument("--pebbles", type=int, default=None)
    p_verify.add_argument("--search-cap", dest="search_cap", type=int, default=None)
    p_verify.add_argument("--vertex-cap", dest="vertex_cap", type=int, default=None)
    p_verify.add_argument("--pebble-cap", dest="pebble_cap", type=int, default=None)
    p_verify.add_argument("--sweep", action="store_true", help="run the full instance sweep")
    p_verify.add_argument("--max-factors", dest="max_factors", type=int, default=None)
    p_verify.add_argument("--max-length", dest="max_length", type=int, default=None)
    p_verify.add_argument("--max-k", dest="max_k", type=int, default=None)
    p_verify.add_argument("--max-n", dest="max_n", type=int, default=None)
    p_verify.add_argument("--lengths", help="comma-separated path lengths (thm-7.1)")
    p_verify.add_argument(
        "--path-pebbles", dest="path_pebbles", help="comma-separated source counts (thm-7.1)"
    )
    p_verify.add_argument("--sinks", help="comma-separated sink counts (thm-7.1)")
    p_verify.add_argument(
        "--factor",
        action="append",
        help="pebbled path spec like simple:n=3,src=2 (repeatable, cor-7.1)",
    )
    p_verify.add_argument("--random-trees", dest="random_trees", type=int, default=None)
    p_verify.add_argument("--max-vertices", dest="max_vertices", type=int, default=None)
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.add_argument("--budget", type=int, default=None, help="state budget")
    p_verify.add_argument(
        "--search-budget", dest="search_budget", type=int, default=DEFAULT_EXPANSION_BUDGET
    )
    p_verify.add_argument("--shards", type=int, default=1)
    p_verify.add_argument("--format", choices=("json", "table"), default="table")
    p_verify.add_argument("--output", help="write the report here instead of stdout")
    p_verify.add_argument(
        "--emit-graph", dest="emit_graph", help="write a constructed host graph here (thm-8.1)"
    )
    p_verify.set_defaults(fn=cmd_verify)

    p_search = sub.add_parser("search", help="scan graphs and assignments for isomorphic pairs")
    p_search.add_argument("--max-vertices", dest="max_vertices", type=int, required=True)
    p_search.add_argument("--pebble-cap", dest="pebble_cap", type=int, required=True)
    p_search.add_argument(
        "--fully-traversable",
        dest="fully_traversable",
        choices=("yes", "no", "any"),
        default="any",
    )
    p_search.add_argument("--shards", type=int, default=1)
    p_search.add_argument("--format", choices=("json", "table"), default="table")
    p_search.add_argument("--output", help="write the result here instead of stdout")
    p_search.set_defaults(fn=cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, UnknownClaimError, GraphError, AssignmentError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (StateBudgetExceededError, SearchBudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except PebblabError as exc:  # pragma: no cover - defensive
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
