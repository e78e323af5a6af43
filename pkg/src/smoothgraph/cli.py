"""Command-line interface.

Exit codes: 0 smooth or success, 1 not smooth, 2 input error, 3 checker
disagreement, 4 construction refused (not gated).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from functools import reduce
from pathlib import Path

from .canonical import canonical_graph
from .constructors import PRODUCTS, AmalgamSpec, cocktail_party, complete, cycle, gated_amalgam, half_cube, hypercube, make, path
from .convexity import convex_hull, gate_report
from .errors import BadParams, GraphError, NotGated
from .formats import format_edge_list, graph6_decode, graph6_encode, looks_like_edge_list, parse_edge_list, read_graph6_lines
from .graph import Graph, from_edges
from .patterns import fixture, is_fixture_name
from .recognizers import classify
from .smoothness import Method, check_all, check_smoothness, resolve_method
from .survey import MAX_N, SurveyQuery, bridged_survey, run_survey

EXIT_OK = 0
EXIT_NOT_SMOOTH = 1
EXIT_INPUT = 2
EXIT_DISAGREE = 3
EXIT_REFUSED = 4

JOBS_ENV = "SMOOTHGRAPH_JOBS"

_TERM = re.compile(r"^(K|C|P|Q|HQ|CP)(\d+)$", re.IGNORECASE)
_TERM_BUILDERS = {
    "K": complete,
    "C": cycle,
    "P": path,
    "Q": hypercube,
    "HQ": half_cube,
    "CP": cocktail_party,
}


class InputError(GraphError):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def parse_text(text: str, fmt: str = "auto") -> Graph:
    """Decode one graph from file contents in graph6 or edge-list form."""
    if fmt == "edgelist" or (fmt == "auto" and looks_like_edge_list(text)):
        return parse_edge_list(text)
    graphs = list(read_graph6_lines(text.splitlines()))
    if len(graphs) != 1:
        raise InputError(f"expected exactly one graph, found {len(graphs)}")
    return graphs[0]


def resolve_term(term: str, fmt: str = "auto") -> Graph:
    """Graph named by a fixture, a family term (K5, C6, P3, Q3, HQ4, CP3), a path, ``-`` or inline graph6."""
    term = term.strip()
    if term == "-":
        return parse_text(sys.stdin.read(), fmt)
    if is_fixture_name(term):
        return fixture(term)
    match = _TERM.match(term)
    if match:
        return _TERM_BUILDERS[match.group(1).upper()](int(match.group(2)))
    p = Path(term)
    if p.is_file():
        return parse_text(p.read_text(encoding="ascii"), fmt)
    try:
        return graph6_decode(term)
    except GraphError:
        raise InputError(f"cannot resolve {term!r} as a fixture, family term, file or graph6 string") from None


def parse_set(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise InputError(f"bad vertex set {text!r}") from None


def _split_list(values: list[str] | None) -> list[str]:
    out = []
    for v in values or []:
        out.extend(t for t in v.split(",") if t.strip())
    return [t.strip() for t in out]


# -- subcommands ------------------------------------------------------------


def cmd_check(args) -> int:
    g = resolve_term(args.input, args.format)
    if args.method == "all":
        verdicts = check_all(g)
        outcomes = {v.smooth for v in verdicts.values()}
        if args.output == "json":
            payload = {m.value: v.to_dict() if args.witness else {"smooth": v.smooth} for m, v in verdicts.items()}
            print(_dump(payload))
        if len(outcomes) != 1:
            print("checkers disagree: " + ", ".join(f"{m.value}={v.smooth}" for m, v in verdicts.items()), file=sys.stderr)
            return EXIT_DISAGREE
        verdict = verdicts[Method.EDGE]
    else:
        verdict = check_smoothness(g, resolve_method(args.method))
        if args.output == "json":
            out = verdict.to_dict()
            if not args.witness:
                out.pop("witness", None)
            print(_dump(out))
    if args.output != "json":
        print("smooth" if verdict.smooth else "not smooth")
        if args.witness and verdict.witness is not None:
            w = verdict.witness
            print(f"witness u={w.u} v={w.v} w={w.w} x={w.x} y={w.y}")
    return EXIT_OK if verdict.smooth else EXIT_NOT_SMOOTH


def cmd_classify(args) -> int:
    g = resolve_term(args.input, args.format)
    print(_dump(classify(g).to_dict()))
    return EXIT_OK


def _load_amalgam(path: str) -> AmalgamSpec:
    try:
        spec = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise BadParams(f"cannot read amalgam spec: {exc}") from None

    def side(obj) -> Graph:
        if isinstance(obj, str):
            return resolve_term(obj)
        if isinstance(obj, dict) and "n" in obj:
            return from_edges(int(obj["n"]), [tuple(e) for e in obj.get("edges", [])])
        raise BadParams(f"bad graph in amalgam spec: {obj!r}")

    try:
        return AmalgamSpec(side(spec["g1"]), side(spec["g2"]), tuple(spec["a"]), tuple(spec["b"]))
    except (KeyError, TypeError) as exc:
        raise BadParams(f"amalgam spec needs g1, g2, a, b: {exc}") from None


def build_from_words(words: list[str]) -> Graph:
    """Graph described by ``make`` arguments."""
    if len(words) == 1:
        words = words[0].split()
    if not words:
        raise BadParams("nothing to make")
    head = words[0].lower()
    if head == "amalgam":
        if len(words) != 2:
            raise BadParams("usage: make amalgam SPEC.json")
        return gated_amalgam(_load_amalgam(words[1]))
    if len(words) >= 3 and len(words) % 2 == 1 and all(w.lower() in PRODUCTS for w in words[1::2]):
        factors = [resolve_term(w) for w in words[0::2]]
        ops = [PRODUCTS[w.lower()] for w in words[1::2]]
        return reduce(lambda acc, pair: pair[0](acc, pair[1]), zip(ops, factors[1:]), factors[0])
    if len(words) == 1:
        return resolve_term(words[0])
    return make(words[0], *words[1:])


def cmd_make(args) -> int:
    g = build_from_words(args.spec)
    if args.canonical:
        g = canonical_graph(g)
    text = format_edge_list(g) if args.output == "text" else graph6_encode(g) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_survey(args) -> int:
    if args.bridged:
        report = bridged_survey(args.max_n)
        print(_dump(report.to_dict()))
        return EXIT_OK
    q = SurveyQuery(
        max_n=args.max_n,
        source="graph6_stream" if args.source else "builtin_enumerator",
        source_path=args.source,
        forbidden_patterns=tuple(_split_list(args.forbid)),
        predicates=tuple(_split_list(args.predicate)),
        connected_only=not args.include_disconnected,
    )
    result = run_survey(q, jobs=args.jobs)
    if args.output == "json":
        print(result.to_json())
    elif args.output == "graph6":
        sys.stdout.write("".join(s + "\n" for s in result.graphs))
    else:
        sys.stdout.write(result.to_text())
    return EXIT_OK


def cmd_hull(args) -> int:
    g = resolve_term(args.input, args.format)
    res = convex_hull(g, parse_set(args.set))
    print(_dump({
        "geodetic_iteration_number": res.geodetic_iteration_number,
        "hull": sorted(res.hull),
        "iterations": res.iterations,
        "size": len(res.hull),
    }))
    return EXIT_OK


def cmd_gates(args) -> int:
    g = resolve_term(args.input, args.format)
    print(_dump(gate_report(g, parse_set(args.set)).to_dict()))
    return EXIT_OK


# -- parser -----------------------------------------------------------------


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="smoothgraph", description="Smoothness of graphs: checks, classes, constructions, surveys.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", help="fixture name, family term (K5, C6, P3, Q3), file path, graph6 string or '-'")
        p.add_argument("--format", choices=["auto", "graph6", "edgelist"], default="auto", help="input format")

    p = sub.add_parser("check", help="decide smoothness")
    add_input(p)
    p.add_argument("--method", default="edge", choices=["naive", "edge", "star", "convexity", "all"])
    p.add_argument("--witness", action="store_true", help="print the violating five-tuple")
    p.add_argument("--output", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", help="JSON report of class memberships")
    add_input(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("make", help="build a graph and print it as graph6")
    p.add_argument("spec", nargs="+", help="FAMILY PARAMS..., 'A box B', 'A strong B', 'A lex B' or 'amalgam SPEC.json'")
    p.add_argument("-o", "--out", help="write to this file instead of stdout")
    p.add_argument("--output", choices=["graph6", "text"], default="graph6")
    p.add_argument("--canonical", action="store_true", help="relabel canonically before printing")
    p.set_defaults(func=cmd_make)

    p = sub.add_parser("survey", help="filter all small graphs")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--forbid", action="append", help="comma-separated fixture names")
    p.add_argument("--predicate", action="append", help="comma-separated predicates, e.g. not-smooth,bridged")
    p.add_argument("--source", help="graph6 file to scan instead of the built-in enumerator")
    p.add_argument("--include-disconnected", action="store_true")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--bridged", action="store_true", help="report the bridged K113-free survey under both readings")
    p.add_argument("--output", choices=["text", "json", "graph6"], default="text")
    p.set_defaults(func=cmd_survey)

    for name, func, help_text in (("hull", cmd_hull, "convex hull of a vertex set"), ("gates", cmd_gates, "gate map of a vertex set")):
        p = sub.add_parser(name, help=help_text)
        add_input(p)
        p.add_argument("--set", required=True, help="comma-separated vertex ids")
        p.set_defaults(func=func)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_n", None) is not None and not 1 <= args.max_n <= MAX_N:
        print(f"error: --max-n must be in 1..{MAX_N}", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except NotGated as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
