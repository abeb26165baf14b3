"""Command-line front end.

    edgering analyze GRAPH_FILE [--json|--pretty] [--max-dilate N]
    edgering analyze --family NAME [PARAM ...]
    edgering family NAME [PARAM ...] [--oracle]
    edgering explore [--bipartite] [--max-vertices N] [--samples N] [--seed S] [--mode random|exhaustive]

Exit codes: 0 success, 1 input error, 2 guard exceeded, 3 internal inconsistency.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from . import config
from .errors import EdgeRingError, GraphError, GraphFormatError, GuardExceeded, InternalInconsistency
from .explore import as_record, explore
from .families import FamilySpec, build, h_formula
from .generate import EXHAUSTIVE_MAX_VERTICES
from .graph import parse_graph
from .report import build_report, render_pretty

EXIT_INPUT = 1
EXIT_GUARD = 2
EXIT_INTERNAL = 3


def _fail(code: int, kind: str, message: str) -> int:
    json.dump({"error": kind, "message": message, "exit_code": code}, sys.stderr)
    sys.stderr.write("\n")
    return code


def _emit_report(report, pretty: bool) -> None:
    if pretty:
        sys.stdout.write(render_pretty(report))
    else:
        sys.stdout.write(report.model_dump_json(indent=2) + "\n")


def _family_spec(tokens: list[str]) -> FamilySpec:
    name, *raw = tokens
    try:
        params = tuple(int(x) for x in raw)
    except ValueError:
        raise GraphError(f"family parameters must be integers, got {raw}") from None
    return FamilySpec(name, params)


def cmd_analyze(args: argparse.Namespace) -> int:
    if args.family:
        spec = _family_spec(args.family)
        report = build_report(build(spec), family=spec.label)
    elif args.path:
        try:
            data = Path(args.path).read_bytes()
        except OSError as exc:
            raise GraphError(f"cannot read {args.path}: {exc.strerror}") from None
        report = build_report(parse_graph(data))
    else:
        raise GraphError("analyze needs a graph file or --family")
    _emit_report(report, args.pretty)
    return 0


def cmd_family(args: argparse.Namespace) -> int:
    spec = _family_spec([args.name] + args.params)
    formula = h_formula(spec) if args.oracle else None
    if args.oracle and formula is None:
        raise GraphError(f"no closed-form h-polynomial is known for {spec.name}")
    report = build_report(build(spec), family=spec.label, formula=formula)
    _emit_report(report, args.pretty)
    return 0


def cmd_explore(args: argparse.Namespace) -> int:
    if args.mode == "exhaustive" and args.max_vertices > EXHAUSTIVE_MAX_VERTICES:
        raise GuardExceeded(f"exhaustive mode is limited to {EXHAUSTIVE_MAX_VERTICES} vertices")
    config.check_vertices(args.max_vertices, "explore")
    if args.min_vertices > args.max_vertices:
        raise GraphError("--min-vertices exceeds --max-vertices")
    for item in explore(
        mode=args.mode,
        bipartite=args.bipartite,
        max_vertices=args.max_vertices,
        samples=args.samples,
        seed=args.seed,
        min_vertices=args.min_vertices,
    ):
        sys.stdout.write(json.dumps(as_record(item), sort_keys=True) + "\n")
        sys.stdout.flush()
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edgering", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def output_flags(p: argparse.ArgumentParser) -> None:
        group = p.add_mutually_exclusive_group()
        group.add_argument("--json", action="store_true", help="JSON report (default)")
        group.add_argument("--pretty", action="store_true", help="human-readable table")
        p.add_argument("--max-dilate", type=int, help="override the max_dilate guard")

    p = sub.add_parser("analyze", help="analyse a graph file")
    p.add_argument("path", nargs="?", help="graph file: d, then one 'u v' edge per line")
    p.add_argument("--family", nargs="+", metavar="NAME", help="analyse a named family instead")
    output_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("family", help="build and analyse a named graph")
    p.add_argument("name", help="kmn, complete, gmnr, frak_g, wheel, cycle, petersen, h1, h2, h3")
    p.add_argument("params", nargs="*", help="integer parameters")
    p.add_argument("--oracle", action="store_true", help="compare with the closed-form h-polynomial")
    output_flags(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("explore", help="search for almost Gorenstein rings violating condition (*)")
    p.add_argument("--bipartite", action="store_true")
    p.add_argument("--max-vertices", type=int, default=8)
    p.add_argument("--min-vertices", type=int, default=2)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=("random", "exhaustive"), default="random")
    p.set_defaults(func=cmd_explore, max_dilate=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    previous = config.guards()
    if args.max_dilate is not None:
        config.set_guards(dataclasses.replace(previous, max_dilate=args.max_dilate))
    try:
        return args.func(args)
    except GraphFormatError as exc:
        return _fail(EXIT_INPUT, exc.kind, str(exc))
    except GraphError as exc:
        return _fail(EXIT_INPUT, "invalid input", str(exc))
    except GuardExceeded as exc:
        return _fail(EXIT_GUARD, "guard exceeded", str(exc))
    except InternalInconsistency as exc:
        return _fail(EXIT_INTERNAL, "internal inconsistency", str(exc))
    except EdgeRingError as exc:  # pragma: no cover
        return _fail(EXIT_INPUT, "error", str(exc))
    finally:
        config.set_guards(previous)


if __name__ == "__main__":
    sys.exit(main())
