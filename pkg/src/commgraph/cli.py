"""Command-line interface.

Subcommands: realize (graph -> Coxeter matrix + presentation), commuting
(family commuting graphs), mckay (dims / multiplicities / Cartan data as
JSON), metrics (distance invariants as JSON), verify (the claim-check
suite).  Exit codes: 0 success, 1 verification mismatch, 2 usage or parse
error.  Output is deterministic for fixed arguments; the SEED environment
variable overrides the fixed seed of the character-table eigenvector step.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import characters as ch
from . import commuting as cm
from . import coxeter as cx
from . import graphs as gs
from . import groups as gr
from . import metrics as mt
from .verify import run_verification, SECTIONS

FAMILY_CODES = {
    "cyclic": (gr.CYCLIC, True),
    "bd": (gr.BINARY_DIHEDRAL, True),
    "bt": (gr.BINARY_TETRAHEDRAL, False),
    "bo": (gr.BINARY_OCTAHEDRAL, False),
    "bi": (gr.BINARY_ICOSAHEDRAL, False),
}


class UsageError(Exception):
    pass


def _parse_family(tokens: list[str]) -> tuple[gr.FiniteGroup, list[str]]:
    """Family syntax: cyclic N | bd N | bt | bo | bi.  Returns the group and
    the unconsumed tokens."""
    if not tokens:
        raise UsageError("missing family (cyclic N | bd N | bt | bo | bi)")
    code = tokens[0].lower()
    if code not in FAMILY_CODES:
        raise UsageError(f"unknown family {tokens[0]!r} (choose cyclic N, bd N, bt, bo, bi)")
    kind, wants_param = FAMILY_CODES[code]
    rest = tokens[1:]
    param = None
    if wants_param:
        if not rest:
            raise UsageError(f"family {code!r} needs a numeric parameter")
        try:
            param = int(rest[0])
        except ValueError as exc:
            raise UsageError(f"family parameter must be an integer, got {rest[0]!r}") from exc
        rest = rest[1:]
    try:
        return gr.group_for(kind, param), rest
    except gr.GroupConstructionError as exc:
        raise UsageError(str(exc)) from exc


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as handle:
            handle.write(text)


def _graph_json(g: gs.SimpleGraph) -> str:
    payload = {"n": g.n, "labels": list(g.labels),
               "edges": [[u, v] for u, v in g.edges()]}
    return json.dumps(payload, indent=2) + "\n"


def cmd_realize(args: argparse.Namespace) -> int:
    try:
        with open(args.graph) as handle:
            g = gs.from_edge_list_text(handle.read())
    except (OSError, ValueError) as exc:
        print(f"error: cannot read edge list: {exc}", file=sys.stderr)
        return 2
    if args.off_label == "inf":
        label: cx.Label = cx.INFINITY
    else:
        try:
            label = int(args.off_label)
        except ValueError:
            print(f"error: --off-label must be an integer >= 3 or 'inf', got {args.off_label!r}",
                  file=sys.stderr)
            return 2
    try:
        matrix = cx.realize(g, label)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cx.commuting_graph_of_generators(matrix) != g:
        print("error: realization round-trip self-check failed", file=sys.stderr)
        return 1
    _write(cx.to_text(matrix), args.matrix_out)
    _write(cx.presentation_text(matrix), args.presentation_out)
    return 0


def cmd_commuting(args: argparse.Namespace) -> int:
    H, rest = _parse_family(args.family)
    if not rest:
        names = ", ".join(s.name for s in cm.canonical_subsets(H))
        raise UsageError(f"missing subset name; available: {names}")
    subset_name = rest[0]
    named = cm.subsets_by_name(H)
    if subset_name not in named:
        raise UsageError(f"unknown subset {subset_name!r}; available: "
                         + ", ".join(named))
    g = cm.commuting_graph(H, named[subset_name].elements)
    if args.format == "dot":
        _write(gs.to_dot(g), args.output)
    elif args.format == "json":
        _write(_graph_json(g), args.output)
    else:
        _write(gs.to_edge_list_text(g), args.output)
    return 0


def cmd_mckay(args: argparse.Namespace) -> int:
    H, rest = _parse_family(args.family)
    if rest:
        raise UsageError(f"unexpected arguments: {' '.join(rest)}")
    payload = ch.mckay_json(H)
    _write(json.dumps(payload, indent=2) + "\n", args.output)
    return 0


def cmd_metrics(args: argparse.Namespace) -> int:
    if args.graph is not None:
        if args.family:
            raise UsageError("give either a family or --graph, not both")
        try:
            with open(args.graph) as handle:
                g = gs.from_edge_list_text(handle.read())
        except (OSError, ValueError) as exc:
            print(f"error: cannot read edge list: {exc}", file=sys.stderr)
            return 2
    else:
        H, rest = _parse_family(args.family)
        if rest:
            raise UsageError(f"unexpected arguments: {' '.join(rest)}")
        g = cm.full_commuting_graph(H)
    try:
        report = mt.full_report(g)
    except (mt.DisconnectedGraphError, mt.SizeBoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _write(json.dumps(report.to_json_dict(), indent=2) + "\n", args.output)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        report = run_verification(args.section)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    for line in report.lines():
        print(line)
    if args.json is not None:
        _write(json.dumps(report.to_json_dict(), indent=2) + "\n", args.json)
    return 0 if report.passed() else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="commgraph",
        description="Commuting graphs of Coxeter generator sets and the finite "
                    "SL(2,C) subgroups: realization, McKay data, metric invariants.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("realize", help="edge list -> Coxeter matrix + presentation")
    p.add_argument("graph", help="edge list file (first line n, then 'u v' lines)")
    p.add_argument("--off-label", default="inf",
                   help="label for non-adjacent generator pairs: integer >= 3 or 'inf'")
    p.add_argument("--matrix-out", default=None, help="matrix output path (default stdout)")
    p.add_argument("--presentation-out", default=None,
                   help="presentation output path (default stdout)")
    p.set_defaults(fn=cmd_realize)

    p = sub.add_parser("commuting", help="commuting graph of a named subset")
    p.add_argument("family", nargs="+",
                   help="family, parameter, and subset: e.g. 'bd 3 Gamma2', 'bt full'")
    p.add_argument("--format", choices=("edgelist", "dot", "json"), default="edgelist")
    p.add_argument("--output", default=None)
    p.set_defaults(fn=cmd_commuting)

    p = sub.add_parser("mckay", help="McKay multiplicities and Cartan data as JSON")
    p.add_argument("family", nargs="+", help="e.g. 'bi' or 'cyclic 5'")
    p.add_argument("--output", default=None)
    p.set_defaults(fn=cmd_mckay)

    p = sub.add_parser("metrics", help="distance invariants as JSON")
    p.add_argument("family", nargs="*", help="e.g. 'bt' or 'bd 3' (or use --graph)")
    p.add_argument("--graph", default=None, help="edge list file instead of a family")
    p.add_argument("--output", default=None)
    p.set_defaults(fn=cmd_metrics)

    p = sub.add_parser("verify", help="run the claim-verification suite")
    p.add_argument("section", nargs="?", default="all",
                   choices=["all", *SECTIONS], help="which section to run")
    p.add_argument("--json", default=None, help="also write the report as JSON")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
