"""Command-line front end: compile, check, trace, view, explain.

Exit codes: 0 = success/conformant, 1 = error-severity diagnostics,
2 = parse/IO/usage error.  The code reflects the worst outcome across
all inputs.  Outputs are deterministic: no timestamps, stable ordering.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import conformance
from .diagnostics import Diagnostic
from .errors import ParseError, UnknownElement, UnknownRule
from .mapper import MappingOptions, map_context
from .ssm_model import validate_context
from .ssm_parser import parse_ssm
from .sysml_ast import qname_text
from .sysml_text import emit, parse_sysml
from .trace_view import EDGE_KINDS, build_graph, query_json, reach, render_view

OK, DIAGNOSTICS, FAULT = 0, 1, 2


def _color_enabled() -> bool:
    value = os.environ.get("SSM2SYSML_COLOR")
    if value in ("0", "1"):
        return value == "1"
    return sys.stderr.isatty()


def _print_diag(diag: Diagnostic, color: bool) -> None:
    print(diag.to_text(color), file=sys.stderr)


def _load_sysml(path: str, color: bool):
    """Parse one .sysml file, or print the error and return None."""
    try:
        return parse_sysml(Path(path).read_text(), path)
    except OSError as exc:
        print(f"{path}: {exc.strerror or exc}", file=sys.stderr)
    except ParseError as exc:
        print(str(exc), file=sys.stderr)
    return None


def cmd_compile(args: argparse.Namespace) -> int:
    color = _color_enabled()
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    options = MappingOptions(state_pattern=frozenset(args.state_pattern))
    worst = OK
    for input_path in args.inputs:
        try:
            ctx = parse_ssm(Path(input_path).read_text(), input_path)
        except OSError as exc:
            print(f"{input_path}: {exc.strerror or exc}", file=sys.stderr)
            worst = max(worst, FAULT)
            continue
        except ParseError as exc:
            print(str(exc), file=sys.stderr)
            worst = max(worst, FAULT)
            continue
        problems = validate_context(ctx)
        if any(d.is_error for d in problems):
            for diag in problems:
                _print_diag(diag, color)
            worst = max(worst, DIAGNOSTICS)
            continue
        model, report = map_context(ctx, options)
        for warning in report.warnings:
            _print_diag(warning, color)
        target = out_dir / f"{ctx.name}.sysml"
        target.write_text(emit(model))
        if args.report:
            report_path = out_dir / f"{ctx.name}.report.json"
            report_path.write_text(
                json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n"
            )
        print(f"wrote {target}")
    return worst


def cmd_check(args: argparse.Namespace) -> int:
    color = _color_enabled()
    rule_ids = args.rules.split(",") if args.rules else None
    worst = OK
    collected: list[Diagnostic] = []
    for input_path in args.inputs:
        model = _load_sysml(input_path, color)
        if model is None:
            worst = max(worst, FAULT)
            continue
        try:
            diagnostics = conformance.check(model, rule_ids)
        except UnknownRule as exc:
            print(f"unknown rule id {exc.args[0]!r}", file=sys.stderr)
            return FAULT
        collected.extend(diagnostics)
        if any(d.is_error for d in diagnostics):
            worst = max(worst, DIAGNOSTICS)
    if args.format == "json":
        print(json.dumps([d.to_json() for d in collected], indent=2))
    else:
        for diag in collected:
            print(diag.to_text(color))
    return worst


def cmd_trace(args: argparse.Namespace) -> int:
    model = _load_sysml(args.model, _color_enabled())
    if model is None:
        return FAULT
    kinds = None
    if args.kinds:
        kinds = frozenset(args.kinds.split(","))
        unknown = kinds - EDGE_KINDS
        if unknown:
            print(
                "unknown edge kinds: " + ", ".join(sorted(unknown)),
                file=sys.stderr,
            )
            return FAULT
    direction = "backward" if args.backward else "forward"
    graph = build_graph(model)
    try:
        result = reach(graph, args.source, direction, kinds)
    except UnknownElement as exc:
        print(str(exc), file=sys.stderr)
        return FAULT
    if args.format == "json":
        query = f"trace {direction} from {args.source}"
        print(json.dumps(query_json(query, result), indent=2))
    else:
        for path in sorted(qname_text(p) for p in result):
            print(path)
    return OK


def cmd_view(args: argparse.Namespace) -> int:
    model = _load_sysml(args.model, _color_enabled())
    if model is None:
        return FAULT
    try:
        elements, report = render_view(model, args.view)
    except UnknownElement as exc:
        print(str(exc), file=sys.stderr)
        return FAULT
    if args.format == "json":
        print(json.dumps(query_json(f"view {args.view}", elements), indent=2))
    else:
        print(report)
    return OK


def cmd_explain(args: argparse.Namespace) -> int:
    try:
        print(conformance.explain(args.rule))
    except UnknownRule:
        print(f"unknown rule id {args.rule!r}", file=sys.stderr)
        return FAULT
    return OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ssm2sysml",
        description="Compile soft-systems contexts to SysML v2, lint, and trace.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compile = sub.add_parser("compile", help="compile .ssm files to .sysml")
    p_compile.add_argument("inputs", nargs="+", metavar="FILE.ssm")
    p_compile.add_argument("-o", "--out-dir", default="out")
    p_compile.add_argument(
        "--report", action="store_true", help="write a mapping report JSON per context"
    )
    p_compile.add_argument(
        "--state-pattern",
        action="append",
        default=[],
        metavar="RD_ID",
        help="model the named transformation's subject with a state machine",
    )
    p_compile.set_defaults(func=cmd_compile)

    p_check = sub.add_parser("check", help="lint .sysml files against the rule set")
    p_check.add_argument("inputs", nargs="+", metavar="FILE.sysml")
    p_check.add_argument("--format", choices=("text", "json"), default="text")
    p_check.add_argument("--rules", help="comma-separated rule ids to run")
    p_check.set_defaults(func=cmd_check)

    p_trace = sub.add_parser("trace", help="reachability query over a model")
    p_trace.add_argument("model", metavar="FILE.sysml")
    p_trace.add_argument("--from", dest="source", required=True, metavar="QNAME")
    direction = p_trace.add_mutually_exclusive_group()
    direction.add_argument("--forward", action="store_true")
    direction.add_argument("--backward", action="store_true")
    p_trace.add_argument("--kinds", help="comma-separated edge kinds to follow")
    p_trace.add_argument("--format", choices=("text", "json"), default="text")
    p_trace.set_defaults(func=cmd_trace)

    p_view = sub.add_parser("view", help="render a view's exposed elements")
    p_view.add_argument("model", metavar="FILE.sysml")
    p_view.add_argument("view", metavar="VIEW_NAME")
    p_view.add_argument("--format", choices=("text", "json"), default="text")
    p_view.set_defaults(func=cmd_view)

    p_explain = sub.add_parser("explain", help="describe one conformance rule")
    p_explain.add_argument("rule", metavar="RULE_ID")
    p_explain.set_defaults(func=cmd_explain)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
