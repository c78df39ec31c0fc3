"""Command line front end.

Exit codes: 0 holds / success, 1 fails, 2 bad input (depth, malformed
document), 3 I/O error, 4 inconclusive.
"""

from __future__ import annotations

import argparse
import errno
import json
import os
import sys
from typing import Sequence

from . import analysis
from .construction import build_diagram, canonical_sequence, system_names
from .diagram import DiagramError, validate
from .io import DiagramDocument, DocumentError, to_dot

EXIT_OK, EXIT_FAILS, EXIT_INPUT, EXIT_IO, EXIT_INCONCLUSIVE = 0, 1, 2, 3, 4

DEPTH_GUARDS = {"shift": 8, "bitwise-not": 8, "odometer": 14, "zstar": 200}

CHECKS = ("validate", "periodicity", "em", "minimal", "straight")


class UsageError(Exception):
    pass


def _system(name: str) -> str:
    try:
        return canonical_sequence(name).name
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _guard(system: str, depth: int, force: bool) -> None:
    if depth < 1:
        raise UsageError(f"depth must be at least 1, got {depth}")
    limit = DEPTH_GUARDS.get(system)
    if limit is not None and depth > limit:
        print(f"warning: depth {depth} exceeds the {system} guard of {limit}", file=sys.stderr)
        if not force:
            raise UsageError("refusing to build; pass --force to override")


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(text)


def _read_document(path: str) -> DiagramDocument:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return DiagramDocument.loads(text)


def _resolve(target: str, depth: int | None, default_depth: int, force: bool):
    """A document path, or a system name built on the fly. Returns (doc, sequence or None)."""
    if os.path.exists(target):
        doc = _read_document(target)
        if depth is not None and depth != doc.diagram.depth:
            raise UsageError(f"document has depth {doc.diagram.depth}, --depth {depth} given")
        seq = canonical_sequence(doc.system) if doc.system in system_names() else None
        return doc, seq
    if not _looks_like_system(target):
        raise FileNotFoundError(errno.ENOENT, "no such document or system", target)
    seq = canonical_sequence(target)
    depth = default_depth if depth is None else depth
    _guard(seq.name, depth, force)
    return DiagramDocument(seq.name, build_diagram(seq, depth)), seq


def _looks_like_system(name: str) -> bool:
    try:
        canonical_sequence(name)
    except ValueError:
        return False
    return True


def cmd_build(args) -> int:
    system = _system(args.system_pos or args.system or "")
    depth = args.depth_pos if args.depth_pos is not None else args.depth
    if depth is None:
        raise UsageError("build needs a depth")
    _guard(system, depth, args.force)
    doc = DiagramDocument(system, build_diagram(canonical_sequence(system), depth))
    _write(doc.dumps(), args.out)
    if args.out not in (None, "-"):
        print(f"{system}: sizes {doc.diagram.sizes} -> {args.out}", file=sys.stderr)
    return EXIT_OK


def _default_depth(args) -> int:
    if args.check == "periodicity":
        return 2 * args.m + 2
    if args.check in ("em", "minimal"):
        return args.search_depth
    return 4


def cmd_check(args) -> int:
    target = args.target or args.system
    if target is None:
        raise UsageError("check needs a document path or --system")
    doc, seq = _resolve(target, args.depth, _default_depth(args), args.force)
    d = doc.diagram
    if args.check == "validate":
        problems = validate(d)
        status = analysis.Status.FAILS if problems else analysis.Status.HOLDS
        verdict = analysis.Verdict(
            status,
            "validate",
            d.depth,
            {"violations": [str(p) for p in problems], "scope": "necessary-conditions-only"},
            f"{len(problems)} violations" if problems else "",
        )
    elif args.check == "periodicity":
        verdict = analysis.global_periodicity(d, args.m)
    elif args.check == "em":
        search = min(args.search_depth, d.depth)
        i_max = args.i_max if args.i_max is not None else max(0, min(3, search - 1))
        path = analysis.parse_path(d, args.path, i_max)
        verdict = analysis.em_check(d, path, i_max, search)
    elif args.check == "minimal":
        search = min(args.search_depth, d.depth)
        i_max = args.i_max if args.i_max is not None else 1
        verdict = analysis.minimality_check(d, i_max, search, seq)
    else:
        paths = analysis.straight_paths(d)
        verdict = analysis.Verdict(
            analysis.Status.HOLDS,
            "straight",
            d.depth,
            {"paths": [p.labels(d) for p in paths]},
            f"{len(paths)} straight paths",
        )
    report = json.dumps(verdict.to_dict(), indent=2, sort_keys=True, default=str)
    print(report if args.json else str(verdict))
    if args.out:
        _write(report + "\n", args.out)
    return verdict.exit_code


def cmd_export(args) -> int:
    target = args.target or args.system
    if target is None:
        raise UsageError("export needs a document path or --system")
    doc, _ = _resolve(target, args.depth, 2, args.force)
    text = to_dot(doc.diagram, doc.system) if args.format == "dot" else doc.dumps(edges=True)
    _write(text, args.out)
    return EXIT_OK


def cmd_oracle_compare(args) -> int:
    systems = system_names() if args.system in (None, "all") else [_system(args.system)]
    depth = args.depth if args.depth is not None else 7
    for name in systems:
        _guard(name, depth, args.force)
    failures = 0
    print(f"{'system':<12} {'connectivity':<14} {'W-formula':<10}")
    for name in systems:
        seq = canonical_sequence(name)
        report = analysis.oracle_compare(seq, build_diagram(seq, depth), max_level=depth)
        cells = [
            "PASS" if not report.mismatches else f"FAIL({len(report.mismatches)})",
            "PASS" if not report.w_mismatches else f"FAIL({len(report.w_mismatches)})",
        ]
        failures += not report.ok
        print(f"{name:<12} {cells[0]:<14} {cells[1]:<10}")
    return EXIT_FAILS if failures else EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hdiagram", description="Build and analyse h-diagrams.")
    sub = parser.add_subparsers(dest="command", required=True)
    systems = ", ".join(system_names())

    b = sub.add_parser("build", help="build a canonical diagram and write its document")
    b.add_argument("system_pos", nargs="?", metavar="SYSTEM", help=systems)
    b.add_argument("depth_pos", nargs="?", type=int, metavar="DEPTH")
    b.add_argument("--system")
    b.add_argument("--depth", type=int)
    b.add_argument("--out", help="output file (default stdout)")
    b.add_argument("--force", action="store_true", help="ignore the depth guard")
    b.set_defaults(func=cmd_build)

    c = sub.add_parser("check", help="run a check on a document or a built-in system")
    c.add_argument("target", nargs="?", help="document path or system name")
    c.add_argument("check", choices=CHECKS)
    c.add_argument("--system")
    c.add_argument("--depth", type=int)
    c.add_argument("--m", type=int, default=1)
    c.add_argument("--path", default="straight", help="'straight' or comma-separated indices per level")
    c.add_argument("--i-max", type=int, dest="i_max")
    c.add_argument("--search-depth", type=int, default=8, dest="search_depth")
    c.add_argument("--json", action="store_true", help="print the machine-readable report")
    c.add_argument("--out", help="also write the JSON report here")
    c.add_argument("--force", action="store_true")
    c.set_defaults(func=cmd_check)

    e = sub.add_parser("export", help="export a document as DOT or JSON with edge lists")
    e.add_argument("target", nargs="?", help="document path or system name")
    e.add_argument("--system")
    e.add_argument("--depth", type=int)
    e.add_argument("--format", choices=("dot", "json"), default="dot")
    e.add_argument("--out")
    e.add_argument("--force", action="store_true")
    e.set_defaults(func=cmd_export)

    o = sub.add_parser("oracle-compare", help="graph vs semantic connectivity, per system")
    o.add_argument("--system", default="all")
    o.add_argument("--depth", type=int)
    o.add_argument("--force", action="store_true")
    o.set_defaults(func=cmd_oracle_compare)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DocumentError, DiagramError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
