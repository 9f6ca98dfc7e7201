"""Command line front end.

Subcommands: ``decompose``, ``arboricity``, ``check``, ``verify`` and
``export-dot``.  Exit codes: 0 on success, 2 when the instance is
infeasible or the checked artifact invalid, 1 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .decompose import (
    Certificate,
    Decomposition,
    UnboundedArboricityError,
    arboricity,
    decompose,
)
from .io import (
    ParseError,
    export_dot,
    format_assignment,
    format_certificate,
    parse_assignment,
    parse_graph,
)
from .oracle import check_condition, verify_decomposition
from .preassign import preassign

__all__ = ["run_cli", "main"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="forestdecomp",
        description="Partition a multigraph's edges into forests, or produce "
        "a violating vertex set proving that impossible.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dec = sub.add_parser(
        "decompose", help="decompose into r forests or emit a certificate"
    )
    p_dec.add_argument("--forests", type=int, required=True, metavar="R")
    p_dec.add_argument(
        "--preassign",
        metavar="PINS",
        help="comma-separated 'edge_id:slot' pairs; slots must be 1..s",
    )
    p_dec.add_argument("input", help="edge list file")
    p_dec.add_argument("--out", metavar="FILE", help="assignment/certificate file")
    p_dec.add_argument("--dot", metavar="FILE", help="also write a DOT rendering")
    p_dec.add_argument(
        "--figure", metavar="FILE", help="also render a figure (png/pdf/svg)"
    )

    p_arb = sub.add_parser("arboricity", help="compute the exact arboricity")
    p_arb.add_argument("input", help="edge list file")
    p_arb.add_argument("--out", metavar="FILE", help="assignment file for r*")
    p_arb.add_argument(
        "--cert-out", metavar="FILE", help="certificate file for r* - 1"
    )

    p_chk = sub.add_parser(
        "check", help="brute-force check of the sparsity condition"
    )
    p_chk.add_argument("--forests", type=int, required=True, metavar="R")
    p_chk.add_argument("input", help="edge list file")

    p_ver = sub.add_parser("verify", help="validate an assignment file")
    p_ver.add_argument("--forests", type=int, required=True, metavar="R")
    p_ver.add_argument("--assignment", required=True, metavar="FILE")
    p_ver.add_argument("input", help="edge list file")

    p_dot = sub.add_parser("export-dot", help="render an assignment as DOT")
    p_dot.add_argument("--assignment", required=True, metavar="FILE")
    p_dot.add_argument("input", help="edge list file")
    p_dot.add_argument("--out", required=True, metavar="FILE")
    p_dot.add_argument(
        "--figure", metavar="FILE", help="also render a figure (png/pdf/svg)"
    )

    return parser


def _read_file(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _parse_pins(spec: str, r: int, m: int) -> list[int]:
    """Parse 'edge_id:slot,...' into the slot-ordered pin list."""
    by_slot: dict[int, int] = {}
    ids: set[int] = set()
    for item in spec.split(","):
        fields = item.strip().split(":")
        if len(fields) != 2:
            raise _UsageError(f"bad preassign entry {item!r}; expected 'edge_id:slot'")
        try:
            eid, slot = int(fields[0]), int(fields[1])
        except ValueError:
            raise _UsageError(
                f"bad preassign entry {item!r}; expected 'edge_id:slot'"
            ) from None
        if not 0 <= eid < m:
            raise _UsageError(f"pinned edge id {eid} out of range for m={m}")
        if eid in ids:
            raise _UsageError(f"edge {eid} pinned twice")
        if slot in by_slot:
            raise _UsageError(f"slot {slot} used twice")
        ids.add(eid)
        by_slot[slot] = eid
    s = len(by_slot)
    if sorted(by_slot) != list(range(1, s + 1)):
        raise _UsageError(f"preassign slots must be exactly 1..{s}")
    if s > r:
        raise _UsageError(f"{s} pins exceed the {r} available forests")
    return [by_slot[slot] for slot in range(1, s + 1)]


def _render_figure(g, d: Decomposition, path: str) -> None:
    from .viz import render_decomposition  # deferred: pulls in matplotlib

    render_decomposition(g, d, path)


def _cmd_decompose(args: argparse.Namespace) -> int:
    g = parse_graph(_read_file(args.input))
    if args.forests < 0:
        raise _UsageError("--forests must be nonnegative")
    pins = _parse_pins(args.preassign, args.forests, g.m) if args.preassign else []
    result = decompose(g, args.forests)
    if isinstance(result, Certificate):
        _write_output(format_certificate(g, args.forests, result), args.out)
        return 2
    if pins:
        result = preassign(g, result, pins)
    _write_output(format_assignment(result), args.out)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as handle:
            handle.write(export_dot(g, result))
    if args.figure:
        _render_figure(g, result, args.figure)
    return 0


def _cmd_arboricity(args: argparse.Namespace) -> int:
    g = parse_graph(_read_file(args.input))
    try:
        result = arboricity(g)
    except UnboundedArboricityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"arboricity {result.arboricity}")
    if args.out:
        _write_output(format_assignment(result.decomposition), args.out)
    if args.cert_out:
        if result.certificate is None:
            print("note: arboricity 0 has no certificate", file=sys.stderr)
        else:
            _write_output(
                format_certificate(g, result.arboricity - 1, result.certificate),
                args.cert_out,
            )
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    g = parse_graph(_read_file(args.input))
    if args.forests < 0:
        raise _UsageError("--forests must be nonnegative")
    report = check_condition(g, args.forests)
    if report.satisfied:
        print(f"SATISFIED r={args.forests}")
        return 0
    assert report.violator is not None
    sys.stdout.write(
        format_certificate(g, args.forests, Certificate(report.violator))
    )
    return 2


def _cmd_verify(args: argparse.Namespace) -> int:
    g = parse_graph(_read_file(args.input))
    d = parse_assignment(_read_file(args.assignment))
    if args.forests < 0:
        raise _UsageError("--forests must be nonnegative")
    if d.r != args.forests:
        print(f"INVALID: assignment targets r={d.r}, expected {args.forests}")
        return 2
    if len(d.assignment) != g.m:
        print(f"INVALID: assignment covers {len(d.assignment)} edges, graph has {g.m}")
        return 2
    if not verify_decomposition(g, d):
        print("INVALID: some class is not a forest or coverage is broken")
        return 2
    print(f"VALID r={d.r}")
    return 0


def _cmd_export_dot(args: argparse.Namespace) -> int:
    g = parse_graph(_read_file(args.input))
    d = parse_assignment(_read_file(args.assignment))
    if len(d.assignment) != g.m or not verify_decomposition(g, d):
        print("error: assignment is not a valid decomposition of the graph",
              file=sys.stderr)
        return 2
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write(export_dot(g, d))
    if args.figure:
        _render_figure(g, d, args.figure)
    return 0


_HANDLERS = {
    "decompose": _cmd_decompose,
    "arboricity": _cmd_arboricity,
    "check": _cmd_check,
    "verify": _cmd_verify,
    "export-dot": _cmd_export_dot,
}


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # argparse --help
        code = exc.code
        return int(code) if isinstance(code, int) else 0


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))
