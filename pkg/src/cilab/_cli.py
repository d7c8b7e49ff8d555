"""
Command-line surface.

    cilab check FILE [--format json|text]
    cilab derive-j FILE
    cilab solve FILE --a A --b B
    cilab enumerate --order N [--mode oracle|propagate] [--classes] [--out FILE]
    cilab verify-theorem --max-order N [--mode ...] [--record FILE] [--expect FILE]
    cilab random --order N --seed S --count K

Exit codes: 0 success (for check: a CI-quasigroup or CI-loop), 1 a
well-formed negative answer (not left CI, theorem failure, expectation
mismatch), 2 input or usage error.
"""

import argparse
import json
import sys
from typing import Any, Dict, List, Optional, Sequence

from . import _core
from ._api import log_error
from ._canonical import run_search
from ._ci import (
    Classification,
    check_left_ci,
    check_right_ci,
    classify,
    derive_left_j,
    derive_right_j,
    solve_left,
)
from ._errors import CilabError
from ._formats import (
    ReportFormat,
    render_classes,
    render_report,
    render_reports,
    structure_to_dict,
)
from ._io import TableDocument, read_table_file, render_documents, write_documents
from ._random import random_quasigroup
from ._regression import compare_to_expectations, load_expectations, record_expectation
from ._search import SearchConfig, SearchMode
from ._theorem import verify_theorem

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


def _emit_out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _map_list(m) -> Optional[List[int]]:
    return None if m is None else list(m.image)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_check(args: argparse.Namespace) -> int:
    doc = read_table_file(args.file)
    report = classify(doc.table)
    extra: Dict[str, Any] = {}
    if doc.j is not None:
        extra["supplied_j"] = {
            "j": list(doc.j.image),
            "left_ci": check_left_ci(doc.table, doc.j),
            "right_ci": check_right_ci(doc.table, doc.j),
            "equals_derived": report.jr is not None and report.jr == doc.j,
        }
    _emit_out(render_report(report, args.format, extra=extra))
    if report.classification in (Classification.CI_QUASIGROUP, Classification.CI_LOOP):
        return EXIT_OK
    return EXIT_NEGATIVE


def cmd_derive_j(args: argparse.Namespace) -> int:
    doc = read_table_file(args.file)
    jr = derive_right_j(doc.table)
    jl = derive_left_j(doc.table)
    if args.format == ReportFormat.JSON.value:
        _emit_out(json.dumps({"jr": _map_list(jr), "jl": _map_list(jl)}, indent=2))
    else:
        for name, m in (("J_r", jr), ("J_l", jl)):
            _emit_out(f"{name}: {'none' if m is None else ' '.join(map(str, m.image))}")
    return EXIT_OK if jr is not None else EXIT_NEGATIVE


def cmd_solve(args: argparse.Namespace) -> int:
    doc = read_table_file(args.file)
    n = doc.table.order
    for name, value in (("a", args.a), ("b", args.b)):
        if not 0 <= value < n:
            raise CilabError(f"--{name} {value} outside 0..{n - 1}")
    jr = derive_right_j(doc.table)
    if jr is None:
        sys.stderr.write("table is not a left CI-groupoid; no J_r to solve with\n")
        return EXIT_NEGATIVE
    x = solve_left(doc.table, jr, args.a, args.b)
    if args.format == ReportFormat.JSON.value:
        _emit_out(json.dumps({"a": args.a, "b": args.b, "x": x, "jr": list(jr.image)}, indent=2))
    else:
        _emit_out(f"x = {x}  ({args.a}*{x} = {doc.table.entry(args.a, x)})")
    return EXIT_OK


def _workers(args: argparse.Namespace) -> int:
    return args.workers if args.workers is not None else _core.default_workers()


def cmd_enumerate(args: argparse.Namespace) -> int:
    config = SearchConfig(
        order=args.order,
        mode=SearchMode(args.mode),
        up_to_isomorphism=args.classes,
        worker_count=_workers(args),
        node_limit=args.node_limit,
        prune_rows=not args.no_row_pruning,
    )
    result = run_search(config)
    structures, classes = result.structures, result.classes

    if args.out:
        write_documents(
            args.out,
            [TableDocument(s.table, s.jr, args.out) for s in result.written],
        )

    if args.format == ReportFormat.JSON.value:
        payload: Dict[str, Any] = {
            "order": args.order,
            "mode": config.mode.value,
            "pair_count": len(structures),
            "class_count": None if classes is None else len(classes),
        }
        if classes is not None:
            payload["classes"] = json.loads(render_classes(classes, ReportFormat.JSON))
        elif not args.out:
            payload["structures"] = [structure_to_dict(s) for s in structures]
        _emit_out(json.dumps(payload, indent=2))
    else:
        summary = f"order {args.order} ({config.mode.value}): {len(structures)} structures"
        if classes is not None:
            summary += f", {len(classes)} isomorphism classes"
        _emit_out(summary)
        if classes is not None:
            _emit_out(render_classes(classes))
        elif not args.out:
            _emit_out(render_documents([TableDocument(s.table, s.jr) for s in structures]))
    return EXIT_OK


def cmd_verify_theorem(args: argparse.Namespace) -> int:
    mode = SearchMode(args.mode)
    expectations = load_expectations(args.expect) if args.expect else {}
    reports = []
    status = EXIT_OK
    for n in range(1, args.max_order + 1):
        report = verify_theorem(
            n, mode,
            worker_count=_workers(args),
            node_limit=args.node_limit,
            prune_rows=not args.no_row_pruning,
        )
        reports.append(report)
        if not report.verified:
            status = EXIT_NEGATIVE
        if args.record:
            record_expectation(args.record, report)
        comparison = compare_to_expectations(expectations, report)
        if comparison is not None and not comparison["matches"]:
            sys.stderr.write(
                f"expectation mismatch: expected '{comparison['expected']}', "
                f"observed '{comparison['observed']}'\n"
            )
            status = EXIT_NEGATIVE
    _emit_out(render_reports(reports, args.format, include_timing=not args.no_timing))
    return status


def cmd_random(args: argparse.Namespace) -> int:
    docs = [
        TableDocument(random_quasigroup(args.order, args.seed + i), None, f"seed {args.seed + i}")
        for i in range(args.count)
    ]
    _emit_out(render_documents(docs))
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format", choices=[f.value for f in ReportFormat], default=ReportFormat.TEXT.value,
        help="output format (default: text)",
    )


def _add_search(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--mode", choices=[m.value for m in SearchMode], default=SearchMode.PROPAGATE.value,
        help="enumeration engine (default: propagate)",
    )
    p.add_argument("--workers", type=int, default=None, help="worker processes (env WORKERS)")
    p.add_argument("--node-limit", type=int, default=None, help="abort after this many nodes")
    p.add_argument(
        "--no-row-pruning", action="store_true",
        help="do not fill rows as permutations (soundness check)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cilab",
        description="Check CI identities on Cayley tables and verify that every "
                    "left CI-groupoid is a CI-quasigroup by exhaustive search.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="structured logs on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="classify a table")
    p.add_argument("file")
    _add_format(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("derive-j", help="derive J_r and J_l")
    p.add_argument("file")
    _add_format(p)
    p.set_defaults(func=cmd_derive_j)

    p = sub.add_parser("solve", help="solve a*x = b as x = b*J_r(a)")
    p.add_argument("file")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("enumerate", help="all left CI structures of one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--classes", action="store_true", help="one representative per class")
    p.add_argument("--out", default=None, help="write structures in table format")
    _add_search(p)
    _add_format(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify-theorem", help="check the theorem for orders 1..N")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--record", default=None, help="write counts to an expectations file")
    p.add_argument("--expect", default=None, help="fail on mismatch with an expectations file")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed times")
    _add_search(p)
    _add_format(p)
    p.set_defaults(func=cmd_verify_theorem)

    p = sub.add_parser("random", help="seeded random quasigroups")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(func=cmd_random)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        _core.enable()
        _core.configure(level="info")
    try:
        return args.func(args)
    except (CilabError, OSError) as e:
        log_error("command failed", error=e, command=args.command)
        sys.stderr.write(f"error: {e}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
