"""Command line front end.

Exit codes: 0 ok, 1 worked-example mismatch, 2 input/validation error,
3 power iteration did not converge, 4 scan invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import NoConvergence, SpecboundError
from .graph_bounds import graph_bound
from .graphs import GraphMatrixKind, parse_edge_list
from .matrix import DEFAULT_TOL, parse_matrix
from .examples_check import format_table, run_checks
from .report import graph_report_dict, matrix_report, render_csv, render_json
from .scan import ScanViolation, render_rows, run_scan

EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_NO_CONVERGENCE = 3
EXIT_VIOLATION = 4


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _positive_float(text: str) -> float:
    x = float(text)
    if not x > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return x


def _render(d: dict, fmt: str) -> str:
    return render_csv(d) if fmt == "csv" else render_json(d)


def cmd_matrix(args) -> int:
    A = parse_matrix(_read(args.file))
    sys.stdout.write(_render(matrix_report(A, args.tol, max_iters=args.max_iters).to_dict(), args.format))
    return 0


def cmd_graph(args) -> int:
    G = parse_edge_list(_read(args.file))
    rep = graph_bound(G, GraphMatrixKind(args.kind), args.direction, args.tol, args.max_iters)
    sys.stdout.write(_render(graph_report_dict(rep), args.format))
    return 0


def cmd_paper_examples(args) -> int:
    rows = run_checks()
    sys.stdout.write(format_table(rows))
    failed = [r for r in rows if not r.ok]
    if failed:
        r = failed[0]
        print(f"first mismatch: {r.matrix} {r.quantity}: printed {r.printed}, computed {r.computed!r}"
              f"{' (' + r.note + ')' if r.note else ''}; {len(failed)} row(s) failed", file=sys.stderr)
        return EXIT_MISMATCH
    return 0


def cmd_scan(args) -> int:
    try:
        summary, results = run_scan(args.count, args.seed, args.n_min, args.n_max, args.density,
                                    args.family, args.kind)
    except ScanViolation as exc:
        dump = Path(args.dump_dir) / f"specbound-violation-{args.seed}-{exc.index}.txt"
        dump.write_text(exc.dump)
        print(f"{exc}; reproducer written to {dump}", file=sys.stderr)
        return EXIT_VIOLATION
    sys.stdout.write(render_rows(results))
    sys.stdout.write("\n")
    sys.stdout.write(json.dumps(summary.to_dict(), indent=2) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="specbound",
                                description="Spectral radius bounds from average 2-row sums.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_format(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--json", dest="format", action="store_const", const="json")
        g.add_argument("--csv", dest="format", action="store_const", const="csv")
        sp.set_defaults(format="json")
        sp.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL,
                        help="power iteration relative tolerance (default %(default)g)")
        sp.add_argument("--max-iters", type=int, default=None,
                        help="power iteration cap (default 100 n^2 + 10000)")

    sp = sub.add_parser("matrix", help="bounds for a matrix file ('-' reads stdin)")
    sp.add_argument("file")
    add_format(sp)
    sp.set_defaults(func=cmd_matrix)

    sp = sub.add_parser("graph", help="bounds for a graph matrix")
    sp.add_argument("file")
    sp.add_argument("--kind", required=True, choices=[k.value for k in GraphMatrixKind])
    sp.add_argument("--direction", choices=["upper", "lower"], default="upper")
    add_format(sp)
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("paper-examples", help="check the worked examples against printed values")
    sp.set_defaults(func=cmd_paper_examples)

    sp = sub.add_parser("scan", help="seeded random comparison of the bound families")
    sp.add_argument("--count", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--n-min", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--density", type=float, required=True)
    sp.add_argument("--family", choices=["matrix", "graph"], default="matrix")
    sp.add_argument("--kind", choices=[k.value for k in GraphMatrixKind], default=None)
    sp.add_argument("--dump-dir", default=".", help="where reproducers of violations are written")
    sp.set_defaults(func=cmd_scan)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NoConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except (SpecboundError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
