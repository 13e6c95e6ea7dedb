"""``lpa`` command line: analyze, eval, quotient, batch, matrix.

Exit codes: 0 success, 1 usage, 2 parse error, 3 semantic/precondition error.
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path as FsPath
import sys

from .errors import LPAError
from .expr import parse_element
from .graph import Graph, load_graph
from .report import analysis_report, format_report_text
from .scalars import parse_field
from .structure import edge_matrix, quotient_graph

EXIT_USAGE = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _csp_bound(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("csp bound must be >= 1")
    return n


def _field(text):
    try:
        return parse_field(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field, default="q", help="q (default) or gf:p")
    common.add_argument("--csp-bound", type=_csp_bound, default=8)
    common.add_argument("--format", choices=["json", "text"], default="text")
    common.add_argument("--seed", type=int, default=0)

    parser = _Parser(prog="lpa", description="Leavitt path algebra toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[common], help="simplicity analysis of a graph")
    p.add_argument("graph")
    p.add_argument("--self-check", type=int, default=0, metavar="N",
                   help="run N randomized engine checks seeded by --seed")

    p = sub.add_parser("eval", parents=[common], help="evaluate an element expression")
    p.add_argument("graph")
    p.add_argument("expr")

    p = sub.add_parser("quotient", parents=[common], help="quotient graph by a vertex set")
    p.add_argument("graph")
    p.add_argument("--subset", required=True, help="comma-separated vertex ids")

    p = sub.add_parser("batch", parents=[common], help="analyze every *.json in a directory")
    p.add_argument("directory")
    p.add_argument("--out", help="also write <name>.report.json files here")

    p = sub.add_parser("matrix", parents=[common], help="edge matrix of a graph")
    p.add_argument("graph")
    return parser


def read_graph(path: str) -> tuple[Graph, str]:
    fs = FsPath(path)
    try:
        text = fs.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    g = load_graph(text)
    try:
        name = json.loads(text).get("name") or fs.stem
    except AttributeError:
        name = fs.stem
    return g, name


def cmd_analyze(args, out):
    g, name = read_graph(args.graph)
    report = analysis_report(g, name, args.field, args.csp_bound, args.self_check, args.seed)
    if args.format == "json":
        out.write(json.dumps(report, indent=2) + "\n")
    else:
        out.write(format_report_text(report) + "\n")
    return 0


def cmd_eval(args, out):
    g, _ = read_graph(args.graph)
    a = parse_element(args.expr, g, args.field)
    if args.format == "json":
        out.write(json.dumps({"element": str(a), "degree": a.degree,
                              "terms": len(a)}) + "\n")
    else:
        out.write(f"{a}\n")
    return 0


def cmd_quotient(args, out):
    g, _ = read_graph(args.graph)
    subset = [s.strip() for s in args.subset.split(",") if s.strip()]
    f = quotient_graph(g, subset)
    out.write(f.dumps() + "\n")
    return 0


def cmd_matrix(args, out):
    g, _ = read_graph(args.graph)
    m = edge_matrix(g)
    if args.format == "json":
        out.write(json.dumps({"edges": list(m.edges), "matrix": m.tolist()}) + "\n")
    else:
        out.write("   " + " ".join(m.edges) + "\n")
        for e, row in zip(m.edges, m.entries):
            out.write(f"{e} " + " ".join(str(x) for x in row) + "\n")
    return 0


def cmd_batch(args, out):
    directory = FsPath(args.directory)
    if not directory.is_dir():
        raise UsageError(f"not a directory: {directory}")
    files = sorted(directory.glob("*.json"))
    results = []
    code = 0
    for path in files:
        try:
            g, name = read_graph(str(path))
            report = analysis_report(g, name, args.field, args.csp_bound)
            results.append((path.name, report, None))
        except LPAError as exc:
            results.append((path.name, None, str(exc)))
            code = max(code, exc.exit_code)
    if args.out:
        outdir = FsPath(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        for fname, report, _ in results:
            if report is not None:
                target = outdir / (FsPath(fname).stem + ".report.json")
                target.write_text(json.dumps(report, indent=2) + "\n")
    summary = [
        {"file": fname,
         "simple": report["simple"] if report else None,
         "condition_L": report["condition_L"]["holds"] if report else None,
         "condition_i": report["condition_i"]["holds"] if report else None,
         "error": err}
        for fname, report, err in results
    ]
    if args.format == "json":
        out.write(json.dumps({"reports": [r for _, r, _ in results if r],
                              "summary": summary}, indent=2) + "\n")
    else:
        for fname, report, err in results:
            out.write(f"== {fname}\n")
            out.write((format_report_text(report) if report else f"error: {err}") + "\n")
        out.write("\n")
        width = max([len(s["file"]) for s in summary] + [4])
        out.write(f"{'file':<{width}}  simple  (L)    (i)\n")
        for s in summary:
            if s["error"]:
                out.write(f"{s['file']:<{width}}  error\n")
            else:
                out.write(f"{s['file']:<{width}}  {_yn(s['simple']):<6}  "
                          f"{_yn(s['condition_L']):<5}  {_yn(s['condition_i'])}\n")
    return code


def _yn(b):
    return "yes" if b else "no"


COMMANDS = {
    "analyze": cmd_analyze,
    "eval": cmd_eval,
    "quotient": cmd_quotient,
    "batch": cmd_batch,
    "matrix": cmd_matrix,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"lpa: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LPAError as exc:
        print(f"lpa: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
