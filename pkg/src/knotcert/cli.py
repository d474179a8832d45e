"""``knotcert`` command line interface."""

from __future__ import annotations

import argparse
import json
import sys

from .batch import Options, analyze_batch, render
from .certify import validate_report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotcert",
        description="Analyze knot/link diagrams and certify splitness and primeness.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("file", help="diagram file ('-' for stdin)")
        p.add_argument("--format", choices=["pd", "gauss", "braid", "json"], default=None,
                       help="input grammar (default: detect per record)")
        out = p.add_mutually_exclusive_group()
        out.add_argument("--json", dest="as_json", action="store_true", default=True,
                         help="JSON lines output (default)")
        out.add_argument("--text", dest="as_json", action="store_false",
                         help="human-readable output")
        p.add_argument("--jobs", type=int, default=1, help="worker processes")

    analyze = sub.add_parser("analyze", help="certify every diagram in a file")
    common(analyze)
    analyze.add_argument("--assume-nontrivial", action="store_true",
                         help="assert that every link in the file is non-trivial")
    common(sub.add_parser("invariants", help="invariants only, no certification"))
    common(sub.add_parser("bridges", help="bridge decomposition dump"))

    check = sub.add_parser("validate", help="replay the evidence of an analyze report")
    check.add_argument("file", help="JSON-lines report produced by 'analyze --json'")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = _read(args.file)
    except OSError as exc:
        parser.error(str(exc))

    if args.command == "validate":
        rejected = 0
        for line in text.splitlines():
            if not line.strip():
                continue
            report = json.loads(line)
            if "summary" in report or "error" in report:
                continue
            problems = validate_report(report)
            rejected += bool(problems)
            src = report["input"]
            status = "REJECT " + "; ".join(problems) if problems else "ok"
            print(f"record {src.get('index')}: {status}")
        return 1 if rejected else 0

    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    options = Options(fmt=args.format, assume_nontrivial=getattr(args, "assume_nontrivial", False),
                      jobs=args.jobs, mode=args.command)
    try:
        reports = analyze_batch(text, options)
        failed = render(reports, args.as_json, print)
    except json.JSONDecodeError as exc:
        print(f"knotcert: invalid JSON input: {exc}", file=sys.stderr)
        return 1
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
