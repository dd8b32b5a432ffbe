"""Command-line entry point."""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .pipeline import EMIT_CHOICES, RunConfig, run


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="javamap",
        description=(
            "Analyze a Java-subset project tree: build its semantic model, "
            "compute size/complexity/inheritance metrics, and emit graphs, "
            "a file treemap, and charts."
        ),
    )
    parser.add_argument("--input", required=True, metavar="DIR", help="project root to analyze")
    parser.add_argument("--out", required=True, metavar="DIR", help="output directory")
    parser.add_argument("--plan", metavar="FILE", help="GQM plan JSON (default: built-in plan)")
    parser.add_argument(
        "--emit",
        metavar="LIST",
        default=",".join(EMIT_CHOICES),
        help=f"comma-separated outputs to produce (default: all of {','.join(EMIT_CHOICES)})",
    )
    parser.add_argument(
        "--strict",
        action="store_true",
        help="exit 1 when any source file fails to lex or parse",
    )
    parser.add_argument(
        "--dump-ast",
        action="store_true",
        help="print each parsed file's syntax tree as indented text",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_arg_parser().parse_args(argv)
    emit = frozenset(token.strip() for token in args.emit.split(",") if token.strip())
    config = RunConfig(
        input_root=args.input,
        output_dir=args.out,
        plan_path=args.plan,
        emit=emit,
        fail_on_parse_error=args.strict,
        dump_ast=args.dump_ast,
    )
    return run(config).exit_code


if __name__ == "__main__":
    sys.exit(main())
