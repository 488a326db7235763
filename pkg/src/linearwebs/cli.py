"""Command-line front end.

Subcommands:

    analyze <file>       full analysis bundle for one matrix
    closed-form <file>   closed-form equations only
    verify-paper         audit battery over the three bundled examples
    survey               seeded genericity survey over a parameter family

Matrix files are JSON arrays of arrays of integers or "p/q" strings; CSV
with the same tokens is accepted as a fallback.  Exit codes: 0 success,
1 internal invariant violation (including failed derived-math checks in
verify-paper), 2 bad user input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from .analysis import analyze, reference_audit
from .families import FAMILY_CONSTRAINTS, FamilySpec, survey
from .ratlin import RatMatrix
from .webmodel import WebConstructionError, build_web, closed_form

__all__ = ["main"]

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2


class _UsageError(Exception):
    pass


def _load_matrix(path: str) -> RatMatrix:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = _parse_csv(text, path)
    if isinstance(data, dict):
        # object form {"n": 3, "A": [[...], ...]}
        if "A" not in data:
            raise _UsageError(f"matrix object in {path} lacks an \"A\" field")
        stated_n = data.get("n")
        data = data["A"]
        if stated_n is not None and (not isinstance(data, list)
                                     or len(data) != stated_n):
            raise _UsageError(f"matrix in {path} does not have the stated "
                              f"order n={stated_n}")
    try:
        return RatMatrix.from_json(data)
    except (ValueError, TypeError) as exc:
        raise _UsageError(f"malformed matrix in {path}: {exc}") from exc


def _parse_csv(text: str, path: str):
    rows = [row for row in csv.reader(io.StringIO(text)) if row]
    if not rows:
        raise _UsageError(f"{path} is neither JSON nor CSV matrix data")
    return [[token.strip() for token in row] for row in rows]


def _emit(payload_text: str, payload_json, args) -> None:
    body = (json.dumps(payload_json, indent=2, sort_keys=True) + "\n"
            if args.json else payload_text + "\n")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _cmd_analyze(args) -> int:
    A = _load_matrix(args.matrix)
    try:
        bundle = analyze(A)
    except WebConstructionError as exc:
        raise _UsageError(str(exc)) from exc
    _emit(bundle.to_text(), bundle.to_dict(), args)
    return EXIT_OK


def _cmd_closed_form(args) -> int:
    A = _load_matrix(args.matrix)
    try:
        equations = closed_form(build_web(A))
    except WebConstructionError as exc:
        raise _UsageError(str(exc)) from exc
    _emit(equations.to_text(), equations.to_dict(), args)
    return EXIT_OK


def _cmd_verify_paper(args) -> int:
    report = reference_audit()
    _emit(report.to_text(), report.to_dict(), args)
    return EXIT_OK if report.derived_ok else EXIT_INTERNAL


def _cmd_survey(args) -> int:
    if args.count <= 0:
        raise _UsageError("--count must be positive")
    try:
        spec = FamilySpec(name=args.family, n=args.n, entry_bound=args.bound)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    stats = survey(spec, count=args.count, seed=args.seed, jobs=args.jobs)
    _emit(stats.to_text(), stats.to_dict(), args)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linearwebs",
        description="exact construction and audit of linear codimension-two webs")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true",
                       help="emit JSON instead of text")
        p.add_argument("--out", metavar="FILE", default=None,
                       help="write the report to FILE instead of stdout")

    p = sub.add_parser("analyze", help="full analysis of one matrix")
    p.add_argument("matrix", help="JSON or CSV matrix file")
    common(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("closed-form", help="closed-form equations of one matrix")
    p.add_argument("matrix", help="JSON or CSV matrix file")
    common(p)
    p.set_defaults(func=_cmd_closed_form)

    p = sub.add_parser("verify-paper",
                       help="audit the three bundled reference examples")
    common(p)
    p.set_defaults(func=_cmd_verify_paper)

    p = sub.add_parser("survey", help="seeded genericity survey")
    p.add_argument("--family", default="generic",
                   choices=sorted(FAMILY_CONSTRAINTS))
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=9,
                   help="entry box half-width for sampling")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker threads; results are identical at any level")
    common(p)
    p.set_defaults(func=_cmd_survey)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
