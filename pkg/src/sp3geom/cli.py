"""Command-line entry point: ``sp3geom {classify,project,section,verify-lemmas}``.

All input and output is JSON (files or stdin/stdout).  Exit status: 0 on
success, 2 when a check fails, 3 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .algebra import LinSubspace, rat
from .checks import SUITES, run_suite
from .fano import (FanoSection, analyse_section, dual_quartic, random_section,
                   section_through_line)
from .incidence import SigmaLine, line_from_axis
from .numeric import DEFAULT_PREC, MIN_PREC
from .projection import BaseLocusError, double_project, projection_center
from .quartic import F_eval, F_grad, classify_orbit
from .report import RunReport
from .sp3 import Point13, is_on_sigma

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 2, 3

CHECK_GROUPS = {
    "pivots": ("smooth-quartic", "quartic-residual", "pivots", "planes", "pivots-distinct", "off-omega"),
    "conics": ("conic-transport", "lagrangian", "smooth-conics"),
    "fibration": ("fibration",),
    "line-section": ("line-section",),
}


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _read_json(path: str | None):
    try:
        if path is None or path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path or 'stdin'}: {exc}") from exc


def _write(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _point(data) -> Point13:
    try:
        return Point13.from_json(data)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"malformed Point13 JSON: {exc}") from exc


def _line(data) -> SigmaLine:
    try:
        if "axis" in data:
            axis = LinSubspace.span([[rat(x) for x in v] for v in data["axis"]], 6)
            return line_from_axis(axis)
        return SigmaLine.from_json(data)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"malformed line JSON: {exc}") from exc


# ---------------------------------------------------------------------------


def cmd_classify(args) -> int:
    p = _point(_read_json(args.input))
    grad_zero = all(g == 0 for g in F_grad(p))
    out = {"orbit": classify_orbit(p).value, "F": str(F_eval(p)), "grad_zero": grad_zero}
    _write(_dump(out), args.out)
    return EXIT_OK


def cmd_project(args) -> int:
    line = _line(_read_json(args.line))
    p = _point(_read_json(args.point))
    if not is_on_sigma(p):
        raise InputError("point is not on Sigma")
    pd = projection_center(line)
    try:
        image = double_project(pd, p)
        out = {"image": [str(x) for x in image]}
    except BaseLocusError:
        out = {"error": "base_locus"}
    _write(_dump(out), args.out)
    return EXIT_OK


def _load_section(path):
    data = _read_json(path)
    try:
        sec = FanoSection.from_json(data)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"malformed section JSON: {exc}") from exc
    line = _line(data["line"]) if data.get("line") else None
    return sec, line


def cmd_section(args) -> int:
    if args.action == "new":
        if args.line:
            line = _line(_read_json(args.line))
            sec = section_through_line(line.axis, args.seed)
            data = sec.to_json()
            data["line"] = {"axis": line.axis.to_json()}
        else:
            sec = random_section(args.seed)
            data = sec.to_json()
        _write(_dump(data), args.out)
        return EXIT_OK

    sec, line = _load_section(args.input)
    if args.action == "dual-quartic":
        dq = dual_quartic(sec)
        _write(_dump(dq.to_json()), args.out)
        return EXIT_FAIL if dq.degenerate or not dq.smooth else EXIT_OK

    # verify
    groups = [g.strip() for g in args.checks.split(",") if g.strip()]
    unknown = [g for g in groups if g not in CHECK_GROUPS]
    if unknown:
        raise InputError(f"unknown check groups {unknown}; choose from {sorted(CHECK_GROUPS)}")
    if "line-section" in groups and line is None:
        raise InputError("line-section needs a section built with 'section new --line'")
    wanted = {name for g in groups for name in CHECK_GROUPS[g]}
    start = time.perf_counter()
    checks = analyse_section(sec, args.points, args.prec, line if "line-section" in groups else None)
    report = RunReport("section verify", sec.seed, args.prec,
                       [c for c in checks if c.name in wanted or c.name == "smooth-quartic"],
                       {"points": args.points})
    report.wall_time = round(time.perf_counter() - start, 3)
    _write(report.to_json(), args.out)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_verify_lemmas(args) -> int:
    start = time.perf_counter()
    checks = run_suite(args.suite, args.seed, args.trials, args.points, args.prec)
    precision = args.prec if args.suite == "section" else None
    report = RunReport(f"verify-lemmas {args.suite}", args.seed, precision, checks, {"trials": args.trials})
    report.wall_time = round(time.perf_counter() - start, 3)
    _write(report.to_json(), args.out)
    return EXIT_OK if report.passed else EXIT_FAIL


def _prec(text: str) -> int:
    value = int(text)
    if value < MIN_PREC:
        raise argparse.ArgumentTypeError(f"precision must be at least {MIN_PREC}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sp3geom", description="Geometry of the Sp3-grassmannian and its Fano sections.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="orbit of a point of P^13")
    p.add_argument("--in", dest="input", help="Point13 JSON file (default stdin)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("project", help="double projection from a line on Sigma")
    p.add_argument("--line", required=True, help="line JSON with 'axis' or 'span'")
    p.add_argument("--point", required=True, help="Point13 JSON on Sigma")
    p.add_argument("--out")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("section", help="Fano sections X = Sigma meet P^10")
    p.add_argument("action", choices=("new", "dual-quartic", "verify"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--line", help="for 'new': build the section through this line")
    p.add_argument("--in", dest="input", help="section JSON (default stdin)")
    p.add_argument("--checks", default="pivots,conics,fibration")
    p.add_argument("--points", type=int, default=20)
    p.add_argument("--prec", type=_prec, default=DEFAULT_PREC)
    p.add_argument("--out")
    p.set_defaults(func=cmd_section)

    p = sub.add_parser("verify-lemmas", help="run a seeded invariant suite")
    p.add_argument("--suite", choices=sorted(SUITES), default="core")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--points", type=int, default=20)
    p.add_argument("--prec", type=_prec, default=DEFAULT_PREC)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify_lemmas)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"sp3geom: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
