"""``slope-atlas`` command-line entry point."""

from __future__ import annotations

import argparse
import json
import re
import sys
from math import gcd
from pathlib import Path
from typing import Sequence

from .chain import quad_chain
from .checkerboard import (
    LinkDiagram,
    alternating_bound,
    checkerboard_slopes,
    four_plat_diagram,
    is_diagonal,
    lemma9_check,
    pretzel_diagram,
)
from .edgepath import EdgePath
from .paths import (
    DEFAULT_CAP,
    EnumerationCapExceeded,
    enumerate_minimal_paths,
    even_path_knot,
    even_paths_link,
    extreme_paths,
)
from .rationals import Fraction
from .render import render_svg
from .slopes import sigma0, slope_report
from .survey import survey, write_csv, write_json
from .verify import SUITE_NAMES, run_suite

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_CAP, EXIT_IO = range(5)

_FRACTION_RE = re.compile(r"\s*([+-]?\d+)\s*/\s*(\d+)\s*")


class InputError(ValueError):
    pass


def parse_fraction(text: str) -> Fraction:
    """Parse a reduced ``p/q`` with ``0 < p < q``."""
    m = _FRACTION_RE.fullmatch(text)
    if not m:
        raise InputError(f"expected P/Q, got {text!r}")
    p, q = int(m[1]), int(m[2])
    if not 0 < p < q:
        raise InputError(f"{p}/{q} is outside 0 < p/q < 1")
    if gcd(p, q) != 1:
        raise InputError(f"{p}/{q} is not reduced")
    return Fraction(p, q)


def _dump(obj: object) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _cmd_info(args: argparse.Namespace) -> int:
    f = parse_fraction(args.fraction)
    report = slope_report(f, args.cap)
    sys.stdout.write(_dump(report.to_json()))
    if report.truncated:
        print(f"slope-atlas: more than {args.cap} minimal paths; showing extremes only", file=sys.stderr)
        return EXIT_CAP
    return EXIT_OK


def _cmd_survey(args: argparse.Namespace) -> int:
    if args.max_q < 2:
        raise InputError("--max-q must be at least 2")
    if args.jobs < 1:
        raise InputError("--jobs must be positive")
    rows = survey(args.max_q, jobs=args.jobs, cap=args.cap)
    write = write_csv if args.format == "csv" else write_json
    if args.out is None:
        write(rows, sys.stdout)
    else:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            write(rows, fh)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.max_q < 0:
        raise InputError("--max-q must be non-negative")
    kwargs = {}
    if args.inject_fault == "sigma0":
        kwargs["sigma0_fn"] = lambda f: sigma0(f) + 1
    results = run_suite(
        args.max_q,
        args.suite,
        seed=args.seed,
        n_moves=args.moves,
        progress=lambda r: print(r.line(), flush=True),
        **kwargs,
    )
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed for q <= {args.max_q}")
    return EXIT_VERIFY if failed else EXIT_OK


def _render_paths(f: Fraction, which: str, cap: int) -> list[tuple[str, EdgePath]]:
    if which == "extremes":
        lower, upper = extreme_paths(f)
        return [("lower " + _turn_label(lower), lower), ("upper " + _turn_label(upper), upper)]
    if which == "even":
        if f.den % 2:
            e = even_path_knot(f)
            return [("e " + _turn_label(e), e)]
        e0, e1 = even_paths_link(f)
        return [("e0 " + _turn_label(e0), e0), ("e1 " + _turn_label(e1), e1)]
    return [(_turn_label(p), p) for p in enumerate_minimal_paths(f, cap)]


def _turn_label(path: EdgePath) -> str:
    r, turns = path.turning()
    return f"r={r} [{', '.join(map(str, turns))}]"


def _cmd_render(args: argparse.Namespace) -> int:
    f = parse_fraction(args.fraction)
    svg = render_svg(quad_chain(f), _render_paths(f, args.paths, args.cap))
    Path(args.out).write_text(svg, encoding="utf-8")
    return EXIT_OK


def _load_diagram(args: argparse.Namespace) -> LinkDiagram:
    if args.four_plat:
        return four_plat_diagram(parse_fraction(args.four_plat))
    if args.pretzel:
        try:
            twists = [int(x) for x in args.pretzel.split(",")]
        except ValueError as exc:
            raise InputError(f"--pretzel expects comma-separated integers: {exc}") from exc
        return pretzel_diagram(twists)
    text = Path(args.diagram).read_text(encoding="utf-8")
    try:
        return LinkDiagram.from_json(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{args.diagram}: {exc}") from exc


def _cmd_checkerboard(args: argparse.Namespace) -> int:
    diagram = _load_diagram(args)
    cs = checkerboard_slopes(diagram)
    if args.mirror:
        cs = cs.mirror()
    bound = alternating_bound(diagram)
    out = {
        "n": diagram.n_components,
        "crossing_number": diagram.crossing_number,
        "mirror": args.mirror,
        **cs.to_json(),
        "diagonal": dict(zip("st", is_diagonal(cs))),
        "lemma9": lemma9_check(diagram),
    }
    if bound is not None:
        out["bound"] = {**bound, "bound": str(bound["bound"])}
    sys.stdout.write(_dump(out))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slope-atlas",
        description="Boundary slopes of diagonal surfaces in 2-bridge link exteriors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="full slope report for one fraction (JSON)")
    p.add_argument("fraction", help="reduced P/Q with 0 < P < Q")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum number of minimal paths to list")
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("survey", help="one row per reduced fraction up to a denominator bound")
    p.add_argument("--max-q", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=_cmd_survey)

    p = sub.add_parser("verify", help="exhaustive identity checks up to a denominator bound")
    p.add_argument("--max-q", type=int, required=True)
    p.add_argument("--suite", choices=SUITE_NAMES, default="all")
    p.add_argument("--seed", type=int, default=0, help="seed for the random triangle moves")
    p.add_argument("--moves", type=int, default=10**5, help="number of random triangle moves")
    p.add_argument("--inject-fault", choices=("sigma0",), help=argparse.SUPPRESS)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("render", help="SVG of the quadrilateral chain with paths")
    p.add_argument("fraction")
    p.add_argument("--paths", choices=("all", "extremes", "even"), default="extremes")
    p.add_argument("--out", required=True, help="output .svg file")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("checkerboard", help="checkerboard-surface slopes of an alternating diagram")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--diagram", help="diagram JSON file")
    src.add_argument("--four-plat", metavar="P/Q", help="use the 4-plat of a 2-bridge link")
    src.add_argument("--pretzel", metavar="A,B,...", help="use a same-sign pretzel link")
    p.add_argument("--mirror", action="store_true", help="report slopes of the mirror image")
    p.set_defaults(func=_cmd_checkerboard)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, which is already the input-error code
        return int(exc.code or 0)
    try:
        return args.func(args)
    except EnumerationCapExceeded as exc:
        print(f"slope-atlas: {exc}", file=sys.stderr)
        return EXIT_CAP
    except OSError as exc:
        print(f"slope-atlas: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"slope-atlas: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
