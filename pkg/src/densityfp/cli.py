"""Command-line front end.

Exit codes: 0 success / fingerprints equal, 1 fingerprints differ,
2 parse error, 3 invalid sequence (overlap, empty motif, ...).
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from fractions import Fraction
from typing import List, Optional, Tuple

from . import pwl
from .analysis import fingerprints_equal
from .densities import densigram, fingerprint, psi, trapezoids
from .errors import InvalidSequence, ParseError
from .fixtures import FIXTURES
from .oracle import coverage
from .plotting import PlotSpec, default_tmax, render_svg
from .seqcore import PeriodicSequence, dumps, load, neighbor_radii, normalize, parse_rational

EXIT_OK, EXIT_DIFFER, EXIT_PARSE, EXIT_INVALID = 0, 1, 2, 3


def parse_k_range(text: str) -> Tuple[int, int]:
    """Accept ``k``, ``a..b`` or ``a-b``."""
    for sep in ("..", "-"):
        if sep in text:
            a, b = text.split(sep, 1)
            try:
                lo, hi = int(a), int(b)
            except ValueError:
                raise argparse.ArgumentTypeError(f"bad k range {text!r}")
            if lo < 0 or lo > hi:
                raise argparse.ArgumentTypeError(f"bad k range {text!r}")
            return lo, hi
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad k range {text!r}")
    if k < 0:
        raise argparse.ArgumentTypeError("k must be non-negative")
    return k, k


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def read_sequence(source: str) -> PeriodicSequence:
    """Load a sequence file, falling back to a built-in fixture name."""
    if os.path.exists(source):
        raw = load(source)
    elif source in FIXTURES:
        raw = FIXTURES[source]()
    else:
        raise ParseError(f"no such file or built-in fixture: {source!r}")
    return normalize(raw)


def _emit(out_dir: Optional[str], name: str, text: str) -> None:
    if out_dir is None:
        sys.stdout.write(f"# {name}\n{text}")
        return
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, name)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    print(path)


def _write_functions(args, named: List[Tuple[str, pwl.PiecewiseLinear]], spec: PlotSpec,
                     extra: dict) -> None:
    for label, f in named:
        if spec.format == "csv":
            _emit(args.out, f"{label}.csv", pwl.to_csv(f, with_decimal=args.decimal))
        else:
            curves = [(label, f)] + extra.get(label, [])
            _emit(args.out, f"{label}.svg", render_svg(curves, spec.t_max, title=label))


def cmd_compute(args) -> int:
    S = read_sequence(args.sequence)
    lo, hi = args.k
    named = [(f"psi_{k}", psi(S, k)) for k in range(lo, hi + 1)]
    t_max = args.tmax or default_tmax([f for _, f in named])
    spec = PlotSpec((lo, hi), t_max, args.format, include_trapezoids=args.trapezoids)
    extra = {}
    if spec.include_trapezoids:
        for k in spec.ks:
            if k >= 1:
                extra[f"psi_{k}"] = [(f"eta_{k},{tr.i}", tr.as_pwl()) for tr in trapezoids(S, k)]
    _write_functions(args, named, spec, extra)
    return EXIT_OK


def cmd_densigram(args) -> int:
    S = read_sequence(args.sequence)
    lo, hi = args.k
    fp = fingerprint(S, max(hi, 1))
    sums = densigram(fp)
    named = [(f"densigram_{k}", sums[k - 1]) for k in range(max(lo, 1), hi + 1)]
    if not named:
        raise argparse.ArgumentTypeError("densigram needs k >= 1")
    t_max = args.tmax or default_tmax([f for _, f in named])
    spec = PlotSpec((max(lo, 1), hi), t_max, args.format, include_densigram=True)
    if spec.format == "svg" and args.out is None:
        sys.stdout.write(render_svg(named, t_max, title="densigram"))
        return EXIT_OK
    if spec.format == "svg":
        _emit(args.out, "densigram.svg", render_svg(named, t_max, title="densigram"))
        return EXIT_OK
    _write_functions(args, named, spec, {})
    return EXIT_OK


def cmd_compare(args) -> int:
    S = read_sequence(args.first)
    Q = read_sequence(args.second)
    if args.neighbor_radii:
        S, Q = neighbor_radii(S), neighbor_radii(Q)
    report = fingerprints_equal(S, Q)
    sys.stdout.write(report.to_csv() if args.format == "csv" else report.to_text())
    return EXIT_OK if report.equal else EXIT_DIFFER


def cmd_oracle(args) -> int:
    S = read_sequence(args.sequence)
    prof = coverage(S, args.t)
    k_max = args.k[1] if args.k else prof.max_fold
    print("k,length")
    for k in range(args.k[0] if args.k else 0, k_max + 1):
        print(f"{k},{prof[k]}")
    return EXIT_OK


def cmd_maxima(args) -> int:
    S = read_sequence(args.sequence)
    k = args.k[0]
    found = pwl.local_maxima(psi(S, k))
    print(f"# psi_{k}: {len(found)} local maxima")
    print("t_start,t_end,value")
    for a, b, v in found:
        print(f"{a},{b},{v}")
    return EXIT_OK


def cmd_demo(args) -> int:
    names = sorted(FIXTURES) if args.name == "all" else [args.name]
    for name in names:
        if name not in FIXTURES:
            raise ParseError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}")
        _emit(args.out, f"{name}.seq", dumps(FIXTURES[name]()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="densityfp",
                                description="Density functions of weighted periodic sequences")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def plot_flags(sp, default_k):
        sp.add_argument("--k", type=parse_k_range, default=default_k, help="k or a..b")
        sp.add_argument("--tmax", type=_rational_arg, default=None)
        sp.add_argument("--format", choices=["csv", "svg"], default="csv")
        sp.add_argument("--decimal", action="store_true", help="add a decimal value column to CSV")
        sp.add_argument("--out", default=None, help="output directory (default: stdout)")

    sp = sub.add_parser("compute", help="corner lists of psi_k")
    sp.add_argument("sequence", help="sequence file or built-in fixture name")
    plot_flags(sp, (0, 0))
    sp.add_argument("--trapezoids", action="store_true", help="overlay eta_{k,i} in SVG output")
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("densigram", help="accumulated sums psi_1 + ... + psi_k")
    sp.add_argument("sequence")
    plot_flags(sp, (1, 3))
    sp.set_defaults(func=cmd_densigram)

    sp = sub.add_parser("compare", help="exact fingerprint comparison")
    sp.add_argument("first")
    sp.add_argument("second")
    sp.add_argument("--neighbor-radii", action="store_true")
    sp.add_argument("--format", choices=["text", "csv"], default="text")
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("oracle", help="brute-force coverage lengths at one t")
    sp.add_argument("sequence")
    sp.add_argument("--t", type=_rational_arg, required=True)
    sp.add_argument("--k", type=parse_k_range, default=None, help="k range to print (default: all nonzero)")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("maxima", help="local maxima of psi_k")
    sp.add_argument("sequence")
    sp.add_argument("--k", type=parse_k_range, required=True)
    sp.set_defaults(func=cmd_maxima)

    sp = sub.add_parser("demo", help="write a built-in fixture as a sequence file")
    sp.add_argument("name", help=f"one of {sorted(FIXTURES)} or 'all'")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_demo)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (ParseError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidSequence as exc:
        print(f"invalid sequence: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
