"""Command-line surface.

Commands: generate, lines, verify, transform, search, plot.
Exit codes are uniform across commands: 0 success / verification passed,
1 verification negative (monochromatic line, too many collinear points,
unsatisfiable search, structure mismatch), 2 input error, 3 search
budget exhausted.  CUBICLINES_PRECISION overrides the default precision.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from mpmath import mp, mpf

from .configfile import (
    ConfigFileError,
    default_color_names,
    dump_configuration,
    load_configuration,
    save_configuration,
)
from .curve import curve_cycle
from .geometry import enumerate_lines
from .groupmodel import thirds_coloring, verify_coloring_group
from .numerics import DEFAULT_PRECISION, PrecisionError, working_precision
from .projective import find_missing_line, send_to_infinity
from .search import (
    DEFAULT_NODE_BUDGET,
    SearchBudgetError,
    SearchStatus,
    search_coloring,
)
from .svgplot import Window, render_svg

ENV_PRECISION = "CUBICLINES_PRECISION"
MAX_LINE_SIZE = 3    # generated configurations never have 4 collinear points


def _env_precision() -> int:
    raw = os.environ.get(ENV_PRECISION)
    if raw is None:
        return DEFAULT_PRECISION
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"{ENV_PRECISION} must be an integer, got {raw!r}")


def _parse_window(raw: str) -> Window:
    parts = raw.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(
            "window must be XMIN,XMAX,YMIN,YMAX")
    try:
        values = [float(p) for p in parts]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    try:
        return Window(*values)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _tolerance(args, precision: int) -> mpf | None:
    if args.tol is None:
        return None
    with working_precision(precision):
        return mpf(args.tol)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="ascii") as handle:
            handle.write(text)


# -----------------------------
# Command handlers
# -----------------------------

def _cmd_generate(args) -> int:
    config = curve_cycle(args.n, args.precision)
    coloring = thirds_coloring(args.n)
    if args.out is None:
        sys.stdout.write(dump_configuration(config, coloring))
    else:
        save_configuration(args.out, config, coloring)
        infinite = sum(1 for p in config if p.is_infinite())
        print(f"wrote {len(config)} points ({infinite} at infinity) with "
              f"thirds coloring to {args.out}")
    return 0


def _cmd_lines(args) -> int:
    loaded = load_configuration(args.path)
    hypergraph = enumerate_lines(loaded.config,
                                 _tolerance(args, loaded.config.precision))
    counts = hypergraph.size_counts()
    if args.json:
        payload = {
            "vertex_count": hypergraph.vertex_count,
            "edges": [list(e) for e in hypergraph.edges],
            "size_counts": {str(s): counts[s] for s in sorted(counts)},
        }
        print(json.dumps(payload, indent=2))
    else:
        for e in hypergraph.edges:
            print(f"line: {' '.join(map(str, e))} (size {len(e)})")
        summary = ", ".join(f"L{s}={counts[s]}" for s in sorted(counts))
        print(f"total lines: {len(hypergraph)}; {summary}")
    return 0


def _cmd_verify(args) -> int:
    loaded = load_configuration(args.path)
    if loaded.coloring is None:
        raise ConfigFileError("file carries no coloring to verify")
    config = loaded.config
    coloring = loaded.coloring
    tol = _tolerance(args, config.precision)
    failures = 0

    hypergraph = enumerate_lines(config, tol)
    sizes = hypergraph.size_counts()
    largest = max(sizes) if sizes else len(config)
    print(f"points: {len(config)}; lines: {len(hypergraph)}; "
          f"max line size: {largest}")

    if config.provenance is not None:
        if largest > MAX_LINE_SIZE:
            failures += 1
            offenders = [e for e in hypergraph.edges if len(e) > MAX_LINE_SIZE]
            for e in offenders:
                print(f"FAIL: {len(e)} collinear points: {' '.join(map(str, e))}")
        else:
            print(f"collinearity bound {MAX_LINE_SIZE}: PASS")

    geo = tuple(hypergraph.monochromatic_edges(coloring))
    if geo:
        failures += 1
        for e in geo:
            print(f"FAIL: monochromatic line (geometric): {' '.join(map(str, e))}")
    else:
        print("geometric coloring check: PASS")

    if config.provenance is not None:
        n = config.provenance
        if n != len(config):
            failures += 1
            print(f"FAIL: provenance n={n} but file has {len(config)} points")
        else:
            group = verify_coloring_group(n, coloring)
            if group.passed:
                print("group model coloring check: PASS")
            else:
                failures += 1
                for e in group.monochromatic:
                    print("FAIL: monochromatic line (group model): "
                          f"{' '.join(map(str, e))}")

    print("VERIFY:", "PASS" if failures == 0 else "FAIL")
    return 0 if failures == 0 else 1


def _cmd_transform(args) -> int:
    loaded = load_configuration(args.path)
    config = loaded.config
    tol = _tolerance(args, config.precision)
    line = find_missing_line(config, tol, seed=args.seed)
    image, transform = send_to_infinity(config, line, tol)

    before = enumerate_lines(config, tol).edges
    after = enumerate_lines(image, tol).edges
    if before != after:
        print("FAIL: line structure changed under the transform "
              f"({len(before)} lines before, {len(after)} after)")
        return 1

    if args.out is None:
        sys.stdout.write(dump_configuration(image, loaded.coloring,
                                            loaded.color_names, transform))
    else:
        save_configuration(args.out, image, loaded.coloring,
                           loaded.color_names, transform)
        print(f"wrote {len(image)} affine points to {args.out}")
        print(f"missing line: ({mp.nstr(line[0], 6)} : {mp.nstr(line[1], 6)} : "
              f"{mp.nstr(line[2], 6)})")
        print(f"line structure preserved: {len(before)} lines")
    return 0


def _cmd_search(args) -> int:
    loaded = load_configuration(args.path)
    config = loaded.config
    hypergraph = enumerate_lines(config, _tolerance(args, config.precision))
    outcome = search_coloring(hypergraph, args.k, args.budget)
    print(f"status: {outcome.status.value}")
    print(f"nodes explored: {outcome.nodes}")
    if outcome.status is SearchStatus.SATISFIABLE:
        witness = outcome.witness
        print(f"witness: {' '.join(map(str, witness.assignment))}")
        if args.out is not None:
            save_configuration(args.out, config, witness,
                               default_color_names(witness.k))
            print(f"wrote witness coloring to {args.out}")
        return 0
    if outcome.status is SearchStatus.UNSATISFIABLE:
        return 1
    return 3


def _cmd_plot(args) -> int:
    loaded = load_configuration(args.path)
    if loaded.coloring is None:
        raise ConfigFileError("file carries no coloring to plot")
    svg = render_svg(loaded.config, loaded.coloring, args.window)
    _emit(svg, args.out)
    if args.out is not None:
        print(f"wrote SVG to {args.out}")
    return 0


# -----------------------------
# Parser
# -----------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubiclines",
        description="Point sets on the cubic y^2 = x^3 - x^2 with no four "
                    "collinear points, their line structure, and colorings "
                    "with no monochromatic line.")
    sub = parser.add_subparsers(dest="command", required=True)
    precision_default = _env_precision()

    p = sub.add_parser("generate",
                       help="write the n-point configuration with its "
                            "thirds coloring")
    p.add_argument("--n", type=int, required=True, help="number of points (>= 2)")
    p.add_argument("--precision", type=int, default=precision_default)
    p.add_argument("--out", help="output JSON path (stdout if omitted)")
    p.set_defaults(handler=_cmd_generate)

    p = sub.add_parser("lines", help="enumerate the maximal collinear subsets")
    p.add_argument("path")
    p.add_argument("--tol", help="collinearity tolerance, e.g. 1e-64")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_lines)

    p = sub.add_parser("verify",
                       help="check the collinearity bound and that no line "
                            "is monochromatic")
    p.add_argument("path")
    p.add_argument("--tol")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("transform",
                       help="map the configuration into the affine plane, "
                            "preserving its line structure")
    p.add_argument("path")
    p.add_argument("--out", help="output JSON path (stdout if omitted)")
    p.add_argument("--tol")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the fallback missing-line search")
    p.set_defaults(handler=_cmd_transform)

    p = sub.add_parser("search",
                       help="decide whether k colors avoid monochromatic lines")
    p.add_argument("path")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--tol")
    p.add_argument("--out", help="write the witness coloring to this path")
    p.set_defaults(handler=_cmd_search)

    p = sub.add_parser("plot", help="render the colored configuration as SVG")
    p.add_argument("path")
    p.add_argument("--out", help="output SVG path (stdout if omitted)")
    p.add_argument("--window", type=_parse_window,
                   help="zoom window XMIN,XMAX,YMIN,YMAX")
    p.set_defaults(handler=_cmd_plot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except SearchBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, PrecisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
