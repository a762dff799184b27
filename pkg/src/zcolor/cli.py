"""Command-line interface.

Subcommands: gen, analyze, det, mincolor, color, verify, report. Exit codes
follow one contract everywhere: 0 success / verified, 1 verification failed,
2 invalid input (bad parameters, malformed files, violated hypotheses).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import report as report_mod
from .coloring import (
    coloring_space,
    count_colors,
    link_determinant,
    load_coloring,
    normalize,
    save_coloring,
    verify_coloring,
)
from .diagram import is_connected, link_components, load_diagram, save_diagram
from .errors import UnsupportedDiagramError, ZColorError
from .generators import PretzelSpec, TorusSpec, gen_pretzel, gen_torus
from .mincolor import min_colors

__all__ = ["main", "entry", "build_parser"]


def _parse_twists(text: str) -> PretzelSpec:
    try:
        twists = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ZColorError(f"cannot parse twist list {text!r}: {exc}") from exc
    return PretzelSpec(twists)


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_gen(args) -> int:
    if args.family == "pretzel":
        d = gen_pretzel(_parse_twists(args.twists))
    else:
        d = gen_torus(TorusSpec(p=args.p, n=args.n))
    path = Path(args.output) if args.output else Path(f"{d.name}.json")
    save_diagram(d, path)
    _emit(
        args,
        {
            "path": str(path),
            "name": d.name,
            "crossings": len(d.crossings),
            "arc_count": d.arc_count,
        },
        [f"wrote {path}: {d.name} with {len(d.crossings)} crossings, {d.arc_count} arcs"],
    )
    return 0


def _sample_coloring(d):
    space = coloring_space(d)
    if space.kernel.dim < 2:
        return None
    return min_colors(d).witness


def cmd_analyze(args) -> int:
    d = load_diagram(args.diagram)
    connected = is_connected(d)
    det = link_determinant(d) if connected else None
    space = coloring_space(d)
    colorable = space.kernel.dim >= 2
    sample = _sample_coloring(d) if colorable else None
    payload = {
        "name": d.name,
        "arc_count": d.arc_count,
        "crossings": len(d.crossings),
        "free_circles": d.free_circles,
        "connected": connected,
        "components": link_components(d),
        "determinant": det,
        "kernel_dim": space.kernel.dim,
        "z_colorable": colorable,
        "sample_coloring": list(sample.colors) if sample else None,
    }
    lines = [
        f"name: {d.name}",
        f"arcs: {d.arc_count}  crossings: {len(d.crossings)}  free circles: {d.free_circles}",
        f"connected: {connected}  components: {payload['components']}",
        f"determinant: {det if det is not None else 'undefined (disconnected or free circles)'}",
        f"kernel dimension: {space.kernel.dim}",
        f"z-colorable: {colorable}",
    ]
    if sample:
        lines.append(f"sample nontrivial coloring: {list(sample.colors)}")
    _emit(args, payload, lines)
    return 0


def cmd_det(args) -> int:
    d = load_diagram(args.diagram)
    det = link_determinant(d)
    _emit(args, {"name": d.name, "determinant": det}, [str(det)])
    return 0


def cmd_mincolor(args) -> int:
    d = load_diagram(args.diagram)
    result = min_colors(d, bound=args.bound)
    if args.output:
        save_coloring(d.name, result.witness, args.output)
    payload = {
        "name": d.name,
        "minimum": result.minimum,
        "exact": result.exact,
        "bound": result.bound_used,
        "witness": list(result.witness.colors),
    }
    lines = [
        f"minimum colors: {result.minimum}",
        f"exact: {result.exact} (coefficient bound {result.bound_used})",
        f"witness: {list(result.witness.colors)}",
    ]
    if args.output:
        lines.append(f"wrote witness to {args.output}")
    _emit(args, payload, lines)
    return 0


def cmd_color(args) -> int:
    d = load_diagram(args.diagram)
    name, coloring = load_coloring(args.coloring)
    if name != d.name:
        print(
            f"warning: coloring file names diagram {name!r}, checking against {d.name!r}",
            file=sys.stderr,
        )
    check = verify_coloring(d, coloring)
    payload = {
        "name": d.name,
        "valid": check.ok,
        "failures": list(check.failures),
        "distinct_colors": count_colors(coloring),
        "normalized": list(normalize(coloring).colors),
    }
    if check.ok:
        lines = [
            f"valid coloring with {payload['distinct_colors']} distinct colors",
            f"normalized: {payload['normalized']}",
        ]
    else:
        lines = [f"invalid coloring; relation fails at crossings {list(check.failures)}"]
    _emit(args, payload, lines)
    return 0 if check.ok else 1


def _outcome_payload(outcomes) -> list[dict]:
    return [
        {
            "claim": o.claim,
            "parameters": o.parameters,
            "check": o.check,
            "expected": repr(o.expected),
            "computed": repr(o.computed),
            "pass": o.passed,
        }
        for o in outcomes
    ]


def cmd_verify(args) -> int:
    if args.claim == "thm1":
        outcomes = report_mod.verify_thm1(p=args.p, n=args.n)
    elif args.claim == "thm2":
        outcomes = report_mod.verify_thm2(n=args.n, strands=args.strands)
    elif args.claim == "thm3":
        outcomes = report_mod.verify_thm3(n=args.n)
    else:
        if args.fixtures:
            diagrams = [load_diagram(p) for p in args.fixtures]
            for d in diagrams:
                if not is_connected(d):
                    raise UnsupportedDiagramError(
                        f"fact check needs connected fixtures; {d.name} is not"
                    )
        else:
            diagrams = report_mod.default_fact_fixtures()
        outcomes = report_mod.verify_fact(diagrams, samples=args.samples)
    if args.json:
        print(json.dumps(_outcome_payload(outcomes), sort_keys=True))
    else:
        for o in outcomes:
            print(o.text())
    return 0 if all(o.passed for o in outcomes) else 1


def cmd_report(args) -> int:
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)
    outcomes = report_mod.run_all_sweeps()
    csv_path = outdir / "verification.csv"
    report_mod.write_csv(outcomes, csv_path)
    figures = report_mod.render_figures(outdir)
    ok = all(o.passed for o in outcomes)
    failed = [o for o in outcomes if not o.passed]
    print(f"wrote {csv_path} ({len(outcomes)} checks, {len(failed)} failed)")
    for path in figures:
        print(f"wrote {path}")
    for o in failed:
        print(o.text())
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zcolor",
        description="Integer colorings of link diagrams: generate, analyze, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a diagram file")
    gen_sub = gen.add_subparsers(dest="family", required=True)
    gp = gen_sub.add_parser("pretzel", help="pretzel diagram from twist counts")
    gp.add_argument("twists", help="comma-separated twist counts, e.g. 2,-2,2,-2")
    gt = gen_sub.add_parser("torus", help="closed-braid torus diagram")
    gt.add_argument("--p", type=int, required=True, help="winding count (nonzero)")
    gt.add_argument("--n", type=int, required=True, help="strand count (>= 2)")
    for p in (gp, gt):
        p.add_argument("-o", "--output", help="output path (default <name>.json)")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(handler=cmd_gen)

    analyze = sub.add_parser("analyze", help="report invariants of a diagram file")
    analyze.add_argument("diagram")
    analyze.add_argument("--json", action="store_true")
    analyze.set_defaults(handler=cmd_analyze)

    det = sub.add_parser("det", help="determinant of a connected diagram")
    det.add_argument("diagram")
    det.add_argument("--json", action="store_true")
    det.set_defaults(handler=cmd_det)

    mc = sub.add_parser("mincolor", help="minimal distinct-color search")
    mc.add_argument("diagram")
    mc.add_argument("--bound", type=int, default=6, help="coefficient search bound")
    mc.add_argument("-o", "--output", help="write the witness coloring file here")
    mc.add_argument("--json", action="store_true")
    mc.set_defaults(handler=cmd_mincolor)

    color = sub.add_parser("color", help="check a coloring file against a diagram")
    color.add_argument("diagram")
    color.add_argument("coloring")
    color.add_argument("--json", action="store_true")
    color.set_defaults(handler=cmd_color)

    verify = sub.add_parser("verify", help="run a named verification")
    verify.add_argument("claim", choices=("thm1", "thm2", "thm3", "fact"))
    verify.add_argument("--p", type=int, default=1, help="thm1: winding count")
    verify.add_argument("--n", type=int, help="family parameter n")
    verify.add_argument("--strands", type=int, default=4, help="thm2: region count")
    verify.add_argument(
        "--samples", type=int, default=100, help="fact: random colorings per fixture"
    )
    verify.add_argument("fixtures", nargs="*", help="fact: diagram files (default: generated)")
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(handler=cmd_verify)

    rep = sub.add_parser("report", help="run all sweeps; write CSV and figures")
    rep.add_argument("-o", "--output", default="report", help="output directory")
    rep.set_defaults(handler=cmd_report)

    return parser


def _guard_negative_twists(argv: list[str]) -> list[str]:
    # Let `gen pretzel -2,3,6` work without an explicit "--" separator by
    # moving the twist token behind one.
    if len(argv) >= 3 and argv[0] == "gen" and argv[1] == "pretzel" and "--" not in argv:
        for i in range(2, len(argv)):
            token = argv[i]
            if argv[i - 1] in ("-o", "--output"):
                continue
            if len(token) >= 2 and token[0] == "-" and token[1].isdigit():
                return argv[:i] + argv[i + 1 :] + ["--", token]
    return argv


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _guard_negative_twists(list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if getattr(args, "claim", None) in ("thm1", "thm2", "thm3") and args.n is None:
        print("error: --n is required for this claim", file=sys.stderr)
        return 2
    try:
        return args.handler(args)
    except ZColorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())
