"""Command-line entry point: ``krawtchouk-np <command> ...``.

Exit status is 0 exactly when every check of the command passes.  Reports go
to stdout (text, ``--json`` or ``--csv``); with ``--out-dir`` or
``KRAWTCHOUK_OUT_DIR`` set, the JSON report is also written there.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from . import experiments as ex
from .newton import coefficient_valuations, newton_polygon
from .krawtchouk import krawtchouk_poly
from .render import polygon_svg, polygon_text
from .sweep import SweepConfig, conjecture_sweep, summary_path

OUT_DIR_ENV = "KRAWTCHOUK_OUT_DIR"


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # the same flags are accepted before and after the subcommand
    off = argparse.SUPPRESS if suppress else False
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=off, help="print the report as JSON")
    fmt.add_argument("--csv", action="store_true", default=off, help="print the main table as CSV")
    parser.add_argument("--quiet", action="store_true", default=off, help="no output; exit status only")
    parser.add_argument(
        "--out-dir",
        default=argparse.SUPPRESS if suppress else None,
        help=f"also write the JSON report here (default ${OUT_DIR_ENV})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="krawtchouk-np", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    repro = sub.add_parser("repro", help="reproduce worked examples").add_subparsers(dest="target", required=True)
    p = repro.add_parser("np-example", parents=[common], help="2-adic table and polygon of K_n^(n)")
    p.add_argument("--degree", type=int, default=None, help="n (default 19, compared against the listed table)")
    p.add_argument("--svg", nargs="?", const="np-example.svg", default=None, metavar="PATH", help="write the polygon as SVG")
    p = repro.add_parser("k20", parents=[common], help="discriminant and Frobenius data for m=10, t=20")
    p.add_argument("--prime-bound", type=int, default=ex.K20_PRIME_BOUND)
    p = repro.add_parser("cubics", parents=[common], help="depressed degree-3 underlying polynomials")
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p = repro.add_parser("n3", parents=[common], help="cubics, sextic cross-check and point search together")
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--height", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)

    verify = sub.add_parser("verify", help="verification sweeps").add_subparsers(dest="target", required=True)
    p = verify.add_parser("theorem", parents=[common], help="degree-based polygons on the integer windows")
    p.add_argument("--n-max", type=int, default=64)
    p = verify.add_parser("distinguished", parents=[common], help="valuations of the distinguished coefficients at t = n")
    p.add_argument("--n-max", type=int, default=64)
    p = verify.add_parser("corollary", parents=[common], help="Eisenstein at 2 for degree 2^k")
    p.add_argument("--k-max", type=int, default=6)
    p = verify.add_parser("prop-minus1", parents=[common], help="t = -1, degree 2^k")
    p.add_argument("--k-max", type=int, default=6)

    p = sub.add_parser("sweep", parents=[common], help="Galois sweep over t = a/b")
    p.add_argument("--n-min", type=int, default=1, help="smallest underlying degree")
    p.add_argument("--n-max", type=int, default=12, help="largest underlying degree")
    p.add_argument("--num-bound", type=int, default=50)
    p.add_argument("--den-bound", type=int, default=50)
    p.add_argument("--delta", type=int, action="append", choices=(0, 1), help="repeatable; default both")
    p.add_argument("--prime-bound", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default=None, help="CSV path (default <out-dir>/sweep.csv)")
    p.add_argument("--resume", action="store_true", help="reuse finished blocks of an interrupted run")
    p.add_argument("--timings", action="store_true", help="fill runtime_ms (makes output run-dependent)")

    p = sub.add_parser("hyper", parents=[common], help="rational points on the genus-2 curves")
    p.add_argument("--delta", type=int, choices=(0, 1), default=None, help="one curve; default compares both with the listed points")
    p.add_argument("--height", type=int, default=20)

    cross = sub.add_parser("crosscheck", help="consistency checks").add_subparsers(dest="target", required=True)
    p = cross.add_parser("sextic", parents=[common], help="sextic vs discriminant of the depressed cubic")
    p.add_argument("--delta", type=int, choices=(0, 1), required=True)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def _checks_csv(report: ex.Report) -> str:
    return _csv([["check", "ok", "detail"]] + [[c.name, c.ok, c.detail] for c in report.checks])


def _run(args, out_dir: Path | None) -> tuple[ex.Report, str | None]:
    """The report and, when the command has one, its main table as CSV."""
    cmd = args.command
    target = getattr(args, "target", None)
    if cmd == "repro" and target == "np-example":
        rep = ex.repro_example_np(args.degree)
        table = [["j", "v2"]] + rep.data["table"]
        n = rep.data["n"]
        f = krawtchouk_poly(n, n)
        points = coefficient_valuations(f, 2)
        rep.data["plot"] = polygon_text(points, newton_polygon(f, 2))
        if args.svg:
            svg_path = Path(args.svg)
            if out_dir and not svg_path.is_absolute():
                svg_path = out_dir / svg_path
            svg_path.parent.mkdir(parents=True, exist_ok=True)
            svg_path.write_text(polygon_svg(points, newton_polygon(f, 2)))
            rep.data["svg"] = str(svg_path)
        return rep, _csv(table)
    if cmd == "repro" and target == "k20":
        rep = ex.repro_k20(args.prime_bound)
        rows = [["p", "cycle_type"]] + [
            [w["p"], " ".join(map(str, w["cycle_type"]))] for w in rep.data["report"]["witnesses"]
        ]
        return rep, _csv(rows)
    if cmd == "repro" and target == "cubics":
        return ex.repro_depressed_cubics(args.samples, args.seed), None
    if cmd == "repro" and target == "n3":
        return ex.n3_example(args.samples, args.height, args.seed), None
    if cmd == "verify":
        fn = {
            "theorem": lambda: ex.verify_theorem(args.n_max),
            "distinguished": lambda: ex.verify_distinguished(args.n_max),
            "corollary": lambda: ex.verify_corollary(args.k_max),
            "prop-minus1": lambda: ex.verify_prop_minus1(args.k_max),
        }[target]
        return fn(), None
    if cmd == "hyper":
        if args.delta is None:
            rep = ex.repro_hyperelliptic(args.height)
            rows = [["delta", "t", "s", "sieve"]] + [
                [p["delta"], p["t"], p["s"], p["sieve"]] for p in rep.data["points"]
            ]
            return rep, _csv(rows)
        pts = ex.hyperelliptic_search(args.delta, args.height)
        rep = ex.Report(f"rational points, delta={args.delta}, height <= {args.height}")
        rep.data = {"delta": args.delta, "height": args.height, "points": [[ex._q(t), ex._q(s)] for t, s in pts]}
        return rep, _csv([["t", "s"]] + rep.data["points"])
    if cmd == "crosscheck":
        return ex.crosscheck_sextic_vs_disc(args.delta, args.samples, args.seed), None
    if cmd == "sweep":
        config = SweepConfig(
            n_min=args.n_min,
            n_max=args.n_max,
            num_bound=args.num_bound,
            den_bound=args.den_bound,
            deltas=tuple(args.delta or (0, 1)),
            prime_bound=args.prime_bound,
            seed=args.seed,
            workers=args.workers,
            timings=args.timings,
        )
        out = Path(args.out) if args.out else (out_dir or Path(".")) / "sweep.csv"
        summary = conjecture_sweep(config, out, resume=args.resume)
        rep = ex.Report(f"specialisation sweep, n {config.n_min}..{config.n_max}, bounds {config.num_bound}/{config.den_bound}")
        rep.check("every grid point has a row", summary.rows == summary.distinct_points, f"{summary.rows} rows")
        w = summary.contradiction_witnesses
        rep.check(
            "no irreducible specialisation with square discriminant",
            not w,
            ", ".join(f"n={x['n']} delta={x['delta']} t={x['t']}" for x in w),
        )
        rep.data = summary.to_json() | {"csv": str(out), "summary": str(summary_path(out))}
        return rep, out.read_text()
    raise SystemExit(f"unknown command {cmd} {target or ''}")


def _command_name(args) -> str:
    target = getattr(args, "target", None)
    return args.command + (f"-{target}" if target else "")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out_dir = args.out_dir or os.environ.get(OUT_DIR_ENV)
    out_dir = Path(out_dir) if out_dir else None
    rep, table = _run(args, out_dir)
    payload = json.dumps(rep.to_json(), indent=2, sort_keys=True) + "\n"
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / f"{_command_name(args)}.json").write_text(payload)
    if not args.quiet:
        if args.json:
            sys.stdout.write(payload)
        elif args.csv:
            sys.stdout.write(table if table is not None else _checks_csv(rep))
        else:
            print("\n".join(rep.lines()))
            if "plot" in rep.data:
                print(rep.data["plot"])
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
