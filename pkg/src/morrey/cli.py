"""Command-line interface.

Subcommands:

    morrey norm      --space p,q,d --input FILE [--engine auto|naive|prefix]
    morrey witness   --space p,q,d [--n N] [--tol T] [--out-prefix PATH]
    morrey constant  --name NAME --space p,q,d [--s S] [--radius R] ...
    morrey table     --space p,q,d --s-list 1,2,3 [--tol T]

Exit codes: 0 success, 1 a verification check failed, 2 usage or domain
error, 3 resource limit.  ``--format json`` and ``--format csv`` emit
machine-readable reports that are byte-identical across runs with the same
flags; the human table adds elapsed wall time.
"""

from __future__ import annotations

import argparse
import sys
import time

from .constants import kind_from_name, nonsquareness_verdict
from .errors import DomainError, FormatError, MorreyError, ResourceError, SizeError
from .norms import DEFAULT_CELL_BUDGET, SpaceParams, norm
from .report import (
    fnum,
    norms_doc,
    norms_inline,
    render_csv,
    render_json,
    sequence_doc,
    sequence_inline,
    space_doc,
)
from .search import SearchConfig, maximize_quotient
from .seqio import load_sequence, save_sequence
from .witness import (
    build_witness,
    verify_theorem,
    witness_threshold,
)

EQUALS_TWO_STATEMENT = (
    "equals 2 (analytic upper bound attained); space is not uniformly nonsquare"
)


def _space(text: str) -> SpaceParams:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected p,q,d, got {text!r}")
    try:
        return SpaceParams(float(parts[0]), float(parts[1]), int(parts[2]))
    except (ValueError, DomainError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _s_list(text: str) -> list[float]:
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated reals, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("--s-list must name at least one exponent")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="morrey",
        description="Discrete Morrey norms on Z^d and the geometric constants they maximize.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_norm = sub.add_parser("norm", help="norm of a sequence read from a file")
    p_norm.add_argument("--space", type=_space, required=True, metavar="p,q,d")
    p_norm.add_argument("--input", required=True, help="sequence file path")
    p_norm.add_argument("--engine", choices=["auto", "naive", "prefix"], default="auto")
    p_norm.add_argument("--cell-budget", type=int, default=DEFAULT_CELL_BUDGET,
                        help="dense cell budget for the prefix engine")
    p_norm.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p_norm.set_defaults(func=cmd_norm)

    p_wit = sub.add_parser("witness", help="build the extremal pair and check its norms")
    p_wit.add_argument("--space", type=_space, required=True, metavar="p,q,d")
    p_wit.add_argument("--n", type=int, default=None, help="even offset; defaults to the minimum")
    p_wit.add_argument("--tol", type=float, default=1e-9)
    p_wit.add_argument("--out-prefix", default=None,
                       help="write the pair to <prefix>_x.seq and <prefix>_y.seq")
    p_wit.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p_wit.set_defaults(func=cmd_witness)

    p_con = sub.add_parser("constant", help="search a lower bound for one constant")
    p_con.add_argument("--name", required=True,
                       help="nj-gen|nj-mod|nj-mod-gen|ninf|ninf-gen|zbaganu|zbaganu-gen|james")
    p_con.add_argument("--space", type=_space, required=True, metavar="p,q,d")
    p_con.add_argument("--s", type=float, default=None, help="exponent for the *-gen constants")
    p_con.add_argument("--radius", type=int, default=2, help="support box half-width")
    p_con.add_argument("--restarts", type=int, default=8)
    p_con.add_argument("--iters", type=int, default=60, help="hill-climb sweeps per restart")
    p_con.add_argument("--seed", type=int, default=0)
    p_con.add_argument("--tol", type=float, default=1e-9)
    p_con.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p_con.set_defaults(func=cmd_constant)

    p_tab = sub.add_parser("table", help="all eight constants at the extremal pair")
    p_tab.add_argument("--space", type=_space, required=True, metavar="p,q,d")
    p_tab.add_argument("--s-list", type=_s_list, default=[1.0, 2.0, 3.0], metavar="S1,S2,...")
    p_tab.add_argument("--tol", type=float, default=1e-9)
    p_tab.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p_tab.set_defaults(func=cmd_table)
    return parser


def cmd_norm(args: argparse.Namespace) -> int:
    sp: SpaceParams = args.space
    x = load_sequence(args.input)
    started = time.perf_counter()
    result = norm(x, sp, engine=args.engine, cell_budget=args.cell_budget)
    elapsed = time.perf_counter() - started
    win = result.argmax.window
    if args.format == "json":
        doc = {
            "command": "norm",
            "space": space_doc(sp),
            "input": args.input,
            "engine_requested": args.engine,
            "result": {
                "norm": result.norm,
                "argmax": {
                    "center": list(win.center),
                    "radius": win.radius,
                    "value": result.argmax.value,
                },
                "engine": result.engine,
            },
        }
        sys.stdout.write(render_json(doc))
    elif args.format == "csv":
        header = ["norm", "center", "radius", "window_value", "engine"]
        row = [result.norm, " ".join(str(c) for c in win.center), win.radius,
               result.argmax.value, result.engine]
        sys.stdout.write(render_csv(header, [row]))
    else:
        center = ",".join(str(c) for c in win.center)
        print(f"space: p={sp.p:g} q={sp.q:g} d={sp.d}")
        print(f"input: {args.input} ({len(x)} support points)")
        print(f"norm: {fnum(result.norm)}")
        print(f"argmax window: center ({center}), radius {win.radius}, value {fnum(result.argmax.value)}")
        print(f"engine: {result.engine}")
        print(f"elapsed: {elapsed:.3f} s")
    return 0


def cmd_witness(args: argparse.Namespace) -> int:
    sp: SpaceParams = args.space
    tol = args.tol
    started = time.perf_counter()
    pair = build_witness(sp, args.n)
    report = verify_theorem(sp, [2.0], tol=tol, n=pair.params.n, raise_on_failure=False)
    elapsed = time.perf_counter() - started
    norms = report.norms
    checks = {
        "norm_x": abs(norms.x - 1.0) <= tol,
        "norm_y": abs(norms.y - 1.0) <= tol,
        "norm_plus": abs(norms.plus - 2.0) <= tol,
        "norm_minus": abs(norms.minus - 2.0) <= tol,
    }
    passed = all(checks.values())
    threshold = witness_threshold(sp)
    if args.out_prefix:
        save_sequence(pair.x, f"{args.out_prefix}_x.seq")
        save_sequence(pair.y, f"{args.out_prefix}_y.seq")
    if args.format == "json":
        doc = {
            "command": "witness",
            "space": space_doc(sp),
            "n": pair.params.n,
            "threshold": threshold,
            "tol": tol,
            "x": sequence_doc(pair.x),
            "y": sequence_doc(pair.y),
            "norms": norms_doc(norms),
            "checks": checks,
            "passed": passed,
        }
        sys.stdout.write(render_json(doc))
    elif args.format == "csv":
        header = ["n", "threshold", "norm_x", "norm_y", "norm_plus", "norm_minus", "passed"]
        row = [pair.params.n, threshold, norms.x, norms.y, norms.plus, norms.minus, passed]
        sys.stdout.write(render_csv(header, [row]))
    else:
        print(f"space: p={sp.p:g} q={sp.q:g} d={sp.d}")
        print(f"n: {pair.params.n} (must exceed threshold {fnum(threshold)})")
        print(f"x: {sequence_inline(pair.x)}")
        print(f"y: {sequence_inline(pair.y)}")
        print(f"norms: {norms_inline(norms)}")
        for name, ok in checks.items():
            print(f"check {name}: {'pass' if ok else 'FAIL'}")
        if args.out_prefix:
            print(f"wrote {args.out_prefix}_x.seq and {args.out_prefix}_y.seq")
        print(f"elapsed: {elapsed:.3f} s")
    return 0 if passed else 1


def cmd_constant(args: argparse.Namespace) -> int:
    sp: SpaceParams = args.space
    kind = kind_from_name(args.name, args.s)
    cfg = SearchConfig(
        radius=args.radius,
        restarts=args.restarts,
        max_iters=args.iters,
        seed=args.seed,
    )
    started = time.perf_counter()
    cert = maximize_quotient(kind, sp, cfg)
    elapsed = time.perf_counter() - started
    equals_two = cert.value >= 2.0 - args.tol
    verdict = nonsquareness_verdict(cert.value, args.tol, source="lower-bound")
    if args.format == "json":
        doc = {
            "command": "constant",
            "space": space_doc(sp),
            "params": {
                "name": kind.family.value,
                "s": kind.s,
                "radius": cfg.radius,
                "restarts": cfg.restarts,
                "iters": cfg.max_iters,
                "seed": cfg.seed,
                "step_init": cfg.step_init,
                "step_min": cfg.step_min,
                "tol": args.tol,
            },
            "result": {
                "lower_bound": cert.value,
                "norms": norms_doc(cert.norms),
                "x": sequence_doc(cert.x),
                "y": sequence_doc(cert.y),
                "restart": cert.restart,
                "evaluations": cert.evaluations,
                "equals_two": equals_two,
                "verdict": verdict.value,
            },
        }
        sys.stdout.write(render_json(doc))
    elif args.format == "csv":
        header = ["constant", "s", "lower_bound", "norm_x", "norm_y", "norm_plus",
                  "norm_minus", "restart", "evaluations", "equals_two", "verdict"]
        row = [kind.family.value, "" if kind.s is None else kind.s, cert.value,
               cert.norms.x, cert.norms.y, cert.norms.plus, cert.norms.minus,
               cert.restart, cert.evaluations, equals_two, verdict.value]
        sys.stdout.write(render_csv(header, [row]))
    else:
        print(f"space: p={sp.p:g} q={sp.q:g} d={sp.d}")
        print(f"{kind.label} >= {fnum(cert.value)}")
        print(f"norms: {norms_inline(cert.norms)}")
        print(f"pair x: {sequence_inline(cert.x)}")
        print(f"pair y: {sequence_inline(cert.y)}")
        print(f"restart: {cert.restart}  evaluations: {cert.evaluations}")
        if equals_two:
            print(EQUALS_TWO_STATEMENT)
        print(f"elapsed: {elapsed:.3f} s")
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    sp: SpaceParams = args.space
    started = time.perf_counter()
    report = verify_theorem(sp, args.s_list, tol=args.tol, raise_on_failure=False)
    elapsed = time.perf_counter() - started
    rows = [
        {
            "constant": row.kind.family.value,
            "s": row.kind.s,
            "witness_quotient": row.witness_quotient,
            "reported_value": row.reported_value,
            "passed": row.passed,
        }
        for row in report.rows
    ]
    if args.format == "json":
        doc = {
            "command": "table",
            "space": space_doc(sp),
            "s_list": list(args.s_list),
            "tol": args.tol,
            "n": report.pair.params.n,
            "norms": norms_doc(report.norms),
            "norms_ok": report.norms_ok,
            "rows": rows,
            "all_passed": report.all_passed,
        }
        sys.stdout.write(render_json(doc))
    elif args.format == "csv":
        header = ["constant", "s", "witness_quotient", "reported_value", "passed"]
        sys.stdout.write(render_csv(
            header,
            [
                [r["constant"], "" if r["s"] is None else r["s"], r["witness_quotient"],
                 "" if r["reported_value"] is None else r["reported_value"], r["passed"]]
                for r in rows
            ],
        ))
    else:
        print(f"space: p={sp.p:g} q={sp.q:g} d={sp.d}  witness n={report.pair.params.n}  tol={args.tol:g}")
        print(f"norms: {norms_inline(report.norms)}  [{'ok' if report.norms_ok else 'FAIL'}]")
        print(f"{'constant':<14}{'s':>6}  {'witness quotient':<24}{'value':>6}  status")
        for r in rows:
            s_text = "-" if r["s"] is None else f"{r['s']:g}"
            value_text = "-" if r["reported_value"] is None else f"{r['reported_value']:g}"
            status = "pass" if r["passed"] else "FAIL"
            print(f"{r['constant']:<14}{s_text:>6}  {fnum(r['witness_quotient']):<24}{value_text:>6}  {status}")
        verdict = "all pass" if report.all_passed else "FAILURES PRESENT"
        print(f"result: {verdict} ({len(rows)} rows)")
        print(f"elapsed: {elapsed:.3f} s")
    return 0 if report.all_passed else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (DomainError, FormatError, SizeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MorreyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
