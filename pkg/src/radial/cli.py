"""Command-line front end: ``radial {expand,moment,triangle,verify,bench}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import algebra as A
from . import bench, verify
from .budget import BudgetExceededError
from .engine import (
    CUSTOM,
    MODES,
    PAPER_TEXT,
    VERIFIED,
    RelationParams,
    expand_xk_Xn,
    paper_expansion,
    paper_trace_closed_form,
    triangle,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_INVARIANT = 4

PAPER_BANNER = "# paper-text mode: printed coefficients (b = N-1); these disagree with the group ring"


class UsageError(ValueError):
    pass


def _nonneg(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {s}")
    return v


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def _int_list(s: str) -> list[int]:
    try:
        return [int(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}") from None


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--N", type=_positive, default=2, help="number of free generators (default 2)")
    p.add_argument("--k", type=_nonneg, default=None, help="power of the generating operator x")
    p.add_argument("--n", type=_nonneg, default=None, help="radial index of X_n")
    p.add_argument("--mode", choices=MODES, default=VERIFIED)
    p.add_argument("--a", type=int, default=None, help="custom constant in X1 X1 = X2 + a e")
    p.add_argument("--b", type=int, default=None, help="custom coefficient in X1 Xm = X(m+1) + b X(m-1)")
    p.add_argument("--format", choices=("plain", "json", "csv"), default=None)
    p.add_argument("--budget", type=_positive, default=None, help="cap on group-ring accumulation events")
    p.add_argument("--value-only", action="store_true")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="radial", description="Radial expansions and moments in Z[F_N].")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="expand x^k X_n in the radial basis")
    p.add_argument("--paper-procedure", action="store_true",
                   help="paper-text only: follow the printed closed-form procedure instead of single steps")

    sub.add_parser("moment", parents=[common], help="trace of x^k X_n: printed value, engine, oracle")

    p = sub.add_parser("triangle", parents=[common], help="rows of the triangle for (r + c)^p")
    p.add_argument("--p", type=_nonneg, default=3)

    p = sub.add_parser("verify", parents=[common], help="engine versus oracle over a grid")
    p.add_argument("--grid", default=None, metavar="NMAX[,KMAX[,nMAX]]",
                   help="grid bounds; missing entries take the defaults 3,5,4; NMAX 0 gives an empty grid")
    p.add_argument("--output", default=None, help="write the report here instead of stdout")

    p = sub.add_parser("bench", parents=[common], help="time oracle convolution against the recurrence")
    p.add_argument("--reps", type=int, default=bench.MIN_REPS)
    p.add_argument("--N-list", type=_int_list, default=None)
    p.add_argument("--n-list", type=_int_list, default=None)
    return parser


def _params(args) -> RelationParams:
    if args.mode == CUSTOM and (args.a is None or args.b is None):
        raise UsageError("--mode custom requires --a and --b")
    return RelationParams.preset(args.mode, args.N, args.a, args.b)


def _kn(args) -> tuple[int, int]:
    return (args.k or 0, args.n or 0)


def cmd_expand(args) -> str:
    params = _params(args)
    k, n = _kn(args)
    if args.paper_procedure:
        if args.mode != PAPER_TEXT:
            raise UsageError("--paper-procedure only applies to --mode paper-text")
        vec = paper_expansion(args.N, k, n)
    else:
        vec = expand_xk_Xn(params, k, n)
    fmt = args.format or "plain"
    if fmt == "json":
        return json.dumps(vec.to_json(), sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("index", "coeff"))
        for j, c in enumerate(vec.coeffs):
            w.writerow((j, c))
        return buf.getvalue()
    text = vec.render() + "\n"
    if params.mode == PAPER_TEXT:
        text = PAPER_BANNER + "\n" + text
    return text


def cmd_moment(args) -> str:
    params = _params(args)
    k, n = _kn(args)
    engine = expand_xk_Xn(params, k, n)[0]
    if args.value_only:
        return f"{engine}\n"
    paper = paper_trace_closed_form(args.N, k, n)
    try:
        oracle: int | None = A.trace(A.oracle_xk_Xn(args.N, k, n, args.budget))
    except BudgetExceededError:
        oracle = None
    fmt = args.format or "plain"
    if fmt == "json":
        data = {"N": args.N, "k": k, "n": n, "mode": params.mode, "paper": str(paper), "engine": str(engine),
                "oracle": None if oracle is None else str(oracle)}
        return json.dumps(data, sort_keys=True) + "\n"
    if fmt == "csv":
        return f"N,k,n,mode,paper,engine,oracle\n{args.N},{k},{n},{params.mode},{paper},{engine},{'' if oracle is None else oracle}\n"
    return f"paper={paper} engine={engine} oracle={'skipped' if oracle is None else oracle}\n"


def _triangle_constant(args) -> int:
    if args.mode == PAPER_TEXT:
        return args.N - 1
    if args.mode == VERIFIED:
        return 2 * args.N - 1
    return _params(args).b


def cmd_triangle(args) -> str:
    c = _triangle_constant(args)
    rows = triangle(args.p, c)
    fmt = args.format or "plain"
    if fmt == "json":
        return json.dumps({"c": str(c), "rows": [[str(x) for x in r.entries] for r in rows]}, sort_keys=True) + "\n"
    if fmt == "csv":
        return "".join(",".join([str(r.p)] + [str(x) for x in r.entries]) + "\n" for r in rows)
    return "".join(" ".join(str(x) for x in r.entries) + "\n" for r in rows)


def _grid(args) -> tuple[int, int, int]:
    bounds = list(verify.DEFAULT_GRID)
    if args.grid is not None:
        try:
            given = [int(x) for x in args.grid.split(",")]
        except ValueError:
            raise UsageError(f"bad --grid value {args.grid!r}") from None
        if not 1 <= len(given) <= 3 or any(v < 0 for v in given):
            raise UsageError(f"bad --grid value {args.grid!r}")
        bounds[: len(given)] = given
    return tuple(bounds)


def cmd_verify(args) -> tuple[str, int]:
    N_max, k_max, n_max = _grid(args)
    report = verify.discrepancy_report(N_max, k_max, n_max, limit=args.budget)
    fmt = args.format or "json"
    if fmt == "plain":
        text = verify.report_text(report)
    elif fmt == "csv":
        text = verify.report_csv(report)
    else:
        text = verify.report_json(report)
    code = EXIT_OK if verify.verified_rows_agree(report) else EXIT_INVARIANT
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        return "", code
    return text, code


def cmd_bench(args) -> str:
    N_list = args.N_list or [args.N]
    n_list = args.n_list or [args.n if args.n is not None else 3]
    k = args.k if args.k is not None else 1
    if args.reps < bench.MIN_REPS:
        raise UsageError(f"--reps must be at least {bench.MIN_REPS}")
    if (args.format or "csv") == "json":
        out = []
        for N in N_list:
            for n in n_list:
                out += [r.to_json() for r in bench.bench_oracle_vs_engine(N, k, n, args.reps, args.budget)]
        return json.dumps(out, sort_keys=True, indent=2) + "\n"
    return bench.emit_scaling_report(N_list, n_list, args.reps, k, args.budget)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    code = EXIT_OK
    try:
        if args.command == "expand":
            out = cmd_expand(args)
        elif args.command == "moment":
            out = cmd_moment(args)
        elif args.command == "triangle":
            out = cmd_triangle(args)
        elif args.command == "verify":
            out, code = cmd_verify(args)
        else:
            out = cmd_bench(args)
    except BudgetExceededError as exc:
        print(f"radial: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (A.RadialStructureError, AssertionError) as exc:
        print(f"radial: invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ValueError as exc:
        print(f"radial: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
