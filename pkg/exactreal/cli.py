"""
Command line for exactreal

    python -m exactreal eval "exp(1)" --digits 5
    python -m exactreal logistic --steps 100 --mode f64
    python -m exactreal bench --op add --n-range 1024:65536:x2 --csv add.csv
    python -m exactreal demo ode
    python -m exactreal ev --matrix 2,1,2 --prec 30
    python -m exactreal ode --problem relaxation --prec 10 --stream

Exit codes: 0 ok, 1 other failure, 2 domain error, 3 precision, resource
or promise failure, 4 parse or usage error. Results go to stdout,
diagnostics to stderr.
"""
import argparse
import csv
import logging
import sys
from contextlib import nullcontext
from typing import List, Optional

from . import __version__
from .config import configure_logging
from .errors import EXIT_DOMAIN, EXIT_OK, EXIT_PARSE, ExactRealError
from .models.dyadic import Dyadic
from .models.expr import format_number
from .models.matrix import SymMat2
from .schemas.evaluate import OutputFormat
from .schemas.logistic import LogisticMode
from .services.bench import BENCH_OPS, DEFAULT_SEED, BenchmarkService, parse_range
from .services.demos import DEMO_NAMES, demo_ev, format_report, run_demo
from .services.enrich import eigenpair, residual
from .services.evaluator import EvalConfig, approx_dyadic
from .services.expression import ExpressionService
from .services.logistic import LogisticMapService
from .services.ode import fixtures, solve_ivp_trace
from .services.parser import parse_number

logger = logging.getLogger(__name__)

BENCH_HELP = """\
deterministic inputs per op:
  add, mul   two random n-bit dyadics in [0, 1), seeded by n
  exp        exp(2^k), k defaults to 0
  hexp       hexp(2^(-2^j)), j = k or ceil(log2 n) by default
  series     series with coefficients 2^k on [-1/2, 1/2], at x = 1/2
  max        MAX of t(1 - t) on [0, 1]
  integrate  integral of t(1 - t) over [0, 1]
  ode        y' = (1 - y)/2 at t = 1
"""


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with the parse code instead of argparse's 2"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _number(text: str):
    try:
        return parse_number(text)
    except ExactRealError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _precision(args) -> EvalConfig:
    cfg = EvalConfig.from_settings()
    if getattr(args, "growth", None):
        cfg = EvalConfig(**{**cfg.model_dump(), "precision_growth": args.growth})
    return cfg


def cmd_eval(args) -> int:
    result = ExpressionService.evaluate(
        args.expr, prec=args.prec, digits=args.digits,
        fmt=OutputFormat(args.format), cfg=_precision(args),
    )
    print(result.value)
    return EXIT_OK


def cmd_logistic(args) -> int:
    result = LogisticMapService.run(
        args.steps, mode=LogisticMode(args.mode), r=args.r, x0=args.x0,
        digits=args.digits, cfg=_precision(args), rational_cap=args.rational_cap,
    )
    print(result.value)
    logger.info(f"logistic {result.mode.value} m={result.steps} in {result.elapsed_s:.3f}s")
    if not result.within_budget:
        print(f"warning: {result.elapsed_s:.1f}s exceeds the time budget", file=sys.stderr)
    return EXIT_OK


def cmd_bench(args) -> int:
    ns = parse_range(args.n_range)
    records = BenchmarkService.sweep(args.op, ns, k=args.k, cfg=_precision(args), seed=args.seed)
    if args.csv and args.csv != "-":
        with open(args.csv, "w", newline="") as stream:
            BenchmarkService.write_csv(records, stream)
    else:
        BenchmarkService.write_csv(records, sys.stdout)
    failed = [r for r in records if r.status != "ok"]
    if failed:
        print(f"{len(failed)} of {len(records)} rows failed", file=sys.stderr)
    return EXIT_OK


def cmd_demo(args) -> int:
    report = run_demo(args.name, _precision(args))
    print(format_report(report))
    return EXIT_OK


def _decimal(d: Dyadic) -> str:
    return format_number(d.to_fraction())


def cmd_ev(args) -> int:
    cfg = _precision(args)
    if args.matrix is None:
        print(format_report(demo_ev(args.prec, count=args.count, seed=args.seed, cfg=cfg)))
        return EXIT_OK

    entries = [_number(part) for part in args.matrix.split(",")]
    if len(entries) != 3:
        raise argparse.ArgumentTypeError("--matrix takes a11,a12,a22")
    M = SymMat2.from_rationals(*entries)
    lam, v = eigenpair(M, args.advice, cfg)
    r = residual(M, lam, v)
    n = args.prec
    a11, a12, a22 = (format_number(e) for e in entries)
    print(f"matrix   [[{a11}, {a12}], [{a12}, {a22}]]")
    print(f"advice   distinct_count={args.advice}")
    print(f"lambda   {_decimal(approx_dyadic(lam, n, cfg))}")
    print(f"v        ({_decimal(approx_dyadic(v[0], n, cfg))}, {_decimal(approx_dyadic(v[1], n, cfg))})")
    print(f"residual ({_decimal(approx_dyadic(r[0], n, cfg))}, {_decimal(approx_dyadic(r[1], n, cfg))})")
    print(f"error    2^-{n} per component")
    return EXIT_OK


def cmd_ode(args) -> int:
    problems = {p.name: p for p in fixtures()}
    problem = problems[args.problem]
    t = Dyadic.from_fraction(args.t) if args.t is not None else Dyadic(1)
    nodes = solve_ivp_trace(problem, args.prec, t=t, stream=args.stream)
    target = open(args.csv, "w", newline="") if args.csv else nullcontext(sys.stdout)
    with target as stream:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(("t", "center", "radius"))
        for node in nodes:
            writer.writerow((_decimal(node.t), _decimal(node.value.center), _decimal(node.value.radius)))
    return EXIT_OK


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="exactreal", description="exact real arithmetic with guaranteed error")
    parser.add_argument("-V", "--version", action="version", version=f"exactreal {__version__}")
    parser.add_argument("--log-level", default=None, help="log level on stderr (default from EXACTREAL_LOG_LEVEL)")
    parser.add_argument("--json-logs", action="store_true", default=None, help="JSON log records")
    parser.add_argument(
        "--growth", type=int, default=None,
        help="precision growth factor of the restart loop (default from EXACTREAL_PRECISION_GROWTH)",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    p = sub.add_parser("eval", help="evaluate an expression")
    p.add_argument("expr")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--prec", type=int, help="absolute error 2^-prec")
    group.add_argument("--digits", type=int, help="absolute error 10^-digits (default 10)")
    p.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.DEC.value)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("logistic", help="iterate x <- r x (1 - x)")
    p.add_argument("--steps", type=int, required=True, help="number of iterations m")
    p.add_argument("--mode", choices=[m.value for m in LogisticMode], default=LogisticMode.EXACT.value)
    p.add_argument("--r", default="15/4", help="parameter in (1, 4), as p/q, decimal or m*2^e")
    p.add_argument("--x0", default="1/2", help="start value in [0, 1]")
    p.add_argument("--digits", type=int, default=10)
    p.add_argument("--rational-cap", type=int, default=None, help="step cap of rational mode")
    p.set_defaults(func=cmd_logistic)

    p = sub.add_parser(
        "bench", help="bit-cost benchmark sweep",
        epilog=BENCH_HELP, formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--op", choices=BENCH_OPS, required=True)
    p.add_argument("--n-range", required=True, help="a:b:s (arithmetic) or a:b:xs (geometric)")
    p.add_argument("--k", type=int, default=None, help="magnitude or enrichment parameter")
    p.add_argument("--csv", default=None, help="output path, stdout when omitted")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("demo", help="closed-form fixture reports")
    p.add_argument("name", choices=DEMO_NAMES)
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser("ev", help="eigenpair of a symmetric 2x2 matrix")
    p.add_argument("--matrix", default=None, help="a11,a12,a22; random matrices when omitted")
    p.add_argument("--advice", type=int, choices=(1, 2), default=2, help="number of distinct eigenvalues")
    p.add_argument("--prec", type=int, default=30)
    p.add_argument("--count", type=int, default=5, help="random matrices")
    p.add_argument("--seed", type=int, default=7)
    p.set_defaults(func=cmd_ev)

    p = sub.add_parser("ode", help="Euler enclosure trace as CSV (t,center,radius)")
    p.add_argument("--problem", choices=[f.name for f in fixtures()], default="relaxation")
    p.add_argument("--prec", type=int, default=10)
    p.add_argument("--t", type=_number, default=None, help="end time in [0, 1], a dyadic")
    p.add_argument("--stream", action="store_true", help="write nodes as they are produced")
    p.add_argument("--csv", default=None, help="output path, stdout when omitted")
    p.set_defaults(func=cmd_ode)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level, args.json_logs)
    try:
        return args.func(args)
    except ExactRealError as exc:
        print(f"error: {exc.kind}: {exc}", file=sys.stderr)
        return exc.exit_code
    except argparse.ArgumentTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
